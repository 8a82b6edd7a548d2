#include "g3enum/invariant_key.hpp"

#include <charconv>

#include "g3enum/errors.hpp"

namespace g3enum {

std::string_view to_string(KeyKind kind) {
  switch (kind) {
    case KeyKind::Primary: return "PRIMARY";
    case KeyKind::Desc: return "DESC";
    case KeyKind::Mpsi: return "MPSI";
    case KeyKind::Rt: return "RT";
  }
  return "?";
}

std::string InvariantKey::str() const {
  std::string out(to_string(kind));
  out += ':';
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(params[k]);
  }
  return out;
}

InvariantKey InvariantKey::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ValidationError("invariant key without kind: '" + std::string(text) + "'");
  }
  InvariantKey key;
  const auto kind = text.substr(0, colon);
  if (kind == "PRIMARY") key.kind = KeyKind::Primary;
  else if (kind == "DESC") key.kind = KeyKind::Desc;
  else if (kind == "MPSI") key.kind = KeyKind::Mpsi;
  else if (kind == "RT") key.kind = KeyKind::Rt;
  else throw ValidationError("unknown invariant kind '" + std::string(kind) + "'");

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto field = rest.substr(0, comma);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      throw ValidationError("bad key parameter '" + std::string(field) + "'");
    }
    key.params.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) throw ValidationError("trailing comma in key '" + std::string(text) + "'");
  }
  return key;
}

std::size_t InvariantKeyHash::operator()(const InvariantKey& key) const noexcept {
  std::size_t h = static_cast<std::size_t>(key.kind) * 0x9e3779b97f4a7c15ULL;
  for (const auto p : key.params) {
    h ^= std::hash<std::int64_t>{}(p) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace g3enum
