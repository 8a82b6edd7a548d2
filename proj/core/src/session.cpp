#include "g3enum/session.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "g3enum/errors.hpp"

namespace g3enum {

RtOverrides RtOverrides::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read RT file " + path.string());
  RtOverrides out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    int g = 0;
    int d = 0;
    std::string value;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string extra;
    if (!(fields >> g >> d >> value) || (fields >> extra)) {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                            ": expected 'g d value'");
    }
    if (g < 0 || g > 3 || d < 1) {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                            ": genus must be 0..3 and degree >= 1");
    }
    out.set(g, d, ExactScalar::parse(value));
  }
  return out;
}

void RtOverrides::set(int genus, int degree, ExactScalar value) {
  values_.insert_or_assign({genus, degree}, std::move(value));
}

std::optional<ExactScalar> RtOverrides::find(int genus, int degree) const {
  const auto it = values_.find({genus, degree});
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

Session::Session(std::optional<std::filesystem::path> cache)
    : memo_(std::move(cache)) {}

std::optional<std::filesystem::path> Session::cache_path_from_environment() {
  const char* env = std::getenv("G3ENUM_CACHE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

}  // namespace g3enum
