#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace g3enum {

enum class KeyKind {
  Primary,  ///< Kontsevich count N_d: (d)
  Desc,     ///< one-descendant invariant: (d, n, h, i, m)
  Mpsi,     ///< modified-psi number: (d, n, i, m, j)
  Rt,       ///< Ruan-Tian invariant: (g, d, n, sorted fixed classes...)
};

std::string_view to_string(KeyKind kind);

/// Canonical descriptor of one memoized invariant. Serializes as
/// "KIND:p1,p2,...", e.g. "DESC:2,0,0,2,4".
struct InvariantKey {
  KeyKind kind{KeyKind::Primary};
  std::vector<std::int64_t> params;

  InvariantKey() = default;
  InvariantKey(KeyKind k, std::initializer_list<std::int64_t> p) : kind(k), params(p) {}
  InvariantKey(KeyKind k, std::vector<std::int64_t> p) : kind(k), params(std::move(p)) {}

  std::string str() const;
  static InvariantKey parse(std::string_view text);

  friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
  friend std::strong_ordering operator<=>(const InvariantKey&, const InvariantKey&) = default;
};

struct InvariantKeyHash {
  std::size_t operator()(const InvariantKey& key) const noexcept;
};

}  // namespace g3enum
