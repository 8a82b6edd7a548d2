#include "g3enum/gw_core.hpp"

#include <array>
#include <string>
#include <vector>

#include "g3enum/errors.hpp"

namespace g3enum {

ExactScalar kontsevich(Session& session, int d) {
  if (d <= 0) throw DomainError("kontsevich: degree must be positive, got " + std::to_string(d));
  if (d == 1) return 1;
  return session.memo().get_or_compute(InvariantKey(KeyKind::Primary, {d}), [&] {
    ExactScalar sum = 0;
    for (int d1 = 1; d1 < d; ++d1) {
      const int d2 = d - d1;
      const ExactScalar bracket = ExactScalar(d2) * binomial(3 * d - 4, 3 * d1 - 2) -
                                  ExactScalar(d1) * binomial(3 * d - 4, 3 * d1 - 1);
      sum += kontsevich(session, d1) * kontsevich(session, d2) *
             ExactScalar(std::int64_t{d1} * d1 * d2) * bracket;
    }
    return sum;
  });
}

ExactScalar deg0_integral(std::span<const int> codims, int m) {
  const int k = static_cast<int>(codims.size());
  if (k < 3 || m != k - 3) return 0;
  int total = 0;
  for (const int c : codims) {
    if (c < 0) return 0;
    total += c;
  }
  return total == 2 ? 1 : 0;
}

ExactScalar genus0_primary(Session& session, int d, std::span<const int> codims, int n) {
  if (d < 0 || n < 0) return 0;
  for (const int c : codims) {
    if (c < 0 || c > 2) return 0;
  }
  if (d == 0) {
    std::vector<int> all(codims.begin(), codims.end());
    all.insert(all.end(), static_cast<std::size_t>(n), 2);
    return deg0_integral(all, 0);
  }
  int points = n;
  unsigned divisors = 0;
  for (const int c : codims) {
    if (c == 0) return 0;  // string equation with d >= 1
    if (c == 1) ++divisors;
    if (c == 2) ++points;
  }
  if (points != 3 * d - 1) return 0;
  return power(ExactScalar(d), divisors) * kontsevich(session, d);
}

ExactScalar primary(Session& session, int d, int n, int e) {
  const std::array<int, 1> codims{e};
  return genus0_primary(session, d, codims, n);
}

}  // namespace g3enum
