#include "g3enum/descendant.hpp"

#include <string>
#include <vector>

#include "g3enum/errors.hpp"
#include "g3enum/gw_core.hpp"

namespace g3enum {

namespace {

// [head] + H x divisors + 1 x units + pt x points, as codimensions.
std::vector<int> codim_list(std::initializer_list<int> head, int divisors, int units,
                            int points) {
  std::vector<int> out(head);
  out.insert(out.end(), static_cast<std::size_t>(divisors), 1);
  out.insert(out.end(), static_cast<std::size_t>(units), 0);
  out.insert(out.end(), static_cast<std::size_t>(points), 2);
  return out;
}

}  // namespace

DescendantEvaluator::DescendantEvaluator(Session& session, DescRoute route)
    : session_(session), route_(route) {}

ExactScalar DescendantEvaluator::operator()(const DescKey& key) { return lookup(key); }

ExactScalar DescendantEvaluator::lookup(const DescKey& key) {
  if (route_.canonical() && key.u == 0 && key.d >= 1) {
    const InvariantKey memo_key(KeyKind::Desc, {key.d, key.n, key.h, key.i, key.m});
    return session_.memo().get_or_compute(memo_key, [&] { return compute(key); });
  }
  if (const auto it = local_.find(key); it != local_.end()) return it->second;
  auto value = compute(key);
  local_.emplace(key, value);
  return value;
}

ExactScalar DescendantEvaluator::compute(const DescKey& k) {
  if (k.i < 0 || k.i > 2 || k.m < 0 || k.n < 0 || k.h < 0 || k.u < 0 || k.d < 0) return 0;
  if (k.d == 0) return deg0_integral(codim_list({k.i}, k.h, k.u, k.n), k.m);
  if (k.i + k.m + k.n != 3 * k.d + k.u) return 0;
  if (k.m == 0) return genus0_primary(session_, k.d, codim_list({k.i}, k.h, k.u, 0), k.n);

  if (k.u > 0 && !route_.carry_insertions) {
    // string: <tau_m(g) 1 ...> = <tau_{m-1}(g) ...>
    return lookup({k.d, k.n, k.h, k.u - 1, k.i, k.m - 1});
  }

  if (k.n + k.h < 2 + route_.extra_padding) {
    // inverse divisor: <tau_m(H^i) H X> = d <tau_m(H^i) X> + <tau_{m-1}(H^{i+1}) X>
    const ExactScalar padded = lookup({k.d, k.n, k.h + 1, k.u, k.i, k.m});
    const ExactScalar shifted = lookup({k.d, k.n, k.h, k.u, k.i + 1, k.m - 1});
    return (padded - shifted) / ExactScalar(k.d);
  }
  return trr(k);
}

// <tau_m(g) A B X>_d = sum <tau_{m-1}(g) X_1 T_a>_{d_1} <T^a A B X_2>_{d_2}
// over degree splits, splits of X, and the diagonal basis {(1,pt),(H,H),(pt,1)}.
ExactScalar DescendantEvaluator::trr(const DescKey& k) {
  int points = k.n;
  int divisors = k.h;
  int refs[2] = {0, 0};
  for (int& r : refs) {
    const bool take_point = route_.reference == DescRoute::Reference::PointsFirst
                                ? points > 0
                                : divisors == 0;
    if (take_point) {
      r = 2;
      --points;
    } else {
      r = 1;
      --divisors;
    }
  }

  ExactScalar total = 0;
  for (int d1 = 0; d1 <= k.d; ++d1) {
    const int d2 = k.d - d1;
    for (int h1 = 0; h1 <= divisors; ++h1) {
      for (int n1 = 0; n1 <= points; ++n1) {
        for (int u1 = 0; u1 <= k.u; ++u1) {
          const ExactScalar ways =
              binomial(divisors, h1) * binomial(points, n1) * binomial(k.u, u1);
          for (int left_class = 0; left_class <= 2; ++left_class) {
            const auto right_codims =
                codim_list({refs[0], refs[1], 2 - left_class}, divisors - h1, k.u - u1, 0);
            const ExactScalar right = genus0_primary(session_, d2, right_codims, points - n1);
            if (right.is_zero()) continue;

            ExactScalar left;
            if (d1 == 0) {
              left = deg0_integral(codim_list({k.i, left_class}, h1, u1, n1), k.m - 1);
            } else if (left_class == 2) {
              left = lookup({d1, n1 + 1, h1, u1, k.i, k.m - 1});
            } else if (left_class == 1) {
              if (route_.carry_insertions) {
                left = lookup({d1, n1, h1 + 1, u1, k.i, k.m - 1});
              } else {
                left = ExactScalar(d1) * lookup({d1, n1, h1, u1, k.i, k.m - 1}) +
                       lookup({d1, n1, h1, u1, k.i + 1, k.m - 2});
              }
            } else {
              left = route_.carry_insertions ? lookup({d1, n1, h1, u1 + 1, k.i, k.m - 1})
                                             : lookup({d1, n1, h1, u1, k.i, k.m - 2});
            }
            if (!left.is_zero()) total += ways * left * right;
          }
        }
      }
    }
  }
  return total;
}

ExactScalar desc(Session& session, int d, int n, int i, int m) {
  if (d <= 0) throw DomainError("desc: degree must be positive, got " + std::to_string(d));
  if (i < 0 || i > 2 || n < 0 || m < 0) {
    throw DomainError("desc: need 0 <= i <= 2 and n, m >= 0");
  }
  DescendantEvaluator evaluate(session);
  return evaluate({d, n, 0, 0, i, m});
}

}  // namespace g3enum
