#pragma once

#include <compare>
#include <map>

#include "g3enum/exact.hpp"
#include "g3enum/session.hpp"

namespace g3enum {

/// <tau_m(H^i), H^h, 1^u, pt^n>_d: one psi-carrying point with class H^i, h
/// divisor insertions, u fundamental-class insertions and n point constraints.
/// Public queries have h = u = 0. Nonzero only when i + m + n = 3d + u.
struct DescKey {
  int d = 0;
  int n = 0;
  int h = 0;
  int u = 0;
  int i = 0;
  int m = 0;

  friend auto operator<=>(const DescKey&, const DescKey&) = default;
};

/// How a descendant invariant is reduced. The canonical route takes point
/// constraints as the two TRR reference insertions, pads with divisors only
/// as far as needed, and strips fundamental classes by the string equation.
struct DescRoute {
  enum class Reference { PointsFirst, DivisorsFirst };
  Reference reference = Reference::PointsFirst;
  /// Divisor insertions beyond the minimum of two reference slots.
  int extra_padding = 0;
  /// Keep fundamental-class and divisor insertions produced by TRR splitting
  /// as ordinary insertions instead of removing them by string/divisor.
  bool carry_insertions = false;

  bool canonical() const {
    return reference == Reference::PointsFirst && extra_padding == 0 && !carry_insertions;
  }
};

/// Evaluates one-descendant genus-0 invariants of the plane by TRR plus
/// string, divisor and padding reductions. The canonical route memoizes in
/// the session's store; any other route keeps a private cache so that its
/// results are independent of canonical memo entries.
class DescendantEvaluator {
 public:
  explicit DescendantEvaluator(Session& session, DescRoute route = {});

  ExactScalar operator()(const DescKey& key);

 private:
  ExactScalar lookup(const DescKey& key);
  ExactScalar compute(const DescKey& key);
  ExactScalar trr(const DescKey& key);

  Session& session_;
  DescRoute route_;
  std::map<DescKey, ExactScalar> local_;
};

/// E(d, n, i, m) = <tau_m(H^i), pt^n>_d. Throws DomainError if d <= 0.
ExactScalar desc(Session& session, int d, int n, int i, int m);

}  // namespace g3enum
