#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "g3enum/exact.hpp"
#include "g3enum/session.hpp"

namespace g3enum {

/// RT_{g,d}(H^{c_1}, ..., H^{c_k}; pt, ..., pt): genus-g degree-d invariant of
/// the plane with the domain's complex structure and k marked points fixed
/// (carrying the classes H^{c}) and `free_points` moving point constraints.
struct RTQuery {
  int genus = 0;
  int degree = 1;
  std::vector<int> fixed_classes;
  int free_points = 0;
};

/// Sum of fixed codimensions plus free points equals 3d + 2(1 - g).
bool dimension_balanced(const RTQuery& query);

/// Evaluates by trading each handle for a pair of fixed points carrying the
/// diagonal (1,pt) + (H,H) + (pt,1), then degenerating the rigid genus-0
/// domain. Consults session.rt_overrides() for queries with no fixed classes.
/// Returns 0 when the dimension does not balance. Throws DomainError if the
/// query is out of range or the fixed-point domain is unstable (2g + k < 3).
ExactScalar rt(Session& session, const RTQuery& query);

/// Genus-0 invariant with k >= 3 fixed domain points, by degenerating the
/// domain to the caterpillar chain: the first component carries fixed points
/// 1 and 2, each middle one a single fixed point, the last the final two.
/// Throws DomainError for k < 3.
ExactScalar rigid0(Session& session, int d, std::span<const int> fixed_classes, int free_points);

/// rt() with the handle pairs appended to the fixed classes and the resulting
/// list permuted by `order` (entry p of the caterpillar is entry order[p] of
/// the expanded list). Not memoized.
ExactScalar rt_arranged(Session& session, const RTQuery& query,
                        std::span<const std::size_t> order);

}  // namespace g3enum
