#pragma once

#include <span>

#include "g3enum/exact.hpp"
#include "g3enum/session.hpp"

namespace g3enum {

/// N_d: irreducible rational degree-d plane curves through 3d - 1 general
/// points, by the degree-splitting recursion seeded with N_1 = 1.
/// Throws DomainError for d <= 0.
ExactScalar kontsevich(Session& session, int d);

/// Genus-0 invariant <H^e, pt^n>_d. Zero unless the dimension balances.
ExactScalar primary(Session& session, int d, int n, int e);

/// Integral over M_{0,k} x P^2 of psi_1^m times the pulled-back classes
/// H^{codims[0]}, ..., H^{codims[k-1]}. Equals 1 iff k >= 3, m = k - 3 and
/// the codimensions sum to 2.
ExactScalar deg0_integral(std::span<const int> codims, int m);

/// Genus-0 primary invariant <H^{c_1}, ..., H^{c_r}, pt^n>_d with arbitrary
/// codimensions c in 0..2, reduced by string and divisor to N_d.
/// Codimensions outside 0..2 make the class zero.
ExactScalar genus0_primary(Session& session, int d, std::span<const int> codims, int n);

}  // namespace g3enum
