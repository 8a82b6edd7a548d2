#pragma once

#include "g3enum/exact.hpp"
#include "g3enum/session.hpp"

namespace g3enum {

// Counts of singular rational curves through 3d - 4 general points. All
// operations throw DomainError for d < 2.

/// |S_{2;1}|: two-component curves meeting at a node where one component has a cusp.
ExactScalar s21(Session& session, int d);

/// <a, [S_{2;2}]> on the tacnodal two-component locus.
ExactScalar s22_a(Session& session, int d);

/// <lambda_{E_2}, [S_{2;2}]>; uses ordinary psi classes in its quadratic part.
ExactScalar s22_lambda(Session& session, int d);

/// <a^i c_1(cal L*)^j, [S_1]> for (i, j) in {(2,0), (1,1), (0,2)}.
ExactScalar s1_class(Session& session, int d, int i, int j);

/// N(D_{2;2}).
ExactScalar nd22(Session& session, int d);

/// N(D_{2;2}) through the boundary decomposition:
/// <12a^2 + 6a sigma1 + sigma2 + pi, [V_2]> - |S_{2;1}| - 3 tau_3.
ExactScalar nd22_via_boundary(Session& session, int d);

enum class S12Route {
  Corollary,  ///< closed V1/V2/V3 formula
  Lemma,      ///< S1 classes minus the two-component corrections
};

/// |S_{1;2}|: rational curves with a (3,4)-cusp.
ExactScalar s12(Session& session, int d, S12Route route);

}  // namespace g3enum
