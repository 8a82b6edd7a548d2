#pragma once

#include <string>
#include <vector>

#include "g3enum/exact.hpp"
#include "g3enum/session.hpp"

namespace g3enum {

/// Contributions to CR_3 from degenerate maps with m bubbles entering with
/// multiplicity k (n_m^{(k)}), plus the zero-dimensional counts they use.
struct Cr3Breakdown {
  int degree = 0;
  ExactScalar n1_1;  // n_1^{(1)}
  ExactScalar n1_2;  // n_1^{(2)}
  ExactScalar n1_3;  // n_1^{(3)}
  ExactScalar n2_1;  // n_2^{(1)}
  ExactScalar n2_2;  // n_2^{(2)}
  ExactScalar n3_1;  // n_3^{(1)}
  ExactScalar s12;   // |S_{1;2}|
  ExactScalar s21;   // |S_{2;1}|
  ExactScalar tau3;
  ExactScalar cr3_theorem;    // closed V1/V2/V3 formula
  ExactScalar cr3_corollary;  // weighted sum of the n_m^{(k)}
};

/// Evaluates every n_m^{(k)} and both CR_3 routes at zero hyperflexes.
/// Throws DomainError for d < 2, ConsistencyError if a count is not an
/// integer or the routes disagree.
Cr3Breakdown component_counts(Session& session, int d);

enum class Cr3Route { Theorem, Corollary, Both };

/// CR_3 for a domain with `hyperflexes` hyperflexes; each one raises the
/// weight of |S_{1;2}| from 96 by 2. Both: computes the two routes and checks
/// they agree.
ExactScalar cr3(Session& session, int d, int hyperflexes, Cr3Route route);

/// RT_{3,d} - CR_3: the number of genus-3 degree-d plane curves through 3d - 4
/// points with fixed normalization, before dividing by |Aut(Sigma, j)|.
/// Throws ConsistencyError unless the result is a non-negative integer.
/// `route` selects how CR_3 is evaluated.
ExactScalar n3d(Session& session, int d, int hyperflexes = 0,
                Cr3Route route = Cr3Route::Corollary);

/// A named quantity and the route used to derive it.
struct Report {
  std::string quantity;
  int degree = 0;
  ExactScalar value;
  std::string route;
};

/// Every field of the breakdown as a list of reports, in declaration order.
std::vector<Report> breakdown_reports(const Cr3Breakdown& breakdown);

}  // namespace g3enum
