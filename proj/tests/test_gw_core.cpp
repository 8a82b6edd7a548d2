#include "doctest.h"

#include <array>
#include <vector>

#include "g3enum/errors.hpp"
#include "g3enum/gw_core.hpp"

using namespace g3enum;

TEST_CASE("kontsevich seeds and classical values") {
  Session s;
  CHECK(kontsevich(s, 1) == ExactScalar(1));  // line through two points
  CHECK(kontsevich(s, 2) == ExactScalar(1));  // conic through five points
  // nodal cubics through 8 points: degree of the discriminant of plane cubics
  CHECK(kontsevich(s, 3) == ExactScalar(12));
  CHECK(kontsevich(s, 4) == ExactScalar(620));
  CHECK(kontsevich(s, 5) == ExactScalar(87304));
  CHECK_THROWS_AS(kontsevich(s, 0), DomainError);
  CHECK_THROWS_AS(kontsevich(s, -3), DomainError);
}

TEST_CASE("kontsevich is a positive integer for d = 1..7") {
  Session s;
  for (int d = 1; d <= 7; ++d) {
    const auto n = kontsevich(s, d);
    CHECK(n.is_integer());
    CHECK(n.sign() > 0);
  }
  CHECK(kontsevich(s, 7).str() == "14616808192");
}

TEST_CASE("primary examples") {
  Session s;
  CHECK(primary(s, 1, 1, 2) == ExactScalar(1));
  CHECK(primary(s, 2, 5, 1) == ExactScalar(2));  // divisor: d * N_d
  CHECK(primary(s, 3, 7, 2) == ExactScalar(12));
  CHECK(primary(s, 3, 8, 2) == ExactScalar(0));
  CHECK(primary(s, 0, 0, 2) == ExactScalar(0));  // fewer than three points
  CHECK(primary(s, 0, 2, 0) == ExactScalar(0));  // H^4 = 0
  CHECK(primary(s, 0, 1, 0) == ExactScalar(0));
}

TEST_CASE("primary dimension guard sweep") {
  Session s;
  for (int d = 1; d <= 4; ++d) {
    for (int n = 0; n <= 12; ++n) {
      for (int e = 0; e <= 2; ++e) {
        const auto v = primary(s, d, n, e);
        const bool balanced = (e == 2 && n == 3 * d - 2) || (e == 1 && n == 3 * d - 1);
        if (!balanced) {
          CHECK(v.is_zero());
        } else {
          CHECK(v == (e == 1 ? ExactScalar(d) : ExactScalar(1)) * kontsevich(s, d));
        }
      }
    }
  }
}

TEST_CASE("genus0_primary is symmetric in its insertions") {
  Session s;
  std::array<int, 4> codims{1, 2, 1, 2};
  const auto reference = genus0_primary(s, 3, codims, 6);
  CHECK(reference == ExactScalar(9 * 12));
  std::sort(codims.begin(), codims.end());
  do {
    CHECK(genus0_primary(s, 3, codims, 6) == reference);
  } while (std::next_permutation(codims.begin(), codims.end()));
  const std::array<int, 3> with_unit{0, 2, 2};
  CHECK(genus0_primary(s, 2, with_unit, 3).is_zero());
  const std::array<int, 1> bad{3};
  CHECK(genus0_primary(s, 1, bad, 1).is_zero());
}

TEST_CASE("deg0_integral") {
  CHECK(deg0_integral(std::vector<int>{2, 0, 0}, 0) == ExactScalar(1));
  CHECK(deg0_integral(std::vector<int>{2, 2, 0}, 0) == ExactScalar(0));
  CHECK(deg0_integral(std::vector<int>{1, 1, 0, 0}, 1) == ExactScalar(1));
  CHECK(deg0_integral(std::vector<int>{1, 1, 0, 0}, 0) == ExactScalar(0));
  CHECK(deg0_integral(std::vector<int>{1, 1}, 0) == ExactScalar(0));
  CHECK(deg0_integral(std::vector<int>{1, 1, 0, 0, 0}, 2) == ExactScalar(1));
}

TEST_CASE("psi integral over M_{0,4}") {
  // On M_{0,4} = P^1 (cross-ratio), psi_1 is the class of the single boundary
  // point D(1,2|3,4), so it integrates to 1.
  CHECK(deg0_integral(std::vector<int>{2, 0, 0, 0}, 1) == ExactScalar(1));
  CHECK(deg0_integral(std::vector<int>{0, 2, 0, 0}, 1) == ExactScalar(1));
}
