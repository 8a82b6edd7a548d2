#include "g3enum/singular.hpp"

#include <string>

#include "g3enum/checks.hpp"
#include "g3enum/errors.hpp"
#include "g3enum/taut.hpp"

namespace g3enum {

using namespace classes;

namespace {

ExactScalar on(Session& session, Space space, int d, std::vector<Monomial> monomials) {
  return evaluate(session, SpaceQuery{space, d, std::move(monomials)});
}

void require_degree(const char* op, int d) {
  if (d < 2) throw DomainError(std::string(op) + ": degree must be >= 2, got " + std::to_string(d));
}

}  // namespace

ExactScalar s21(Session& session, int d) {
  require_degree("s21", d);
  const ExactScalar value =
      on(session, Space::V2, d, {a_squared(6), a_sigma1(3), sigma2(1)}) -
      ExactScalar(3) * tau3(session, d);
  return require_count("|S_{2;1}|", value);
}

ExactScalar s22_a(Session& session, int d) {
  require_degree("s22_a", d);
  return on(session, Space::V2, d, {a_squared(3), a_sigma1(1)});
}

ExactScalar s22_lambda(Session& session, int d) {
  require_degree("s22_lambda", d);
  return on(session, Space::V2, d,
            {a_squared(3), a_sigma1(3), sigma2_ordinary(1), pi_ordinary(1)});
}

ExactScalar s1_class(Session& session, int d, int i, int j) {
  require_degree("s1_class", d);
  if (i < 0 || j < 0 || i + j != 2) {
    throw DomainError("s1_class: (i, j) must be (2,0), (1,1) or (0,2)");
  }
  return on(session, Space::S1, d, {modified(1, i, j)});
}

ExactScalar nd22(Session& session, int d) {
  require_degree("nd22", d);
  return on(session, Space::V2, d, {a_squared(6), a_sigma1(3), pi(1)});
}

ExactScalar nd22_via_boundary(Session& session, int d) {
  require_degree("nd22_via_boundary", d);
  return on(session, Space::V2, d, {a_squared(12), a_sigma1(6), sigma2(1), pi(1)}) -
         s21(session, d) - ExactScalar(3) * tau3(session, d);
}

ExactScalar s12(Session& session, int d, S12Route route) {
  require_degree("s12", d);
  ExactScalar value;
  const ExactScalar t3 = tau3(session, d);
  if (route == S12Route::Corollary) {
    value = on(session, Space::V1, d, {modified(33, 2, 2), modified(18, 1, 3), modified(4, 0, 4)}) +
            ExactScalar(3) * t3 -
            on(session, Space::V2, d, {a_squared(21), a_sigma1(9), sigma2(2), pi(1)});
  } else {
    value = on(session, Space::S1, d, {modified(3, 2, 0), modified(6, 1, 1), modified(4, 0, 2)}) -
            ExactScalar(2) * s21(session, d) - ExactScalar(3) * t3 -
            on(session, Space::V2, d, {a_squared(6), a_sigma1(3), pi(1)});
  }
  return require_count("|S_{1;2}|", value);
}

}  // namespace g3enum
