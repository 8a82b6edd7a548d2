#include "g3enum/cr3.hpp"

#include <string>

#include "g3enum/checks.hpp"
#include "g3enum/errors.hpp"
#include "g3enum/rt.hpp"
#include "g3enum/singular.hpp"
#include "g3enum/taut.hpp"

namespace g3enum {

using namespace classes;

namespace {

void require_degree(const char* op, int d) {
  if (d < 2) throw DomainError(std::string(op) + ": degree must be >= 2, got " + std::to_string(d));
}

ExactScalar on(Session& session, Space space, int d, std::vector<Monomial> monomials) {
  return evaluate(session, SpaceQuery{space, d, std::move(monomials)});
}

ExactScalar cr3_theorem(Session& session, int d) {
  const ExactScalar twelfth =
      on(session, Space::V1, d, {modified(413, 2, 2), modified(210, 1, 3), modified(44, 0, 4)}) -
      on(session, Space::V2, d, {a_squared(217), a_sigma1(84), sigma2(16), pi(10)}) +
      on(session, Space::V3, d, {point_count(18)});
  return ExactScalar(12) * twelfth;
}

ExactScalar cr3_corollary(const Cr3Breakdown& b, int hyperflexes) {
  return b.n1_1 + ExactScalar(2) * b.n1_2 + ExactScalar(3) * b.n1_3 +
         ExactScalar(96 + 2 * std::int64_t{hyperflexes}) * b.s12 + b.n2_1 +
         ExactScalar(2) * b.n2_2 + b.n3_1;
}

}  // namespace

Cr3Breakdown component_counts(Session& session, int d) {
  require_degree("component_counts", d);
  Cr3Breakdown b;
  b.degree = d;
  b.tau3 = require_count("tau_3", tau3(session, d));
  b.s21 = s21(session, d);
  b.s12 = s12(session, d, S12Route::Corollary);

  b.n1_1 = 0;
  b.n1_2 = ExactScalar(12) * on(session, Space::S1, d, {modified(7, 2, 0), modified(6, 1, 1)}) -
           ExactScalar(12) * on(session, Space::V2, d, {a_squared(9), a_sigma1(3)});
  b.n1_3 = ExactScalar(12) * b.s12;
  // symmetric in the two components: 10a^2 + 3a(c_1(L_1*) + c_1(L_2*)) + c_1(L_1*)c_1(L_2*)
  b.n2_1 = ExactScalar(12) * on(session, Space::V2, d, {a_squared(10), a_sigma1(3), pi(1)});
  b.n2_2 = ExactScalar(36) * b.s21;
  b.n3_1 = ExactScalar(36) * b.tau3;

  require_integer("n_1^(2)", b.n1_2);
  require_integer("n_2^(1)", b.n2_1);

  b.cr3_theorem = cr3_theorem(session, d);
  b.cr3_corollary = cr3_corollary(b, 0);
  require_equal("CR_3 theorem vs corollary", b.cr3_theorem, b.cr3_corollary);
  require_integer("CR_3", b.cr3_corollary);
  return b;
}

ExactScalar cr3(Session& session, int d, int hyperflexes, Cr3Route route) {
  require_degree("cr3", d);
  if (hyperflexes < 0) throw DomainError("cr3: hyperflex count must be non-negative");
  const ExactScalar shift = ExactScalar(2 * std::int64_t{hyperflexes});

  switch (route) {
    case Cr3Route::Theorem:
      return cr3_theorem(session, d) + shift * s12(session, d, S12Route::Corollary);
    case Cr3Route::Corollary: {
      // component_counts already checks the two routes against each other
      const Cr3Breakdown b = component_counts(session, d);
      return cr3_corollary(b, hyperflexes);
    }
    case Cr3Route::Both: {
      const Cr3Breakdown b = component_counts(session, d);
      const ExactScalar theorem = b.cr3_theorem + shift * b.s12;
      const ExactScalar corollary = cr3_corollary(b, hyperflexes);
      require_equal("CR_3 theorem vs corollary", theorem, corollary);
      return corollary;
    }
  }
  throw DomainError("cr3: unknown route");
}

ExactScalar n3d(Session& session, int d, int hyperflexes, Cr3Route route) {
  require_degree("n3d", d);
  const ExactScalar rt3 = rt(session, RTQuery{3, d, {}, 3 * d - 4});
  const ExactScalar value = rt3 - cr3(session, d, hyperflexes, route);
  return require_count("n_{3,d}", value);
}

std::vector<Report> breakdown_reports(const Cr3Breakdown& b) {
  const int d = b.degree;
  return {
      {"n1_1", d, b.n1_1, "lemma"},
      {"n1_2", d, b.n1_2, "lemma"},
      {"n1_3", d, b.n1_3, "lemma"},
      {"n2_1", d, b.n2_1, "lemma"},
      {"n2_2", d, b.n2_2, "lemma"},
      {"n3_1", d, b.n3_1, "lemma"},
      {"s12", d, b.s12, "corollary"},
      {"s21", d, b.s21, "lemma"},
      {"tau3", d, b.tau3, "assembler"},
      {"cr3_theorem", d, b.cr3_theorem, "theorem"},
      {"cr3_corollary", d, b.cr3_corollary, "corollary"},
  };
}

}  // namespace g3enum
