#include "g3enum/taut.hpp"

#include <string>

#include "g3enum/descendant.hpp"
#include "g3enum/errors.hpp"
#include "g3enum/gw_core.hpp"

namespace g3enum {

namespace {

void require_degree(const char* op, int d) {
  if (d < 2) throw DomainError(std::string(op) + ": degree must be >= 2, got " + std::to_string(d));
}

// Ordered sum over degree splits d1 + d2 = d, with the diagonal of P^2 x P^2
// times a^p expanded as sum_{e+f=2+p} H^e (x) H^f.
ExactScalar v2_ordered(Session& session, int d, int p, PsiSlot a, PsiSlot b) {
  const int constraints = 3 * d - 4;
  ExactScalar total = 0;
  for (int d1 = 1; d1 < d; ++d1) {
    const int d2 = d - d1;
    for (int e = 0; e <= 2; ++e) {
      const int f = 2 + p - e;
      if (f < 0 || f > 2) continue;
      const int n1 = 3 * d1 - e - a.degree();
      const int n2 = constraints - n1;
      if (n1 < 0 || n2 < 0 || n2 != 3 * d2 - f - b.degree()) continue;
      const ExactScalar first = mpsi(session, d1, n1, e, a.m, a.j);
      if (first.is_zero()) continue;
      total += binomial(constraints, n1) * first * mpsi(session, d2, n2, f, b.m, b.j);
    }
  }
  return total;
}

}  // namespace

ExactScalar mpsi(Session& session, int d, int n, int i, int m, int j) {
  if (d < 1 || n < 0 || i < 0 || i > 2 || m < 0 || j < 0) return 0;
  if (i + m + j != 3 * d - n) return 0;
  if (j == 0) return desc(session, d, n, i, m);
  return session.memo().get_or_compute(InvariantKey(KeyKind::Mpsi, {d, n, i, m, j}), [&] {
    ExactScalar value = mpsi(session, d, n, i, m + 1, j - 1);
    // On a collision stratum a and c_1(L*) restrict to zero and the marked
    // point is pinned at the colliding constraint.
    if (i == 0 && m == 0 && n > 0) value -= ExactScalar(n) * mpsi(session, d, n - 1, 2, 0, j - 1);
    return value;
  });
}

ExactScalar v1_number(Session& session, int d, int i, int m, int j) {
  require_degree("v1_number", d);
  return mpsi(session, d, 3 * d - 4, i, m, j);
}

ExactScalar v2_number(Session& session, int d, int p, PsiSlot slot_a, PsiSlot slot_b,
                      bool symmetrize) {
  require_degree("v2_number", d);
  if (p < 0 || slot_a.m < 0 || slot_a.j < 0 || slot_b.m < 0 || slot_b.j < 0 ||
      p + slot_a.degree() + slot_b.degree() != 2) {
    throw ValidationError("v2_number: class degree must equal dim V_2 = 2");
  }
  ExactScalar total = v2_ordered(session, d, p, slot_a, slot_b);
  if (symmetrize) total += v2_ordered(session, d, p, slot_b, slot_a);
  return total / ExactScalar(2);
}

ExactScalar tau3(Session& session, int d) {
  require_degree("tau3", d);
  const int constraints = 3 * d - 4;
  ExactScalar total = 0;
  for (int d1 = 1; d1 < d; ++d1) {
    for (int d2 = 1; d1 + d2 < d; ++d2) {
      const int d3 = d - d1 - d2;
      // small diagonal of (P^2)^3: sum over e1 + e2 + e3 = 4 of H^e1 (x) H^e2 (x) H^e3
      for (int e1 = 0; e1 <= 2; ++e1) {
        for (int e2 = 0; e2 <= 2; ++e2) {
          const int e3 = 4 - e1 - e2;
          if (e3 < 0 || e3 > 2) continue;
          const int n1 = 3 * d1 - e1;
          const int n2 = 3 * d2 - e2;
          const int n3 = 3 * d3 - e3;
          if (n1 + n2 + n3 != constraints) continue;
          total += multinomial(constraints, {n1, n2, n3}) * primary(session, d1, n1, e1) *
                   primary(session, d2, n2, e2) * primary(session, d3, n3, e3);
        }
      }
    }
  }
  return total / ExactScalar(6);
}

int space_dimension(Space space) {
  switch (space) {
    case Space::V1: return 4;
    case Space::V2: return 2;
    case Space::V3: return 0;
    case Space::S1: return 2;
  }
  return -1;
}

void validate(const SpaceQuery& query) {
  const int dim = space_dimension(query.space);
  for (const auto& mono : query.monomials) {
    if (mono.a < 0 || mono.first.m < 0 || mono.first.j < 0 || mono.second.m < 0 ||
        mono.second.j < 0) {
      throw ValidationError("negative exponent in query monomial");
    }
    if (mono.degree() != dim) {
      throw ValidationError("monomial of degree " + std::to_string(mono.degree()) +
                            " on a space of dimension " + std::to_string(dim));
    }
    const bool has_second = mono.second.degree() != 0 || mono.symmetrize;
    switch (query.space) {
      case Space::V1:
      case Space::V3:
        if (has_second) throw ValidationError("second psi slot only exists on V2");
        break;
      case Space::S1:
        if (has_second || mono.first.m != 0) {
          throw ValidationError("S1 queries take only a and c_1(cal L*)");
        }
        break;
      case Space::V2: break;
    }
  }
}

ExactScalar evaluate(Session& session, const SpaceQuery& query) {
  validate(query);
  const int d = query.degree;
  require_degree("evaluate", d);
  ExactScalar total = 0;
  for (const auto& mono : query.monomials) {
    ExactScalar value;
    switch (query.space) {
      case Space::V1:
        value = v1_number(session, d, mono.a, mono.first.m, mono.first.j);
        break;
      case Space::V2:
        value = v2_number(session, d, mono.a, mono.first, mono.second, mono.symmetrize);
        break;
      case Space::V3:
        value = tau3(session, d);
        break;
      case Space::S1: {
        const ExactScalar a2c2 = v1_number(session, d, 2, 0, 2);
        const ExactScalar a1c3 = v1_number(session, d, 1, 0, 3);
        if (mono.a == 2) {
          value = a2c2 - v2_number(session, d, 2, {}, {}, false);
        } else if (mono.a == 1) {
          value = ExactScalar(3) * a2c2 + a1c3;
        } else {
          value = ExactScalar(3) * a2c2 + ExactScalar(3) * a1c3 + v1_number(session, d, 0, 0, 4);
        }
        break;
      }
    }
    total += ExactScalar(mono.coefficient) * value;
  }
  return total;
}

}  // namespace g3enum
