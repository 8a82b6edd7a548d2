#pragma once

#include <cstdint>
#include <vector>

#include "g3enum/exact.hpp"
#include "g3enum/session.hpp"

namespace g3enum {

/// Exponents of the ordinary psi class c_1(L*) (m) and of the modified psi
/// class c_1(cal L*) (j) at one component's evaluation point.
struct PsiSlot {
  int m = 0;
  int j = 0;

  int degree() const { return m + j; }
  friend bool operator==(const PsiSlot&, const PsiSlot&) = default;
};

/// <a^i c_1(L*)^m c_1(cal L*)^j> over degree-d maps through n points with one
/// free marked point; i = 2 means that point is held at a general point.
/// Zero unless i + m + j = 3d - n. Each factor of the modified class is the
/// ordinary class minus the n strata where a constrained point bubbles off
/// together with the marked point.
ExactScalar mpsi(Session& session, int d, int n, int i, int m, int j);

/// <a^i c_1(L*)^m c_1(cal L*)^j, [V_1]> at degree d (3d - 4 constraints).
/// Throws DomainError for d < 2.
ExactScalar v1_number(Session& session, int d, int i, int m, int j);

/// <a^p X_A X_B, [V_2]>, X_A and X_B the psi monomials on the two components
/// sharing the evaluation point. With `symmetrize` the slot-swapped monomial
/// is added, giving classes like c_1(L_1*) + c_1(L_2*). Components are
/// unordered: the ordered sum over degree splits is halved.
/// Throws DomainError for d < 2, ValidationError unless p + |A| + |B| = 2.
ExactScalar v2_number(Session& session, int d, int p, PsiSlot slot_a, PsiSlot slot_b,
                      bool symmetrize);

/// tau_3 = |V_3|: three-component configurations through 3d - 4 points with a
/// common point. Throws DomainError for d < 2.
ExactScalar tau3(Session& session, int d);

enum class Space { V1, V2, V3, S1 };

/// One integer-weighted monomial of a SpaceQuery. `a` is the power of the
/// evaluation class. On V1 and S1 only `first` is used; on S1 only its
/// modified exponent j. On V2 the pair (first, second) is evaluated by
/// v2_number with the given symmetrize flag.
struct Monomial {
  std::int64_t coefficient = 1;
  int a = 0;
  PsiSlot first{};
  PsiSlot second{};
  bool symmetrize = false;

  int degree() const { return a + first.degree() + second.degree(); }
};

struct SpaceQuery {
  Space space = Space::V1;
  int degree = 2;
  std::vector<Monomial> monomials;
};

/// Complex dimension of the space: V1 -> 4, V2 -> 2, V3 -> 0, S1 -> 2.
int space_dimension(Space space);

/// Throws ValidationError if any monomial is not of the space's dimension or
/// uses exponents the space does not carry.
void validate(const SpaceQuery& query);

/// Evaluates a validated query. S1 monomials are rewritten into V1/V2 numbers
/// by the three cuspidal-locus identities.
ExactScalar evaluate(Session& session, const SpaceQuery& query);

}  // namespace g3enum

namespace g3enum::classes {

// Shorthand for the monomials that appear in the enumerative formulas.
// sigma1 = c_1(cal L_1*) + c_1(cal L_2*), sigma2 = c_1^2(cal L_1*) + c_1^2(cal L_2*),
// pi = c_1(cal L_1*) c_1(cal L_2*); the *_ordinary variants use c_1(L_i*).

inline Monomial a_squared(std::int64_t c) { return {c, 2, {}, {}, false}; }
inline Monomial a_sigma1(std::int64_t c) { return {c, 1, {0, 1}, {}, true}; }
inline Monomial sigma2(std::int64_t c) { return {c, 0, {0, 2}, {}, true}; }
inline Monomial pi(std::int64_t c) { return {c, 0, {0, 1}, {0, 1}, false}; }
inline Monomial sigma2_ordinary(std::int64_t c) { return {c, 0, {2, 0}, {}, true}; }
inline Monomial pi_ordinary(std::int64_t c) { return {c, 0, {1, 0}, {1, 0}, false}; }

/// c * a^a * c_1(cal L*)^j on V1 or S1.
inline Monomial modified(std::int64_t c, int a, int j) { return {c, a, {0, j}, {}, false}; }

inline Monomial point_count(std::int64_t c) { return {c, 0, {}, {}, false}; }

}  // namespace g3enum::classes
