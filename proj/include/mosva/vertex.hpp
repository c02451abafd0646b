#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mosva/pbw.hpp"

namespace mosva {

/// (1/(m−1)!)·d^{m−1}/dx^{m−1} h_sign(x), the field attached to h_sign(−m).
struct FieldTerm {
  Sign sign = Sign::Plus;
  int m = 1;
};

struct FieldCoefficient {
  Mode mode;
  Rational scalar;
};

/// Coefficient of x^power in the derivative field: the mode h(n) with
/// −n−m = power and scalar binomial(−n−1, m−1).
FieldCoefficient field_coefficient(const FieldTerm& t, int power);

/// How modes act on the target space. The algebra uses apply_mode directly;
/// the eigenfunction module additionally reduces balanced zero-mode words.
class Representation {
 public:
  virtual ~Representation() = default;
  virtual PbwVector act(const Mode& mode, const PbwVector& v) const = 0;
};

class AlgebraRepresentation : public Representation {
 public:
  PbwVector act(const Mode& mode, const PbwVector& v) const override {
    return apply_mode(mode, v);
  }
};

const Representation& algebra_representation();

/// One field of a normal-ordered product, attached to formal variable `var`.
struct FieldSlot {
  Sign sign = Sign::Plus;
  int m = 1;
  int var = 0;
};

/// Coefficient of Π_v x_v^{exponents[v]} in :Π_i field_i(x_{var_i}): w.
/// The normal-ordered word puts creations first, then annihilations, then
/// zero modes, each in slot order. Finite because annihilation indices are
/// bounded by the creation content of w.
PbwVector normal_product_coefficient(const std::vector<FieldSlot>& slots,
                                     const std::vector<int>& exponents,
                                     const PbwVector& w,
                                     const Representation& rep = algebra_representation());

std::vector<FieldSlot> fields_of(const BasisKey& state, int var = 0);

/// Coefficient of x^power in Y(u, x)w. u must be a combination of
/// creation-only states over 𝟙.
PbwVector y_coefficient(const BasisKey& u, const PbwVector& w, int power,
                        const Representation& rep = algebra_representation());
PbwVector y_coefficient(const PbwVector& u, const PbwVector& w, int power,
                        const Representation& rep = algebra_representation());

/// Coefficients of x^lo … x^hi in Y(u, x)w from one pass over the slot
/// patterns. Every power in the range has an entry.
std::map<int, PbwVector> y_coefficients(const PbwVector& u, const PbwVector& w, int lo,
                                        int hi,
                                        const Representation& rep = algebra_representation());

/// One-variable window; a missing power means "not computed".
struct LaurentWindow {
  int N = 0;
  std::map<int, PbwVector> cells;
};

LaurentWindow y_window(const PbwVector& u, const PbwVector& w, int N,
                       const Representation& rep = algebra_representation());

/// Lowest power of x that can appear in Y(u, x)w.
int lowest_power(const PbwVector& u, const PbwVector& w);

/// D v = coefficient of x^1 in Y(v, x)𝟙, extended linearly.
PbwVector D_operator(const PbwVector& v);

/// Literal closed display: Π m_i · h_{i1}(−m1−1)⋯h_{ik}(−mk−1). Agrees with
/// D only for single-mode states.
PbwVector D_literal_display(const PbwVector& v);

/// D as a derivation on creation modes: h(−m) ↦ m·h(−m−1) in each slot.
/// Agrees with D_operator on states over 𝟙; also acts on f-states with Df = 0.
PbwVector D_derivation(const PbwVector& v);

void require_state(const PbwVector& u, Marker marker = Marker::Vacuum);

}  // namespace mosva
