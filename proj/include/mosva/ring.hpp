#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "mosva/rational.hpp"

namespace mosva {

/// Exponent triple of a monomial l^e_l · λ^e_λ · K^e_K. Ordered
/// lexicographically in (l, λ, K).
struct Monomial {
  std::uint16_t l = 0;
  std::uint16_t lambda = 0;
  std::uint16_t K = 0;

  int degree() const { return l + lambda + K; }
  Monomial operator*(const Monomial& o) const {
    return {static_cast<std::uint16_t>(l + o.l),
            static_cast<std::uint16_t>(lambda + o.lambda),
            static_cast<std::uint16_t>(K + o.K)};
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Point at which a RingElem can be evaluated.
struct RingPoint {
  Rational l;
  Rational lambda;
  Rational K;
};

/// Sparse polynomial over ℚ in the central charge l, the eigenvalue λ and
/// the curvature K. Terms are kept sorted by monomial with no zero
/// coefficients, so structural equality is mathematical equality.
class RingElem {
 public:
  using Term = std::pair<Monomial, Rational>;
  // Most coefficients are single monomials.
  using Terms = boost::container::small_vector<Term, 1>;

  RingElem() = default;
  RingElem(const Rational& constant);  // NOLINT
  RingElem(long constant) : RingElem(Rational(constant)) {}  // NOLINT

  static RingElem monomial(Monomial m, const Rational& coeff = 1);
  static RingElem l() { return monomial({1, 0, 0}); }
  static RingElem lambda() { return monomial({0, 1, 0}); }
  static RingElem K() { return monomial({0, 0, 1}); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  /// Coefficient of a monomial (zero when absent).
  Rational coefficient(Monomial m) const;
  int lambda_degree() const;

  RingElem& operator+=(const RingElem& other);
  RingElem& operator-=(const RingElem& other);
  RingElem& operator*=(const RingElem& other);
  RingElem& operator*=(const Rational& scalar);
  RingElem operator-() const;

  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend RingElem operator*(RingElem a, const Rational& s) { return a *= s; }
  friend RingElem operator*(const Rational& s, RingElem a) { return a *= s; }
  friend bool operator==(const RingElem&, const RingElem&) = default;

  /// Substitutes concrete values; a ring homomorphism ℚ[l, λ, K] → ℚ.
  Rational eval(const RingPoint& at) const;
  double eval(double l, double lambda, double K) const;

  /// Partial substitution: replaces only K (used for flat specializations).
  RingElem substitute_K(const Rational& K) const;

  /// Human-readable form such as "λ^2 - 2*K*λ" or "4*l^2".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

}  // namespace mosva
