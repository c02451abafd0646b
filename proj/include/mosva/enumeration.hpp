#pragma once

#include <gmpxx.h>

#include <compare>
#include <random>
#include <string>
#include <vector>

#include "mosva/modes.hpp"
#include "mosva/pbw.hpp"
#include "mosva/rational.hpp"

namespace mosva {

/// h_{s1}(−m1)⋯h_{sk}(−mk) with equal plus/minus counts.
struct BalancedWord {
  std::vector<int> parts;
  SignWord signs;

  ModeWord modes() const;
  friend auto operator<=>(const BalancedWord&, const BalancedWord&) = default;
};

/// All compositions of n into an even number of parts crossed with all
/// balanced sign sequences of that length; sorted, duplicate-free.
std::vector<BalancedWord> enumerate_basis(int n);

/// Number of balanced words of weight n by dynamic programming over
/// (remaining weight, charge). Agrees with enumerate_basis(n).size() and is
/// usable far beyond the range where explicit enumeration is practical.
mpz_class count_basis(int n);

/// Closed binomial sums: Σ_p C(2p, p)·C(n−1, 2p−1) written per parity.
mpz_class dim_binomial(int n);

/// Σ_k (a)_k (b)_k / ((c)_k k!) z^k for a or b a non-positive integer.
/// Throws std::domain_error when the series does not terminate or c hits a
/// non-positive integer inside the summation range.
Rational hyp2F1_terminating(const Rational& a, const Rational& b, const Rational& c,
                            const Rational& z);

/// 2(n−1)·₂F₁(1−n/2, (3−n)/2; 2; 4) for n ≥ 2; 1 at n = 0, 0 at n = 1.
mpz_class dim_hypergeometric(int n);

/// Σ_{p=1}^{n} (2n−2)!/((2n−2p)! p! (p−1)!) and its odd-weight partner
/// Σ_{p=1}^{n} (2n−1)!/((2n−2p+1)! p! (p−1)!).
Rational even_binomial_sum(int n);
Rational odd_binomial_sum(int n);
/// ₂F₁(1−n, 3/2−n; 2; 4) and ₂F₁(1/2−n, 1−n; 2; 4).
Rational even_hypergeometric(int n);
Rational odd_hypergeometric(int n);

struct DimensionRow {
  int weight = 0;
  mpz_class dim_enum;
  mpz_class dim_binomial;
  mpz_class dim_2F1;
  bool agree = false;
  /// dim_enum came from explicit enumeration (true) or from count_basis.
  bool enumerated = false;
};

/// Weights 0..max_n. Explicit enumeration is used up to enumerate_limit.
std::vector<DimensionRow> dimension_table(int max_n, int enumerate_limit = 12);

struct SeriesTerm {
  int shift = 0;         // exponent is shift (+ λ for modules)
  bool lambda = false;   // exponent carries the symbolic λ offset
  mpz_class dim;

  std::string exponent() const;
};

/// Graded dimension series up to weight max_n; module = true shifts every
/// exponent by λ. Zero coefficients are omitted.
std::vector<SeriesTerm> graded_series(int max_n, bool module = false);

/// The basis words as state keys over 𝟙 or f.
std::vector<BasisKey> basis_keys(int n, Marker marker = Marker::Vacuum);

/// Random basis states of weight ≤ max_weight: a weight is drawn uniformly
/// among the weights that have states, then a state of that weight. Uniform
/// over all states would almost always land on the top weight.
class BalancedSampler {
 public:
  explicit BalancedSampler(int max_weight, Marker marker = Marker::Vacuum);
  // Plain modulo on the raw engine output keeps draws identical across
  // standard libraries.
  const BasisKey& next(std::mt19937_64& rng) const;

 private:
  std::vector<std::vector<BasisKey>> by_weight_;
};

}  // namespace mosva
