#include "mosva/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace mosva {

ModeWord BalancedWord::modes() const {
  ModeWord w;
  for (std::size_t i = 0; i < parts.size(); ++i) w.push_back({signs[i], -parts[i]});
  return w;
}

namespace {

void compositions(int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    if (cur.size() % 2 == 0) out.push_back(cur);
    return;
  }
  for (int m = 1; m <= remaining; ++m) {
    cur.push_back(m);
    compositions(remaining - m, cur, out);
    cur.pop_back();
  }
}

std::vector<SignWord> balanced_signs(std::size_t k) {
  std::vector<SignWord> out;
  const std::size_t half = k / 2;
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) != half) continue;
    SignWord s(k);
    // Bit set at position i (from the left) means minus.
    for (std::size_t i = 0; i < k; ++i) {
      s[i] = (mask >> (k - 1 - i)) & 1ul ? Sign::Minus : Sign::Plus;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<BalancedWord> enumerate_basis(int n) {
  if (n < 0) throw std::invalid_argument("weight must be non-negative");
  if (n > 24) throw std::invalid_argument("explicit enumeration is limited to weight 24");
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  compositions(n, cur, comps);
  std::vector<BalancedWord> out;
  for (const auto& parts : comps) {
    for (auto& signs : balanced_signs(parts.size())) out.push_back({parts, std::move(signs)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

mpz_class count_basis(int n) {
  if (n < 0) throw std::invalid_argument("weight must be non-negative");
  // table[r][c + n]: mode sequences of total weight r and charge c.
  const int width = 2 * n + 1;
  std::vector<std::vector<mpz_class>> table(n + 1, std::vector<mpz_class>(width, 0));
  table[0][n] = 1;
  for (int r = 1; r <= n; ++r) {
    for (int c = -r; c <= r; ++c) {
      mpz_class total = 0;
      for (int m = 1; m <= r; ++m) {
        if (c - 1 >= -n) total += table[r - m][c - 1 + n];
        if (c + 1 <= n) total += table[r - m][c + 1 + n];
      }
      table[r][c + n] = total;
    }
  }
  return table[n][n];
}

mpz_class dim_binomial(int n) {
  if (n < 0) throw std::invalid_argument("weight must be non-negative");
  if (n == 0) return 1;
  if (n == 1) return 0;
  mpz_class total = 0;
  if (n % 2 == 0) {
    const long N = n / 2;
    for (long p = 1; p <= N; ++p) {
      total += (binomial(2 * p, p) * binomial(2 * N - 1, 2 * p - 1)).numerator();
    }
    return total;
  }
  const long N = (n - 1) / 2;
  for (long p = 1; p <= N; ++p) {
    total += factorial(2 * N - 1) / (factorial(2 * N - 2 * p + 1) * factorial(p) *
                                     factorial(p - 1));
  }
  return 2 * (2 * N) * total;
}

Rational hyp2F1_terminating(const Rational& a, const Rational& b, const Rational& c,
                            const Rational& z) {
  auto nonpositive_integer = [](const Rational& q) { return q.is_integer() && q.sign() <= 0; };
  long terms = -1;
  for (const Rational* q : {&a, &b}) {
    if (!nonpositive_integer(*q)) continue;
    const long len = -q->numerator().get_si();
    if (terms < 0 || len < terms) terms = len;
  }
  if (terms < 0) {
    throw std::domain_error("2F1 with a = " + a.str() + ", b = " + b.str() +
                            " does not terminate");
  }
  if (nonpositive_integer(c) && -c.numerator().get_si() < terms) {
    throw std::domain_error("2F1 lower parameter c = " + c.str() +
                            " vanishes inside the summation range");
  }
  Rational total = 1;
  Rational term = 1;
  for (long k = 0; k < terms; ++k) {
    const Rational kk(k);
    term *= (a + kk) * (b + kk) * z / ((c + kk) * Rational(k + 1));
    total += term;
  }
  return total;
}

mpz_class dim_hypergeometric(int n) {
  if (n < 0) throw std::invalid_argument("weight must be non-negative");
  if (n == 0) return 1;
  if (n == 1) return 0;
  const Rational a = Rational(1) - Rational(n, 2);
  const Rational b = Rational(3 - n, 2);
  const Rational value = Rational(2 * (n - 1)) * hyp2F1_terminating(a, b, 2, 4);
  if (!value.is_integer()) throw std::logic_error("non-integral dimension");
  return value.numerator();
}

Rational even_binomial_sum(int n) {
  Rational total = 0;
  for (long p = 1; p <= n; ++p) {
    total += Rational(factorial(2 * n - 2),
                      factorial(2 * n - 2 * p) * factorial(p) * factorial(p - 1));
  }
  return total;
}

Rational odd_binomial_sum(int n) {
  Rational total = 0;
  for (long p = 1; p <= n; ++p) {
    total += Rational(factorial(2 * n - 1),
                      factorial(2 * n - 2 * p + 1) * factorial(p) * factorial(p - 1));
  }
  return total;
}

Rational even_hypergeometric(int n) {
  return hyp2F1_terminating(Rational(1 - n), Rational(3 - 2 * n, 2), 2, 4);
}

Rational odd_hypergeometric(int n) {
  return hyp2F1_terminating(Rational(1 - 2 * n, 2), Rational(1 - n), 2, 4);
}

std::vector<DimensionRow> dimension_table(int max_n, int enumerate_limit) {
  std::vector<DimensionRow> rows;
  for (int n = 0; n <= max_n; ++n) {
    DimensionRow r;
    r.weight = n;
    r.enumerated = n <= enumerate_limit;
    r.dim_enum = r.enumerated ? mpz_class(enumerate_basis(n).size()) : count_basis(n);
    r.dim_binomial = dim_binomial(n);
    r.dim_2F1 = dim_hypergeometric(n);
    r.agree = r.dim_enum == r.dim_binomial && r.dim_binomial == r.dim_2F1;
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string SeriesTerm::exponent() const {
  if (!lambda) return std::to_string(shift);
  return shift == 0 ? "λ" : "λ+" + std::to_string(shift);
}

std::vector<SeriesTerm> graded_series(int max_n, bool module) {
  std::vector<SeriesTerm> out;
  for (int n = 0; n <= max_n; ++n) {
    mpz_class d = count_basis(n);
    if (d == 0) continue;
    out.push_back({n, module, d});
  }
  return out;
}

std::vector<BasisKey> basis_keys(int n, Marker marker) {
  std::vector<BasisKey> keys;
  for (const BalancedWord& w : enumerate_basis(n)) keys.push_back(state_key(w.modes(), marker));
  return keys;
}

BalancedSampler::BalancedSampler(int max_weight, Marker marker) {
  for (int n = 0; n <= max_weight; ++n) {
    std::vector<BasisKey> keys = basis_keys(n, marker);
    if (!keys.empty()) by_weight_.push_back(std::move(keys));
  }
  if (by_weight_.empty()) throw std::invalid_argument("no balanced states in range");
}

const BasisKey& BalancedSampler::next(std::mt19937_64& rng) const {
  const auto& keys = by_weight_[rng() % by_weight_.size()];
  return keys[rng() % keys.size()];
}

}  // namespace mosva
