#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace mosva {

/// Exact rational number. Always canonical: lowest terms, positive
/// denominator, zero stored as 0/1. Values that fit in 64-bit numerator and
/// denominator stay inline; anything larger moves to GMP and comes back once
/// it fits again.
class Rational {
 public:
  Rational() = default;
  // NOLINTNEXTLINE: integers promote freely
  Rational(long value) : num_(value) {
    if (value >= kInline || value <= -kInline) assign(mpq_class(mpz_class(value)));
  }
  Rational(int value) : num_(value) {}  // NOLINT
  Rational(const mpz_class& value);      // NOLINT
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpq_class& value);

  /// Parses "7", "-3/4" or "+2/6". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const;
  double to_double() const;
  std::string str() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (!a.big_ || !b.big_) return false;  // canonical forms differ in size
    return cmp(*a.big_, *b.big_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  // Inline numerators and denominators stay below this so that sums and
  // products of two of them fit in 128 bits with room to spare.
  static constexpr std::int64_t kInline = std::int64_t{1} << 62;

  void assign(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  // Set only when the value does not fit inline; shared because it is immutable.
  std::shared_ptr<const mpq_class> big_;
};

/// Generalized binomial coefficient top·(top−1)⋯(top−k+1)/k!; top may be
/// negative. Requires k ≥ 0.
Rational binomial(long top, long k);

/// Same, for a rational top (used by the terminating hypergeometric sums).
Rational binomial(const Rational& top, long k);

mpz_class factorial(long n);

}  // namespace mosva
