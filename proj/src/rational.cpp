#include "mosva/rational.hpp"

#include <numeric>
#include <vector>
#include <stdexcept>

namespace mosva {
namespace {

using i64 = std::int64_t;
using i128 = __int128;

mpz_class to_mpz(i64 v) { return mpz_class(static_cast<long>(v)); }

bool fits(const mpz_class& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 62;
}

i64 to_i64(const mpz_class& z) { return z.get_si(); }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kLimit = static_cast<i128>(1) << 62;

}  // namespace

Rational::Rational(const mpz_class& value) { assign(mpq_class(value)); }

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  mpq_class q(numerator, denominator);
  q.canonicalize();
  assign(std::move(q));
}

Rational::Rational(const mpq_class& value) {
  if (value.get_den() == 0) throw std::domain_error("rational with zero denominator");
  mpq_class q(value);
  q.canonicalize();
  assign(std::move(q));
}

void Rational::assign(mpq_class value) {
  if (fits(value.get_num()) && fits(value.get_den())) {
    num_ = to_i64(value.get_num());
    den_ = to_i64(value.get_den());
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(value));
  }
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : to_mpz(num_); }
mpz_class Rational::denominator() const { return big_ ? big_->get_den() : to_mpz(den_); }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string digits(text);
  std::size_t start = 0;
  if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) start = 1;
  if (start == digits.size()) throw std::invalid_argument("malformed integer: '" + digits + "'");
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (digits[i] < '0' || digits[i] > '9') {
      throw std::invalid_argument("malformed integer: '" + digits + "'");
    }
  }
  if (digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

// Stores n/d (d > 0) reduced, or reports that it does not fit.
bool reduce_into(i128 n, i128 d, i64& num, i64& den) {
  const i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n >= kLimit || n <= -kLimit || d >= kLimit) return false;
  num = static_cast<i64>(n);
  den = static_cast<i64>(d);
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)),
                  parse_integer(text.substr(slash + 1)));
}

Rational& Rational::operator+=(const Rational& other) {
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      i64 s;
      if (!__builtin_add_overflow(num_, other.num_, &s) && s < kLimit && s > -kLimit) {
        num_ = s;
        return *this;
      }
    }
    const i128 n = static_cast<i128>(num_) * other.den_ + static_cast<i128>(other.num_) * den_;
    const i128 d = static_cast<i128>(den_) * other.den_;
    if (reduce_into(n, d, num_, den_)) return *this;
  }
  assign(to_mpq() + other.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& other) { return *this += -other; }

Rational& Rational::operator*=(const Rational& other) {
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      i64 p;
      if (!__builtin_mul_overflow(num_, other.num_, &p) && p < kLimit && p > -kLimit) {
        num_ = p;
        return *this;
      }
    }
    const i128 n = static_cast<i128>(num_) * other.num_;
    const i128 d = static_cast<i128>(den_) * other.den_;
    if (reduce_into(n, d, num_, den_)) return *this;
  }
  assign(to_mpq() * other.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero rational");
  if (!big_ && !other.big_) {
    i128 n = static_cast<i128>(num_) * other.den_;
    i128 d = static_cast<i128>(den_) * other.num_;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (reduce_into(n, d, num_, den_)) return *this;
  }
  assign(to_mpq() / other.to_mpq());
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign(-*big_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c;
  if (!a.big_ && !b.big_) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    c = (l > r) - (l < r);
  } else {
    c = cmp(a.to_mpq(), b.to_mpq());
  }
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

mpz_class factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

namespace {

Rational binomial_product(long top, long k) {
  // C(top, k) = Π (top − i)/(i + 1); each partial product is an integer.
  Rational r = 1;
  for (long i = 0; i < k; ++i) {
    r *= Rational(top - i);
    r /= Rational(i + 1);
  }
  return r;
}

constexpr long kTableTop = 64;
constexpr long kTableK = 32;

}  // namespace

Rational binomial(long top, long k) {
  if (k < 0) throw std::domain_error("binomial with negative lower index");
  if (top >= -kTableTop && top <= kTableTop && k <= kTableK) {
    static const std::vector<Rational> table = [] {
      std::vector<Rational> t;
      t.reserve((2 * kTableTop + 1) * (kTableK + 1));
      for (long n = -kTableTop; n <= kTableTop; ++n) {
        for (long j = 0; j <= kTableK; ++j) t.push_back(binomial_product(n, j));
      }
      return t;
    }();
    return table[(top + kTableTop) * (kTableK + 1) + k];
  }
  Rational r = 1;
  for (long i = 0; i < k; ++i) {
    r *= Rational(top - i);
    r /= Rational(i + 1);
  }
  return r;
}

Rational binomial(const Rational& top, long k) {
  if (k < 0) throw std::domain_error("binomial with negative lower index");
  Rational numerator = 1;
  for (long i = 0; i < k; ++i) numerator *= top - Rational(i);
  return numerator / Rational(factorial(k));
}

}  // namespace mosva
