#include <gtest/gtest.h>

#include <climits>

#include "generators.hpp"
#include "mosva/json_io.hpp"
#include "mosva/rational.hpp"
#include "mosva/ring.hpp"

namespace mosva {
namespace {

using testing::Rng;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(mpz_class(4), mpz_class(-6)).str(), "-2/3");
  EXPECT_EQ(Rational(mpz_class(0), mpz_class(-5)).str(), "0");
  EXPECT_EQ(Rational::parse("+2/6"), Rational(mpz_class(1), mpz_class(3)));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

// mpq_class is the oracle; operands straddle the inline/GMP boundary.
TEST(Rational, MatchesGmpOnRandomOperands) {
  Rng rng(7);
  for (int i = 0; i < 4000; ++i) {
    const Rational a = testing::random_wide_rational(rng);
    const Rational b = testing::random_wide_rational(rng);
    const mpq_class qa = a.to_mpq(), qb = b.to_mpq();
    EXPECT_EQ((a + b).to_mpq(), mpq_class(qa + qb));
    EXPECT_EQ((a - b).to_mpq(), mpq_class(qa - qb));
    EXPECT_EQ((a * b).to_mpq(), mpq_class(qa * qb));
    if (!b.is_zero()) EXPECT_EQ((a / b).to_mpq(), mpq_class(qa / qb));
    EXPECT_EQ(a < b, qa < qb);
    EXPECT_EQ(a == b, qa == qb);
  }
}

TEST(Rational, OverflowBoundary) {
  const Rational big(LONG_MAX);
  const mpq_class q(mpz_class(LONG_MAX));
  EXPECT_EQ((big + big).to_mpq(), mpq_class(q + q));
  EXPECT_EQ((big * big).to_mpq(), mpq_class(q * q));
  EXPECT_EQ((big * big / big), big);
  EXPECT_EQ((Rational(LONG_MIN) - Rational(1)).to_mpq(),
            mpq_class(mpz_class(LONG_MIN) - 1));
  EXPECT_EQ(-Rational(LONG_MIN), Rational(mpz_class(mpz_class(LONG_MIN) * -1)));
  EXPECT_TRUE((big * big).is_integer());
  EXPECT_FALSE((big * big / Rational(LONG_MAX - 1)).is_integer());
  EXPECT_EQ((big * big).sign(), 1);
}

TEST(Rational, BinomialMatchesFactorialFormula) {
  for (long n = 0; n <= 40; ++n) {
    for (long k = 0; k <= n; ++k) {
      const mpz_class expect = factorial(n) / (factorial(k) * factorial(n - k));
      EXPECT_EQ(binomial(n, k), Rational(expect)) << n << " " << k;
    }
  }
  // Negative tops: C(-n, k) = (-1)^k C(n+k-1, k).
  for (long n = 1; n <= 70; ++n) {
    for (long k = 0; k <= 40; ++k) {
      const Rational expect = binomial(n + k - 1, k) * Rational(k % 2 ? -1 : 1);
      EXPECT_EQ(binomial(-n, k), expect) << -n << " " << k;
    }
  }
  EXPECT_EQ(binomial(3, 5), Rational(0));
  EXPECT_EQ(binomial(Rational(mpz_class(1), mpz_class(2)), 2),
            Rational(mpz_class(-1), mpz_class(8)));
}

TEST(RingElem, Display) {
  const RingElem lam = RingElem::lambda();
  const RingElem K = RingElem::K();
  EXPECT_EQ((lam * lam - RingElem(2) * K * lam).str(), "λ^2 - 2*K*λ");
  EXPECT_EQ((RingElem(4) * RingElem::l() * RingElem::l()).str(), "4*l^2");
  EXPECT_EQ(RingElem().str(), "0");
}

TEST(RingElem, RingLaws) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const RingElem a = testing::random_ring(rng);
    const RingElem b = testing::random_ring(rng);
    const RingElem c = testing::random_ring(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * RingElem(1), a);
    EXPECT_TRUE((a * RingElem()).is_zero());
  }
}

TEST(RingElem, EvaluationIsHomomorphism) {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const RingElem a = testing::random_ring(rng);
    const RingElem b = testing::random_ring(rng);
    const RingPoint p{testing::random_rational(rng), testing::random_rational(rng),
                      testing::random_rational(rng)};
    EXPECT_EQ((a * b).eval(p), a.eval(p) * b.eval(p));
    EXPECT_EQ((a + b).eval(p), a.eval(p) + b.eval(p));
    EXPECT_EQ(a.substitute_K(p.K).eval(p), a.eval(p));
  }
}

TEST(RingElem, JsonRoundTrip) {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const RingElem a = testing::random_ring(rng);
    EXPECT_EQ(ring_from_json(to_json(a)), a);
  }
  const json j = to_json(RingElem::lambda() * RingElem::lambda() -
                         RingElem(2) * RingElem::K() * RingElem::lambda());
  EXPECT_EQ(j.dump(), R"([[0,1,1,"-2","1"],[0,2,0,"1","1"]])");
}

}  // namespace
}  // namespace mosva
