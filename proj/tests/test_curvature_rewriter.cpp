#include <gtest/gtest.h>

#include <functional>

#include "generators.hpp"
#include "mosva/curvature.hpp"

namespace mosva {
namespace {

using testing::Rng;

const RingElem lam = RingElem::lambda();
const RingElem K = RingElem::K();

std::vector<SignWord> balanced_words(int len) {
  std::vector<SignWord> out;
  SignWord w;
  std::function<void(int)> rec = [&](int c) {
    if (static_cast<int>(w.size()) == len) {
      if (c == 0) out.push_back(w);
      return;
    }
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      w.push_back(s);
      rec(c + (s == Sign::Plus ? 1 : -1));
      w.pop_back();
    }
  };
  rec(0);
  return out;
}

SignWord flipped(SignWord w) {
  for (Sign& s : w) s = opposite(s);
  return w;
}

TEST(ZeroModeScalar, KnownValues) {
  EXPECT_EQ(nabla_scalar({}), RingElem(1));
  EXPECT_EQ(nabla_scalar(parse_sign_word("+-")), -lam);
  EXPECT_EQ(nabla_scalar(parse_sign_word("-+")), -lam);
  EXPECT_EQ(psi_scalar(parse_sign_word("+-")), lam);
  EXPECT_EQ(nabla_scalar(parse_sign_word("++--")), lam * lam - RingElem(2) * K * lam);
  EXPECT_EQ(psi_scalar(parse_sign_word("++--")), lam * lam - RingElem(2) * K * lam);
  EXPECT_EQ(nabla_scalar(parse_sign_word("+-+-")), lam * lam);
}

TEST(ZeroModeScalar, UnbalancedThrows) {
  EXPECT_THROW(nabla_scalar(parse_sign_word("+")), std::invalid_argument);
  EXPECT_THROW(nabla_scalar(parse_sign_word("++-")), std::invalid_argument);
}

TEST(ZeroModeScalar, ScheduleIndependent) {
  Rng rng(41);
  for (int len = 0; len <= 6; len += 2) {
    for (const SignWord& w : balanced_words(len)) {
      const RingElem ref = nabla_scalar(w);
      for (int t = 0; t < 4; ++t) EXPECT_EQ(nabla_scalar_random(w, rng), ref) << format_sign_word(w);
    }
  }
}

TEST(ZeroModeScalar, FlatLimitIsPowerOfLambda) {
  for (int len = 0; len <= 8; len += 2) {
    RingElem expect(1);
    for (int i = 0; i < len / 2; ++i) expect *= lam;
    for (const SignWord& w : balanced_words(len)) {
      EXPECT_EQ(psi_scalar(w).substitute_K(0), expect) << format_sign_word(w);
    }
  }
}

// Each λ or K counts one unit of the derivative order / 2.
TEST(ZeroModeScalar, HomogeneousOfHalfLength) {
  for (int len = 2; len <= 8; len += 2) {
    for (const SignWord& w : balanced_words(len)) {
      const RingElem v = nabla_scalar(w);
      for (const auto& [m, c] : v.terms()) {
        EXPECT_EQ(m.l, 0);
        EXPECT_EQ(m.lambda + m.K, len / 2) << format_sign_word(w);
      }
    }
  }
}

// f is real, so conjugating the frame (h+ ↔ h−) conjugates a real scalar.
TEST(ZeroModeScalar, InvariantUnderSignFlip) {
  for (int len = 2; len <= 8; len += 2) {
    for (const SignWord& w : balanced_words(len)) EXPECT_EQ(nabla_scalar(w), nabla_scalar(flipped(w)));
  }
}

TEST(Rewriter, SwapProducesCurvatureSideTerms) {
  const CovTerm t{RingElem(1), parse_sign_word("+-+")};
  const auto out = swap_adjacent(t, 1);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(format_sign_word(out[0].args), "-++");
  // −R(h+, h−)h+ = −2K h+.
  EXPECT_EQ(out[1].coeff, RingElem(-2) * K);
  EXPECT_EQ(format_sign_word(out[1].args), "+");
  // The last pair is symmetric.
  EXPECT_EQ(swap_adjacent(t, 2).size(), 1u);
  EXPECT_THROW(swap_adjacent(t, 3), std::out_of_range);
}

TEST(Rewriter, CurvatureActionAntisymmetric) {
  for (Sign i : {Sign::Plus, Sign::Minus}) {
    for (Sign j : {Sign::Plus, Sign::Minus}) {
      for (Sign t : {Sign::Plus, Sign::Minus}) {
        EXPECT_EQ(curvature_act(i, j, t), -curvature_act(j, i, t));
      }
    }
  }
}

TEST(Rewriter, ComposeSplit) {
  const CovTerm t = compose_split({RingElem(3), parse_sign_word("++-")});
  EXPECT_EQ(t.coeff, RingElem(-3) * lam);
  EXPECT_EQ(format_sign_word(t.args), "+");
  EXPECT_THROW(compose_split({RingElem(1), parse_sign_word("+--")}), std::invalid_argument);
}

}  // namespace
}  // namespace mosva
