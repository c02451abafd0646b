#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mosva/curvature.hpp"
#include "mosva/holonomy.hpp"
#include "mosva/jet.hpp"
#include "mosva/oracle.hpp"

namespace mosva::geometry {
namespace {

TEST(Jet, CompositionPartials) {
  // g(x, y) = exp(sin(x)·y) at (0.3, 0.7).
  const double x0 = 0.3, y0 = 0.7;
  const Jet x = Jet::variable(3, x0, 0);
  const Jet y = Jet::variable(3, y0, 1);
  const Jet g = exp(sin(x) * y);
  const double e = std::exp(std::sin(x0) * y0);
  EXPECT_NEAR(g.value(), e, 1e-14);
  EXPECT_NEAR(g.partial(1, 0), e * std::cos(x0) * y0, 1e-13);
  EXPECT_NEAR(g.partial(0, 1), e * std::sin(x0), 1e-13);
  EXPECT_NEAR(g.partial(0, 2), e * std::sin(x0) * std::sin(x0), 1e-13);
  EXPECT_NEAR(g.partial(1, 1), e * std::cos(x0) * (1 + std::sin(x0) * y0), 1e-13);
}

TEST(Jet, DivisionInvertsMultiplication) {
  const Jet x = Jet::variable(4, 0.4, 0);
  const Jet y = Jet::variable(4, -0.2, 1);
  const Jet a = cos(x) + y * y + 2.0;
  const Jet b = exp(y) * x + 1.5;
  const Jet back = (a * b) / b;
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; i + j <= 4; ++j) EXPECT_NEAR(back.coeff(i, j), a.coeff(i, j), 1e-12);
  }
  EXPECT_NEAR(pow(x, 2.5).partial(1, 0), 2.5 * std::pow(0.4, 1.5), 1e-13);
  EXPECT_NEAR(log(x).partial(2, 0), -1 / (0.4 * 0.4), 1e-12);
}

TEST(Chart, SphereChristoffelSymbols) {
  SphereChart s;
  const Vec2 p{1.1, 0.4};
  const Christoffel g = christoffel(s, p);
  EXPECT_NEAR(g[0][1][1], -std::sin(1.1) * std::cos(1.1), 1e-13);
  EXPECT_NEAR(g[1][0][1], std::cos(1.1) / std::sin(1.1), 1e-13);
  EXPECT_NEAR(g[1][1][0], g[1][0][1], 1e-15);
  EXPECT_NEAR(g[0][0][0], 0.0, 1e-15);
}

TEST(Chart, FramesAreOrthonormal) {
  for (const char* name : {"sphere", "hyperbolic", "flat"}) {
    const auto chart = make_chart(name);
    for (const Vec2& p : sample_points(*chart, 10, 3)) {
      const auto X = chart->frame(p);
      EXPECT_NEAR(metric_product(*chart, p, X[0], X[0]), 1.0, 1e-12) << name;
      EXPECT_NEAR(metric_product(*chart, p, X[1], X[1]), 1.0, 1e-12) << name;
      EXPECT_NEAR(metric_product(*chart, p, X[0], X[1]), 0.0, 1e-12) << name;
    }
  }
}

TEST(Chart, DegeneratePointsRejected) {
  SphereChart s;
  EXPECT_THROW(s.check_point({0.0, 0.3}), std::domain_error);
  EXPECT_THROW(s.check_point({std::numbers::pi, 0.3}), std::domain_error);
  HyperbolicDiskChart h;
  EXPECT_THROW(h.check_point({0.8, 0.8}), std::domain_error);
  EXPECT_THROW(make_chart("torus"), std::invalid_argument);
}

TEST(Chart, SamplingIsSeeded) {
  SphereChart s;
  EXPECT_EQ(sample_points(s, 5, 9), sample_points(s, 5, 9));
  EXPECT_NE(sample_points(s, 5, 9), sample_points(s, 5, 10));
}

TEST(Eigenfunctions, SatisfyTheirEquation) {
  SphereChart s;
  HyperbolicDiskChart h;
  FlatChart f;
  for (int ell = 0; ell <= 4; ++ell) {
    for (int m = 0; m <= ell; ++m) {
      const Eigenfunction e = sphere_harmonic(ell, m);
      EXPECT_DOUBLE_EQ(e.lambda, ell * (ell + 1));
      for (const Vec2& p : sample_points(s, 5, 1)) EXPECT_NEAR(eigen_residual(e, s, p), 0, 1e-9);
    }
  }
  for (double sp : {0.5, 2.0, 3.0}) {
    for (const Vec2& p : sample_points(h, 5, 2)) {
      EXPECT_NEAR(eigen_residual(hyperbolic_power(sp), h, p), 0, 1e-8);
    }
  }
  for (const Vec2& p : sample_points(f, 5, 3)) EXPECT_NEAR(eigen_residual(flat_wave(1.0, 2.0), f, p), 0, 1e-10);
  SphereChart r2(2.0);
  EXPECT_DOUBLE_EQ(r2.curvature(), 0.25);
  for (const Vec2& p : sample_points(r2, 5, 4)) {
    EXPECT_NEAR(eigen_residual(sphere_harmonic(2, 1, 2.0), r2, p), 0, 1e-9);
  }
}

TEST(Oracle, BalancedContractionsAreFrameInvariant) {
  SphereChart s;
  const Eigenfunction e = sphere_harmonic(3, 1);
  const Vec2 p{1.0, 0.5};
  const auto T = nabla_n_numeric(e, s, 4, p);
  for (double a : {0.3, 1.2, 2.5}) {
    const auto z0 = contract_frame(T, s, "+-+-", p);
    const auto z1 = contract_frame(T, s, "+-+-", p, a);
    EXPECT_NEAR(std::abs(z0 - z1), 0.0, 1e-10);
    // A charge-2 word picks up a phase of modulus one.
    EXPECT_NEAR(std::abs(contract_frame(T, s, "+++-", p, a)),
                std::abs(contract_frame(T, s, "+++-", p)), 1e-10);
  }
}

double symbolic(const std::string& w, double lambda, double K) {
  return nabla_scalar(parse_sign_word(w)).eval(0.0, lambda, K);
}

TEST(Oracle, SphereAgreesWithRewriter) {
  SphereChart s;
  const auto pts = sample_points(s, 12, 17);
  for (int ell = 1; ell <= 4; ++ell) {
    const Eigenfunction e = sphere_harmonic(ell, ell % 2);
    for (const char* w : {"+-", "-+", "++--", "+-+-", "-++-", "+--+", "--++", "+++---", "+-+--+"}) {
      const OracleEstimate est = oracle_scalar(w, e, s, pts);
      const double sym = symbolic(w, e.lambda, 1.0);
      EXPECT_LE(relative_error(est.estimate, sym), 1e-6) << w << " ell " << ell;
      EXPECT_LE(est.spread, 1e-6) << w;
    }
  }
  EXPECT_NEAR(std::abs(oracle_scalar("++--", sphere_harmonic(1), s, pts).estimate), 0.0, 1e-8);
}

TEST(Oracle, HyperbolicAgreesWithRewriter) {
  HyperbolicDiskChart h;
  const auto pts = sample_points(h, 12, 18);
  for (double sp : {2.0, 3.0}) {
    const Eigenfunction e = hyperbolic_power(sp);
    for (const char* w : {"+-", "++--", "+-+-", "-+-+"}) {
      const OracleEstimate est = oracle_scalar(w, e, h, pts);
      EXPECT_LE(relative_error(est.estimate, symbolic(w, e.lambda, -1.0)), 1e-6) << w;
    }
  }
}

TEST(Oracle, FlatWaveHasPureLambdaPowers) {
  FlatChart f;
  const auto pts = sample_points(f, 8, 19);
  const Eigenfunction e = flat_wave(1.0, 0.5);
  for (const char* w : {"+-", "++--", "-+-+", "+++---"}) {
    const OracleEstimate est = oracle_scalar(w, e, f, pts);
    EXPECT_LE(relative_error(est.estimate, symbolic(w, e.lambda, 0.0)), 1e-8) << w;
  }
}

TEST(Holonomy, OctantRotatesByQuarterTurn) {
  SphereChart s;
  const auto oct = sphere_octant();
  const HolonomyResult r = holonomy_triangle(s, oct[0], oct[1], oct[2]);
  EXPECT_NEAR(std::abs(r.rotation), std::numbers::pi / 2, 1e-4);
  EXPECT_NEAR(std::abs(r.area), std::numbers::pi / 2, 1e-4);
}

TEST(Holonomy, SmallTriangleRatioIsCurvature) {
  SphereChart s;
  HyperbolicDiskChart h;
  SphereChart big(2.0);
  FlatChart f;
  const double eps = 0.05;
  auto ratio = [&](const Chart& c, Vec2 p) {
    const HolonomyResult r = holonomy_triangle(c, p, {p[0] + eps, p[1]}, {p[0], p[1] + eps});
    return r.rotation / r.area;
  };
  EXPECT_NEAR(ratio(s, {1.2, 0.3}), 1.0, 1e-3);
  EXPECT_NEAR(ratio(big, {1.2, 0.3}), 0.25, 1e-3);
  EXPECT_NEAR(ratio(h, {0.1, 0.2}), -1.0, 1e-3);
  const HolonomyResult flat = holonomy_triangle(f, {0, 0}, {1, 0}, {0, 1});
  EXPECT_NEAR(flat.rotation, 0.0, 1e-10);
  EXPECT_NEAR(flat.area, 0.5, 1e-10);
}

}  // namespace
}  // namespace mosva::geometry
