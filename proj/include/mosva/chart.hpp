#pragma once

#include <array>
#include <complex>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "mosva/jet.hpp"

namespace mosva::geometry {

using Vec2 = std::array<double, 2>;
using MetricJet = std::array<std::array<Jet, 2>, 2>;
/// gamma[c][a][b] = Γ^c_{ab}.
using Christoffel = std::array<std::array<std::array<double, 2>, 2>, 2>;
using ChristoffelJet = std::array<std::array<std::array<Jet, 2>, 2>, 2>;

/// A coordinate patch of a constant-curvature surface.
class Chart {
 public:
  virtual ~Chart() = default;
  virtual std::string name() const = 0;
  virtual double curvature() const = 0;
  /// Metric components as jets in the coordinate jets (u, v).
  virtual MetricJet metric(const Jet& u, const Jet& v) const = 0;
  /// Orthonormal frame (X1, X2) in coordinate components.
  virtual std::array<Vec2, 2> frame(const Vec2& p) const = 0;
  /// Throws std::domain_error at coordinate degeneracies.
  virtual void check_point(const Vec2& p) const = 0;
  /// Uniform sample inside the safe sub-chart.
  virtual Vec2 sample(std::mt19937_64& rng) const = 0;
  /// A 1-form ω with dω equal to the area form (for signed areas).
  virtual Vec2 area_form_primitive(const Vec2& p) const = 0;
};

/// Round sphere of radius r, coordinates (φ, θ): r²(dφ² + sin²φ dθ²).
class SphereChart : public Chart {
 public:
  explicit SphereChart(double radius = 1.0);
  std::string name() const override { return "sphere"; }
  double curvature() const override { return 1.0 / (radius_ * radius_); }
  MetricJet metric(const Jet& u, const Jet& v) const override;
  std::array<Vec2, 2> frame(const Vec2& p) const override;
  void check_point(const Vec2& p) const override;
  Vec2 sample(std::mt19937_64& rng) const override;
  Vec2 area_form_primitive(const Vec2& p) const override;
  double radius() const { return radius_; }

 private:
  double radius_;
};

/// Poincaré disk 4(dx² + dy²)/(1 − x² − y²)², curvature −1.
class HyperbolicDiskChart : public Chart {
 public:
  std::string name() const override { return "hyperbolic"; }
  double curvature() const override { return -1.0; }
  MetricJet metric(const Jet& u, const Jet& v) const override;
  std::array<Vec2, 2> frame(const Vec2& p) const override;
  void check_point(const Vec2& p) const override;
  Vec2 sample(std::mt19937_64& rng) const override;
  Vec2 area_form_primitive(const Vec2& p) const override;
};

/// Euclidean plane; used as the flat reference.
class FlatChart : public Chart {
 public:
  std::string name() const override { return "flat"; }
  double curvature() const override { return 0.0; }
  MetricJet metric(const Jet& u, const Jet& v) const override;
  std::array<Vec2, 2> frame(const Vec2& p) const override;
  void check_point(const Vec2&) const override {}
  Vec2 sample(std::mt19937_64& rng) const override;
  Vec2 area_form_primitive(const Vec2& p) const override;
};

std::unique_ptr<Chart> make_chart(const std::string& name);

double metric_product(const Chart& chart, const Vec2& p, const Vec2& a, const Vec2& b);

/// Γ^c_{ab} at a point.
Christoffel christoffel(const Chart& chart, const Vec2& p);
/// Γ as jets of the given degree about p.
ChristoffelJet christoffel_jet(const Chart& chart, const Vec2& p, int degree);

/// Scalar function with its claimed eigenvalue: −Δf = λf.
struct Eigenfunction {
  std::string name;
  double lambda = 0.0;
  std::function<Jet(const Jet&, const Jet&)> f;
};

/// P_ℓ^m(cos φ)·cos(mθ) on the sphere of the chart's radius; λ = ℓ(ℓ+1)/r².
Eigenfunction sphere_harmonic(int ell, int m = 0, double radius = 1.0);
/// ((1 − x² − y²)/((1 − x)² + y²))^s, the half-plane power y^s moved to the
/// disk by the Cayley transform; λ = s(1 − s).
Eigenfunction hyperbolic_power(double s);
/// Plane wave cos(a x + b y) with λ = a² + b².
Eigenfunction flat_wave(double a, double b);

/// Components of ∇^n f at p, flattened with the first slot most significant:
/// index = a1·2^{n−1} + … + an.
std::vector<double> nabla_n_numeric(const Eigenfunction& f, const Chart& chart, int n,
                                    const Vec2& p);

/// Σ T_{a1…an} h_{w1}^{a1} ⋯ h_{wn}^{an} with h± = X1 ∓ iX2. `word` is a
/// string over {+, −}.
std::complex<double> contract_frame(const std::vector<double>& tensor, const Chart& chart,
                                    const std::string& word, const Vec2& p,
                                    double frame_rotation = 0.0);

/// Δf + λf at p.
double eigen_residual(const Eigenfunction& f, const Chart& chart, const Vec2& p);

std::vector<Vec2> sample_points(const Chart& chart, int count, unsigned long long seed);

}  // namespace mosva::geometry
