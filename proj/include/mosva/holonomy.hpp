#pragma once

#include <array>
#include <vector>

#include "mosva/chart.hpp"

namespace mosva::geometry {

using Vec3 = std::array<double, 3>;

struct GeodesicPath {
  Vec2 initial_velocity{};
  int newton_iterations = 0;
};

/// Initial velocity v with exp_p(v) = q, by Newton shooting on a fixed-step
/// RK4 integrator. Throws std::runtime_error when shooting does not converge.
GeodesicPath shoot_geodesic(const Chart& chart, const Vec2& p, const Vec2& q, int steps,
                            const Vec2* guess = nullptr);

/// Point at parameter t ∈ [0, 1] of the geodesic from p with velocity v.
Vec2 geodesic_point(const Chart& chart, const Vec2& p, const Vec2& v, double t, int steps);

struct HolonomyResult {
  /// Signed angle of the transported vector relative to the start, in
  /// (−π, π], positive in the chart's orientation.
  double rotation = 0.0;
  /// Signed area enclosed by p → q → r → p.
  double area = 0.0;
  int steps = 0;
  /// Change of the angle at the last resolution doubling.
  double last_change = 0.0;
};

/// Transports a unit vector around the geodesic triangle p → q → r → p,
/// doubling the step count until the angle changes by less than `tol`.
HolonomyResult holonomy_triangle(const Chart& chart, const Vec2& p, const Vec2& q,
                                 const Vec2& r, double tol = 1e-10, int min_steps = 32,
                                 int max_steps = 1 << 14);

/// (φ, θ) of the direction of a nonzero point in R³.
Vec2 sphere_coordinates(const Vec3& x);

/// Vertices of a geodesic octant (all angles π/2) rotated so its center sits
/// on the equator at θ = 0, away from the coordinate poles.
std::array<Vec2, 3> sphere_octant();

}  // namespace mosva::geometry
