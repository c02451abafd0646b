#include "mosva/holonomy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mosva::geometry {
namespace {

// x, ẋ, transported V, accumulated ∫ω.
using State = std::array<double, 7>;

State derivative(const Chart& chart, const State& s) {
  const Vec2 x{s[0], s[1]};
  const Christoffel g = christoffel(chart, x);
  const Vec2 omega = chart.area_form_primitive(x);
  State d{};
  d[0] = s[2];
  d[1] = s[3];
  for (int c = 0; c < 2; ++c) {
    double acc = 0;
    double transport = 0;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        acc += g[c][a][b] * s[2 + a] * s[2 + b];
        transport += g[c][a][b] * s[2 + a] * s[4 + b];
      }
    }
    d[2 + c] = -acc;
    d[4 + c] = -transport;
  }
  d[6] = omega[0] * s[2] + omega[1] * s[3];
  return d;
}

State integrate(const Chart& chart, State s, double t_end, int steps) {
  const double h = t_end / steps;
  auto axpy = [](const State& a, const State& b, double k) {
    State r;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + k * b[i];
    return r;
  };
  for (int i = 0; i < steps; ++i) {
    const State k1 = derivative(chart, s);
    const State k2 = derivative(chart, axpy(s, k1, h / 2));
    const State k3 = derivative(chart, axpy(s, k2, h / 2));
    const State k4 = derivative(chart, axpy(s, k3, h));
    for (std::size_t j = 0; j < s.size(); ++j) {
      s[j] += h / 6 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
    }
  }
  return s;
}

Vec2 endpoint(const Chart& chart, const Vec2& p, const Vec2& v, int steps) {
  const State s = integrate(chart, {p[0], p[1], v[0], v[1], 0, 0, 0}, 1.0, steps);
  return {s[0], s[1]};
}

}  // namespace

GeodesicPath shoot_geodesic(const Chart& chart, const Vec2& p, const Vec2& q, int steps,
                            const Vec2* guess) {
  chart.check_point(p);
  chart.check_point(q);
  Vec2 v = guess ? *guess : Vec2{q[0] - p[0], q[1] - p[1]};
  for (int it = 1; it <= 60; ++it) {
    const Vec2 e = endpoint(chart, p, v, steps);
    const Vec2 F{e[0] - q[0], e[1] - q[1]};
    if (std::hypot(F[0], F[1]) < 1e-13) return {v, it};
    const double h = 1e-7 * std::max(1.0, std::hypot(v[0], v[1]));
    double J[2][2];
    for (int k = 0; k < 2; ++k) {
      Vec2 vk = v;
      vk[k] += h;
      const Vec2 ek = endpoint(chart, p, vk, steps);
      J[0][k] = (ek[0] - e[0]) / h;
      J[1][k] = (ek[1] - e[1]) / h;
    }
    const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    if (std::abs(det) < 1e-14) break;
    v[0] -= (J[1][1] * F[0] - J[0][1] * F[1]) / det;
    v[1] -= (-J[1][0] * F[0] + J[0][0] * F[1]) / det;
  }
  throw std::runtime_error("geodesic shooting did not converge");
}

Vec2 geodesic_point(const Chart& chart, const Vec2& p, const Vec2& v, double t, int steps) {
  const State s = integrate(chart, {p[0], p[1], v[0], v[1], 0, 0, 0}, t, steps);
  return {s[0], s[1]};
}

HolonomyResult holonomy_triangle(const Chart& chart, const Vec2& p, const Vec2& q,
                                 const Vec2& r, double tol, int min_steps, int max_steps) {
  const std::array<Vec2, 4> loop{p, q, r, p};
  std::array<Vec2, 3> guesses{};
  bool have_guess = false;
  HolonomyResult result;
  double previous = 0.0;

  for (int steps = min_steps; steps <= max_steps; steps *= 2) {
    const auto X = chart.frame(p);
    State s{p[0], p[1], 0, 0, X[0][0], X[0][1], 0};
    for (int e = 0; e < 3; ++e) {
      const GeodesicPath g =
          shoot_geodesic(chart, loop[e], loop[e + 1], steps, have_guess ? &guesses[e] : nullptr);
      guesses[e] = g.initial_velocity;
      s[0] = loop[e][0];
      s[1] = loop[e][1];
      s[2] = g.initial_velocity[0];
      s[3] = g.initial_velocity[1];
      s = integrate(chart, s, 1.0, steps);
    }
    have_guess = true;
    const Vec2 V{s[4], s[5]};
    const double c1 = metric_product(chart, p, V, X[0]);
    const double c2 = metric_product(chart, p, V, X[1]);
    result.rotation = std::atan2(c2, c1);
    result.area = s[6];
    result.steps = steps;
    if (steps > min_steps) {
      result.last_change = std::abs(result.rotation - previous);
      if (result.last_change < tol) break;
    }
    previous = result.rotation;
  }
  return result;
}

Vec2 sphere_coordinates(const Vec3& x) {
  const double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  return {std::acos(x[2] / n), std::atan2(x[1], x[0])};
}

std::array<Vec2, 3> sphere_octant() {
  // Rodrigues rotation taking c = (1,1,1)/√3 to e1 = (1,0,0).
  const double s3 = std::sqrt(3.0);
  const Vec3 c{1 / s3, 1 / s3, 1 / s3};
  Vec3 axis{0.0, c[2], -c[1]};  // c × e1
  const double an = std::sqrt(axis[1] * axis[1] + axis[2] * axis[2]);
  for (double& a : axis) a /= an;
  const double angle = std::acos(c[0]);
  auto rotate = [&](const Vec3& v) {
    const double ct = std::cos(angle);
    const double st = std::sin(angle);
    const Vec3 kxv{axis[1] * v[2] - axis[2] * v[1], axis[2] * v[0] - axis[0] * v[2],
                   axis[0] * v[1] - axis[1] * v[0]};
    const double kv = axis[0] * v[0] + axis[1] * v[1] + axis[2] * v[2];
    Vec3 out;
    for (int i = 0; i < 3; ++i) out[i] = v[i] * ct + kxv[i] * st + axis[i] * kv * (1 - ct);
    return out;
  };
  return {sphere_coordinates(rotate({1, 0, 0})), sphere_coordinates(rotate({0, 1, 0})),
          sphere_coordinates(rotate({0, 0, 1}))};
}

}  // namespace mosva::geometry
