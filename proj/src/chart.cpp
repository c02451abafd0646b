#include "mosva/chart.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mosva::geometry {

SphereChart::SphereChart(double radius) : radius_(radius) {
  if (!(radius > 0)) throw std::invalid_argument("sphere radius must be positive");
}

MetricJet SphereChart::metric(const Jet& u, const Jet&) const {
  const double r2 = radius_ * radius_;
  const Jet s = sin(u);
  Jet zero(u.degree(), 0.0);
  return {{{Jet(u.degree(), r2), zero}, {zero, s * s * r2}}};
}

std::array<Vec2, 2> SphereChart::frame(const Vec2& p) const {
  return {{{1.0 / radius_, 0.0}, {0.0, 1.0 / (radius_ * std::sin(p[0]))}}};
}

void SphereChart::check_point(const Vec2& p) const {
  if (std::abs(std::sin(p[0])) < 1e-6) {
    throw std::domain_error("sphere chart is degenerate at φ = " + std::to_string(p[0]));
  }
}

Vec2 SphereChart::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> phi(0.4, 2.7);
  std::uniform_real_distribution<double> theta(-std::numbers::pi, std::numbers::pi);
  const double a = phi(rng);
  return {a, theta(rng)};
}

Vec2 SphereChart::area_form_primitive(const Vec2& p) const {
  return {0.0, -radius_ * radius_ * std::cos(p[0])};
}

MetricJet HyperbolicDiskChart::metric(const Jet& u, const Jet& v) const {
  const Jet w = 1.0 - u * u - v * v;
  const Jet conformal = 4.0 / (w * w);
  Jet zero(u.degree(), 0.0);
  return {{{conformal, zero}, {zero, conformal}}};
}

std::array<Vec2, 2> HyperbolicDiskChart::frame(const Vec2& p) const {
  const double s = (1.0 - p[0] * p[0] - p[1] * p[1]) / 2.0;
  return {{{s, 0.0}, {0.0, s}}};
}

void HyperbolicDiskChart::check_point(const Vec2& p) const {
  if (p[0] * p[0] + p[1] * p[1] >= 1.0 - 1e-9) {
    throw std::domain_error("point lies outside the open unit disk");
  }
}

Vec2 HyperbolicDiskChart::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = 0.8 * std::sqrt(unit(rng));
  const double t = 2.0 * std::numbers::pi * unit(rng);
  return {r * std::cos(t), r * std::sin(t)};
}

Vec2 HyperbolicDiskChart::area_form_primitive(const Vec2& p) const {
  const double w = 1.0 - p[0] * p[0] - p[1] * p[1];
  return {-2.0 * p[1] / w, 2.0 * p[0] / w};
}

MetricJet FlatChart::metric(const Jet& u, const Jet&) const {
  Jet one(u.degree(), 1.0);
  Jet zero(u.degree(), 0.0);
  return {{{one, zero}, {zero, one}}};
}

std::array<Vec2, 2> FlatChart::frame(const Vec2&) const { return {{{1.0, 0.0}, {0.0, 1.0}}}; }

Vec2 FlatChart::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const double a = d(rng);
  return {a, d(rng)};
}

Vec2 FlatChart::area_form_primitive(const Vec2& p) const { return {-p[1] / 2.0, p[0] / 2.0}; }

std::unique_ptr<Chart> make_chart(const std::string& name) {
  if (name == "sphere") return std::make_unique<SphereChart>();
  if (name == "hyperbolic") return std::make_unique<HyperbolicDiskChart>();
  if (name == "flat") return std::make_unique<FlatChart>();
  throw std::invalid_argument("unknown chart '" + name + "' (sphere|hyperbolic|flat)");
}

double metric_product(const Chart& chart, const Vec2& p, const Vec2& a, const Vec2& b) {
  const MetricJet g = chart.metric(Jet(0, p[0]), Jet(0, p[1]));
  double s = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) s += g[i][j].value() * a[i] * b[j];
  }
  return s;
}

ChristoffelJet christoffel_jet(const Chart& chart, const Vec2& p, int degree) {
  chart.check_point(p);
  const Jet u = Jet::variable(degree + 1, p[0], 0);
  const Jet v = Jet::variable(degree + 1, p[1], 1);
  const MetricJet g = chart.metric(u, v);
  const Jet det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  const Jet inv_det = 1.0 / det;
  const MetricJet ginv{{{g[1][1] * inv_det, -g[0][1] * inv_det},
                        {-g[1][0] * inv_det, g[0][0] * inv_det}}};
  // dg[d][a][b] = ∂_d g_ab
  std::array<MetricJet, 2> dg;
  for (int d = 0; d < 2; ++d) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) dg[d][a][b] = g[a][b].d(d);
    }
  }
  ChristoffelJet gamma;
  for (int c = 0; c < 2; ++c) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        Jet s(degree, 0.0);
        for (int d = 0; d < 2; ++d) {
          s += ginv[c][d] * (dg[a][d][b] + dg[b][d][a] - dg[d][a][b]);
        }
        gamma[c][a][b] = s * 0.5;
      }
    }
  }
  return gamma;
}

Christoffel christoffel(const Chart& chart, const Vec2& p) {
  const ChristoffelJet gj = christoffel_jet(chart, p, 0);
  Christoffel g{};
  for (int c = 0; c < 2; ++c) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) g[c][a][b] = gj[c][a][b].value();
    }
  }
  return g;
}

namespace {

std::vector<double> legendre(int ell) {
  // Coefficients of P_ℓ in ascending powers.
  std::vector<double> prev{1.0};
  if (ell == 0) return prev;
  std::vector<double> cur{0.0, 1.0};
  for (int k = 1; k < ell; ++k) {
    std::vector<double> next(static_cast<std::size_t>(k + 2), 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += (2.0 * k + 1) * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= k * prev[i];
    for (double& x : next) x /= (k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Eigenfunction sphere_harmonic(int ell, int m, double radius) {
  if (ell < 0 || m < 0 || m > ell) throw std::invalid_argument("need 0 <= m <= ell");
  std::vector<double> q = legendre(ell);
  for (int k = 0; k < m; ++k) {
    std::vector<double> dq;
    for (std::size_t i = 1; i < q.size(); ++i) dq.push_back(static_cast<double>(i) * q[i]);
    if (dq.empty()) dq.push_back(0.0);
    q = std::move(dq);
  }
  Eigenfunction e;
  e.name = "Y_" + std::to_string(ell) + "^" + std::to_string(m);
  e.lambda = ell * (ell + 1) / (radius * radius);
  e.f = [q, m](const Jet& phi, const Jet& theta) {
    const Jet t = cos(phi);
    Jet poly(phi.degree(), 0.0);
    for (auto it = q.rbegin(); it != q.rend(); ++it) poly = poly * t + *it;
    Jet out = poly * pow_int(sin(phi), m);
    if (m > 0) out = out * cos(theta * static_cast<double>(m));
    return out;
  };
  return e;
}

Eigenfunction hyperbolic_power(double s) {
  Eigenfunction e;
  e.name = "poisson^" + std::to_string(s);
  e.lambda = s * (1.0 - s);
  e.f = [s](const Jet& x, const Jet& y) {
    const Jet num = 1.0 - x * x - y * y;
    const Jet den = (1.0 - x) * (1.0 - x) + y * y;
    return pow(num / den, s);
  };
  return e;
}

Eigenfunction flat_wave(double a, double b) {
  Eigenfunction e;
  e.name = "wave";
  e.lambda = a * a + b * b;
  e.f = [a, b](const Jet& x, const Jet& y) { return cos(x * a + y * b); };
  return e;
}

std::vector<double> nabla_n_numeric(const Eigenfunction& f, const Chart& chart, int n,
                                    const Vec2& p) {
  if (n < 0) throw std::invalid_argument("derivative order must be non-negative");
  chart.check_point(p);
  const Jet u = Jet::variable(n, p[0], 0);
  const Jet v = Jet::variable(n, p[1], 1);
  const Jet fj = f.f(u, v);
  if (n == 0) return {fj.value()};

  const ChristoffelJet gamma =
      n >= 2 ? christoffel_jet(chart, p, n - 2) : ChristoffelJet{};
  std::vector<Jet> T{fj.d(0), fj.d(1)};
  for (int k = 2; k <= n; ++k) {
    const std::size_t prev = T.size();  // 2^{k−1}
    std::vector<Jet> next;
    next.reserve(2 * prev);
    for (int a = 0; a < 2; ++a) {
      for (std::size_t rest = 0; rest < prev; ++rest) {
        Jet val = T[rest].d(a);
        // Subtract Γ^c_{a b_i} T[… c …] for every slot i of the rest.
        for (int i = 0; i < k - 1; ++i) {
          const int shift = k - 2 - i;
          const int b = static_cast<int>((rest >> shift) & 1u);
          for (int c = 0; c < 2; ++c) {
            const std::size_t replaced =
                (rest & ~(std::size_t{1} << shift)) | (static_cast<std::size_t>(c) << shift);
            val -= gamma[c][a][b] * T[replaced];
          }
        }
        next.push_back(std::move(val));
      }
    }
    T = std::move(next);
  }
  std::vector<double> out;
  out.reserve(T.size());
  for (const Jet& j : T) out.push_back(j.value());
  return out;
}

std::complex<double> contract_frame(const std::vector<double>& tensor, const Chart& chart,
                                    const std::string& word, const Vec2& p,
                                    double frame_rotation) {
  const std::size_t n = word.size();
  if (tensor.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("tensor rank does not match word length");
  }
  auto X = chart.frame(p);
  const double c = std::cos(frame_rotation);
  const double s = std::sin(frame_rotation);
  const Vec2 X1{c * X[0][0] + s * X[1][0], c * X[0][1] + s * X[1][1]};
  const Vec2 X2{-s * X[0][0] + c * X[1][0], -s * X[0][1] + c * X[1][1]};
  using C = std::complex<double>;
  std::array<std::array<C, 2>, 2> h;  // h[sign][component], sign 0 = plus
  for (int a = 0; a < 2; ++a) {
    h[0][a] = C(X1[a], -X2[a]);
    h[1][a] = C(X1[a], X2[a]);
  }
  std::vector<int> sign(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (word[i] == '+') {
      sign[i] = 0;
    } else if (word[i] == '-') {
      sign[i] = 1;
    } else {
      throw std::invalid_argument("frame word must be over {+, -}");
    }
  }
  C total = 0;
  for (std::size_t idx = 0; idx < tensor.size(); ++idx) {
    C term = tensor[idx];
    for (std::size_t i = 0; i < n; ++i) {
      const int a = static_cast<int>((idx >> (n - 1 - i)) & 1u);
      term *= h[sign[i]][a];
    }
    total += term;
  }
  return total;
}

double eigen_residual(const Eigenfunction& f, const Chart& chart, const Vec2& p) {
  const std::vector<double> hess = nabla_n_numeric(f, chart, 2, p);
  const double laplacian = contract_frame(hess, chart, "+-", p).real();
  const double value = nabla_n_numeric(f, chart, 0, p)[0];
  return laplacian + f.lambda * value;
}

std::vector<Vec2> sample_points(const Chart& chart, int count, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vec2> pts;
  for (int i = 0; i < count; ++i) pts.push_back(chart.sample(rng));
  return pts;
}

}  // namespace mosva::geometry
