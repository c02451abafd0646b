#include "mosva/jet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mosva::geometry {

Jet::Jet(int degree, double constant) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("jet degree must be non-negative");
  c_.assign(static_cast<std::size_t>((degree + 1) * (degree + 1)), 0.0);
  c_[0] = constant;
}

Jet Jet::variable(int degree, double base, int axis) {
  Jet j(degree, base);
  if (degree >= 1) {
    if (axis == 0) {
      j.coeff(1, 0) = 1.0;
    } else {
      j.coeff(0, 1) = 1.0;
    }
  }
  return j;
}

double Jet::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > degree_) return 0.0;
  return c_[static_cast<std::size_t>(index(i, j))];
}

double& Jet::coeff(int i, int j) {
  if (i < 0 || j < 0 || i + j > degree_) throw std::out_of_range("jet coefficient");
  return c_[static_cast<std::size_t>(index(i, j))];
}

double Jet::partial(int i, int j) const {
  double f = coeff(i, j);
  for (int k = 2; k <= i; ++k) f *= k;
  for (int k = 2; k <= j; ++k) f *= k;
  return f;
}

Jet Jet::d(int axis) const {
  if (degree_ == 0) return Jet(0, 0.0);
  Jet out(degree_ - 1);
  for (int i = 0; i <= degree_ - 1; ++i) {
    for (int j = 0; i + j <= degree_ - 1; ++j) {
      out.coeff(i, j) = axis == 0 ? (i + 1) * coeff(i + 1, j) : (j + 1) * coeff(i, j + 1);
    }
  }
  return out;
}

Jet Jet::truncated(int degree) const {
  Jet out(std::min(degree, degree_));
  for (int i = 0; i <= out.degree_; ++i) {
    for (int j = 0; i + j <= out.degree_; ++j) out.coeff(i, j) = coeff(i, j);
  }
  return out;
}

Jet& Jet::operator+=(const Jet& o) {
  if (o.degree_ < degree_) *this = truncated(o.degree_);
  for (int i = 0; i <= degree_; ++i) {
    for (int j = 0; i + j <= degree_; ++j) coeff(i, j) += o.coeff(i, j);
  }
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  if (o.degree_ < degree_) *this = truncated(o.degree_);
  for (int i = 0; i <= degree_; ++i) {
    for (int j = 0; i + j <= degree_; ++j) coeff(i, j) -= o.coeff(i, j);
  }
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  const int D = std::min(a.degree_, b.degree_);
  Jet out(D);
  for (int i1 = 0; i1 <= D; ++i1) {
    for (int j1 = 0; i1 + j1 <= D; ++j1) {
      const double x = a.coeff(i1, j1);
      if (x == 0.0) continue;
      for (int i2 = 0; i1 + j1 + i2 <= D; ++i2) {
        for (int j2 = 0; i1 + j1 + i2 + j2 <= D; ++j2) {
          out.coeff(i1 + i2, j1 + j2) += x * b.coeff(i2, j2);
        }
      }
    }
  }
  return out;
}

Jet& Jet::operator*=(const Jet& o) {
  *this = *this * o;
  return *this;
}

Jet& Jet::operator+=(double s) {
  c_[0] += s;
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (double& x : c_) x *= s;
  return *this;
}

Jet Jet::operator-() const {
  Jet out = *this;
  for (double& x : out.c_) x = -x;
  return out;
}

Jet operator/(const Jet& a, const Jet& b) { return a * pow(b, -1.0); }

Jet operator/(double s, const Jet& a) { return pow(a, -1.0) * s; }

Jet compose(const Jet& a, const std::vector<double>& derivatives) {
  const int D = a.degree();
  Jet h = a;
  h.coeff(0, 0) = 0.0;  // nilpotent part
  Jet out(D, derivatives.at(0));
  Jet power(D, 1.0);
  double factorial = 1.0;
  for (int k = 1; k <= D; ++k) {
    power = power * h;
    factorial *= k;
    out += power * (derivatives.at(static_cast<std::size_t>(k)) / factorial);
  }
  return out;
}

Jet sin(const Jet& a) {
  std::vector<double> d;
  const double x = a.value();
  for (int k = 0; k <= a.degree(); ++k) {
    const int r = k % 4;
    d.push_back(r == 0 ? std::sin(x) : r == 1 ? std::cos(x) : r == 2 ? -std::sin(x) : -std::cos(x));
  }
  return compose(a, d);
}

Jet cos(const Jet& a) {
  std::vector<double> d;
  const double x = a.value();
  for (int k = 0; k <= a.degree(); ++k) {
    const int r = k % 4;
    d.push_back(r == 0 ? std::cos(x) : r == 1 ? -std::sin(x) : r == 2 ? -std::cos(x) : std::sin(x));
  }
  return compose(a, d);
}

Jet exp(const Jet& a) {
  return compose(a, std::vector<double>(static_cast<std::size_t>(a.degree() + 1), std::exp(a.value())));
}

Jet log(const Jet& a) {
  const double x = a.value();
  if (x <= 0.0) throw std::domain_error("log of a non-positive jet");
  std::vector<double> d{std::log(x)};
  double f = 1.0;  // (k−1)!
  for (int k = 1; k <= a.degree(); ++k) {
    if (k > 1) f *= k - 1;
    d.push_back((k % 2 ? 1.0 : -1.0) * f / std::pow(x, k));
  }
  return compose(a, d);
}

Jet pow(const Jet& a, double s) {
  const double x = a.value();
  if (x == 0.0) throw std::domain_error("power of a jet with zero base value");
  if (x < 0.0 && s != std::round(s)) throw std::domain_error("fractional power of a negative jet");
  std::vector<double> d;
  double falling = 1.0;
  for (int k = 0; k <= a.degree(); ++k) {
    d.push_back(falling * std::pow(x, s - k));
    falling *= s - k;
  }
  return compose(a, d);
}

Jet sqrt(const Jet& a) { return pow(a, 0.5); }

Jet pow_int(const Jet& a, int n) {
  if (n < 0) return pow(a, static_cast<double>(n));
  Jet out(a.degree(), 1.0);
  for (int k = 0; k < n; ++k) out = out * a;
  return out;
}

}  // namespace mosva::geometry
