#pragma once

#include <vector>

namespace mosva::geometry {

/// Truncated bivariate Taylor polynomial Σ c_ij x^i y^j (i + j ≤ degree)
/// about a base point. Arithmetic propagates exact-to-rounding partial
/// derivatives, so nested derivatives never go through differencing.
class Jet {
 public:
  Jet() : Jet(0, 0.0) {}
  explicit Jet(int degree, double constant = 0.0);

  /// base + (x or y), i.e. a coordinate function expanded at `base`.
  static Jet variable(int degree, double base, int axis);

  int degree() const { return degree_; }
  double coeff(int i, int j) const;
  double& coeff(int i, int j);
  double value() const { return coeff(0, 0); }
  /// ∂^{i+j} / ∂x^i ∂y^j at the base point.
  double partial(int i, int j) const;

  /// ∂/∂x (axis 0) or ∂/∂y (axis 1); the result has degree − 1.
  Jet d(int axis) const;
  /// Copy truncated to a lower degree.
  Jet truncated(int degree) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator+=(double s);
  Jet& operator*=(double s);
  Jet operator-() const;

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator+(Jet a, double s) { return a += s; }
  friend Jet operator+(double s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, double s) { return a += -s; }
  friend Jet operator-(double s, const Jet& a) { return -a + s; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator/(Jet a, double s) { return a *= 1.0 / s; }
  friend Jet operator/(double s, const Jet& a);

 private:
  int index(int i, int j) const { return i * (degree_ + 1) + j; }

  int degree_;
  std::vector<double> c_;
};

/// g(a) for a scalar function g given by its derivatives g^{(k)}(a0), k ≤ degree.
Jet compose(const Jet& a, const std::vector<double>& derivatives);

Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet pow(const Jet& a, double s);
Jet sqrt(const Jet& a);
Jet pow_int(const Jet& a, int n);

}  // namespace mosva::geometry
