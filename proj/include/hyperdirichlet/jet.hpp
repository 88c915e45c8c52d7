#pragma once

#include <array>
#include <functional>

namespace hyperdirichlet {

/// Truncated Taylor polynomial (a "jet") in one variable.
///
/// Coefficient i holds f^{(i)}(x0) / i!. Arithmetic propagates the
/// coefficients exactly up to the jet's order, so derivatives of composed
/// elementary functions come out to machine precision without any
/// finite-difference truncation error.
class Jet {
 public:
  static constexpr int kMaxOrder = 16;

  Jet() = default;
  Jet(double constant, int order);

  /// The independent variable t expanded around x: x + 1*t.
  static Jet variable(double x, int order);

  int order() const { return order_; }
  double value() const { return c_[0]; }
  double operator[](int i) const { return c_[i]; }
  double& operator[](int i) { return c_[i]; }

  /// i-th derivative, i.e. i! times the i-th coefficient.
  double derivative(int i) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet& operator+=(double s);
  Jet& operator-=(double s);
  Jet& operator*=(double s);
  Jet& operator/=(double s);

  Jet operator-() const;

 private:
  std::array<double, kMaxOrder + 1> c_{};
  int order_ = 0;

  friend Jet operator*(const Jet&, const Jet&);
  friend Jet operator/(const Jet&, const Jet&);
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
// Leading zeros shared by numerator and denominator are cancelled (removable
// singularities such as sin(t)/t at t = 0); each cancelled zero costs one
// order of the result.
Jet operator/(const Jet& a, const Jet& b);
Jet operator+(Jet a, double s);
Jet operator+(double s, Jet a);
Jet operator-(Jet a, double s);
Jet operator-(double s, const Jet& a);
Jet operator*(Jet a, double s);
Jet operator*(double s, Jet a);
Jet operator/(Jet a, double s);
Jet operator/(double s, const Jet& a);

Jet exp(const Jet& u);
Jet log(const Jet& u);
Jet sin(const Jet& u);
Jet cos(const Jet& u);
Jet sinh(const Jet& u);
Jet cosh(const Jet& u);
Jet sqrt(const Jet& u);
Jet pow(const Jet& u, double p);
Jet acosh(const Jet& u);
void sincos(const Jet& u, Jet& s, Jet& c);
void sinhcosh(const Jet& u, Jet& s, Jet& c);

using JetFunction = std::function<Jet(const Jet&)>;

}  // namespace hyperdirichlet
