#include "hyperdirichlet/jet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hyperdirichlet {

namespace {

void check_order(int order) {
  if (order < 0 || order > Jet::kMaxOrder)
    throw std::out_of_range("jet order " + std::to_string(order) +
                            " exceeds supported depth " +
                            std::to_string(Jet::kMaxOrder));
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Jet::Jet(double constant, int order) : order_(order) {
  check_order(order);
  c_[0] = constant;
}

Jet Jet::variable(double x, int order) {
  Jet j(x, order);
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

double Jet::derivative(int i) const {
  if (i > order_) throw std::out_of_range("derivative beyond jet order");
  return c_[i] * factorial(i);
}

Jet& Jet::operator+=(const Jet& o) {
  order_ = std::min(order_, o.order_);
  for (int i = 0; i <= order_; ++i) c_[i] += o.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  order_ = std::min(order_, o.order_);
  for (int i = 0; i <= order_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }
Jet& Jet::operator/=(const Jet& o) { return *this = *this / o; }

Jet& Jet::operator+=(double s) {
  c_[0] += s;
  return *this;
}

Jet& Jet::operator-=(double s) {
  c_[0] -= s;
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (int i = 0; i <= order_; ++i) c_[i] *= s;
  return *this;
}

Jet& Jet::operator/=(double s) {
  for (int i = 0; i <= order_; ++i) c_[i] /= s;
  return *this;
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (int i = 0; i <= order_; ++i) r.c_[i] = -r.c_[i];
  return r;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }

Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  r.order_ = std::min(a.order_, b.order_);
  for (int k = 0; k <= r.order_; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
    r.c_[k] = s;
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  int n = std::min(a.order_, b.order_);
  int shift = 0;
  while (shift <= n && b.c_[shift] == 0.0) ++shift;
  if (shift > n) throw std::domain_error("jet division by zero");
  if (shift > 0) {
    double scale = 0.0;
    for (int i = 0; i <= n; ++i) scale = std::max(scale, std::abs(a.c_[i]));
    for (int i = 0; i < shift; ++i)
      if (std::abs(a.c_[i]) > 64 * std::numeric_limits<double>::epsilon() * scale)
        throw std::domain_error("jet division: pole (numerator does not vanish)");
  }
  Jet r;
  r.order_ = n - shift;
  for (int k = 0; k <= r.order_; ++k) {
    double s = a.c_[k + shift];
    for (int j = 1; j <= k; ++j) s -= b.c_[j + shift] * r.c_[k - j];
    r.c_[k] = s / b.c_[shift];
  }
  return r;
}

Jet operator+(Jet a, double s) { return a += s; }
Jet operator+(double s, Jet a) { return a += s; }
Jet operator-(Jet a, double s) { return a -= s; }
Jet operator-(double s, const Jet& a) { return (-a) += s; }
Jet operator*(Jet a, double s) { return a *= s; }
Jet operator*(double s, Jet a) { return a *= s; }
Jet operator/(Jet a, double s) { return a /= s; }
Jet operator/(double s, const Jet& a) { return Jet(s, a.order()) / a; }

Jet exp(const Jet& u) {
  Jet e(std::exp(u[0]), u.order());
  for (int k = 1; k <= u.order(); ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * u[j] * e[k - j];
    e[k] = s / k;
  }
  return e;
}

Jet log(const Jet& u) {
  if (u[0] <= 0.0) throw std::domain_error("jet log of non-positive value");
  Jet w(std::log(u[0]), u.order());
  for (int k = 1; k <= u.order(); ++k) {
    double s = u[k];
    for (int j = 1; j < k; ++j) s -= j * w[j] * u[k - j] / k;
    w[k] = s / u[0];
  }
  return w;
}

void sincos(const Jet& u, Jet& s, Jet& c) {
  s = Jet(std::sin(u[0]), u.order());
  c = Jet(std::cos(u[0]), u.order());
  for (int k = 1; k <= u.order(); ++k) {
    double ss = 0.0, cc = 0.0;
    for (int j = 1; j <= k; ++j) {
      ss += j * u[j] * c[k - j];
      cc -= j * u[j] * s[k - j];
    }
    s[k] = ss / k;
    c[k] = cc / k;
  }
}

void sinhcosh(const Jet& u, Jet& s, Jet& c) {
  s = Jet(std::sinh(u[0]), u.order());
  c = Jet(std::cosh(u[0]), u.order());
  for (int k = 1; k <= u.order(); ++k) {
    double ss = 0.0, cc = 0.0;
    for (int j = 1; j <= k; ++j) {
      ss += j * u[j] * c[k - j];
      cc += j * u[j] * s[k - j];
    }
    s[k] = ss / k;
    c[k] = cc / k;
  }
}

Jet sin(const Jet& u) {
  Jet s, c;
  sincos(u, s, c);
  return s;
}

Jet cos(const Jet& u) {
  Jet s, c;
  sincos(u, s, c);
  return c;
}

Jet sinh(const Jet& u) {
  Jet s, c;
  sinhcosh(u, s, c);
  return s;
}

Jet cosh(const Jet& u) {
  Jet s, c;
  sinhcosh(u, s, c);
  return c;
}

Jet pow(const Jet& u, double p) {
  if (u[0] == 0.0) {
    if (p == std::floor(p) && p >= 0.0) {
      Jet r(1.0, u.order());
      for (int i = 0; i < static_cast<int>(p); ++i) r *= u;
      return r;
    }
    throw std::domain_error("jet pow at zero with non-integer exponent");
  }
  Jet w(std::pow(u[0], p), u.order());
  for (int k = 1; k <= u.order(); ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += (p * j - (k - j)) * u[j] * w[k - j];
    w[k] = s / (k * u[0]);
  }
  return w;
}

Jet sqrt(const Jet& u) { return pow(u, 0.5); }

Jet acosh(const Jet& u) {
  if (u[0] <= 1.0) throw std::domain_error("jet acosh needs argument > 1");
  // w' = u' / sqrt(u^2 - 1)
  Jet q = sqrt(u * u - 1.0);
  Jet du(0.0, std::max(u.order() - 1, 0));
  for (int j = 0; j < u.order(); ++j) du[j] = (j + 1) * u[j + 1];
  Jet ratio = du / q;
  Jet w(std::acosh(u[0]), u.order());
  for (int k = 1; k <= u.order(); ++k) w[k] = ratio[k - 1] / k;
  return w;
}

}  // namespace hyperdirichlet
