#pragma once

#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperdirichlet/jet.hpp"

namespace hyperdirichlet {

using RealFunction = std::function<double(double)>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Tolerances and subdivision policy shared by every integral in the library.
struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  /// Split at the zeros of the oscillator (or, on infinite ranges, at the
  /// sign changes of the integrand) before adaptive refinement.
  bool osc_split = false;

  void validate() const;
  double target(double value) const;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions_used = 0;
};

/// Thrown when an integral does not reach its tolerance. Carries the best
/// estimate obtained so far.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, IntegralResult best)
      : std::runtime_error(what), best_(best) {}
  const IntegralResult& best() const { return best_; }

 private:
  IntegralResult best_;
};

/// Adaptive Gauss-Kronrod (7/15) integration with global bisection.
///
/// `hi` may be kInfinity. Absolutely integrable tails are mapped onto (0, 1];
/// with spec.osc_split the range is cut at the integrand's sign changes and
/// the resulting alternating panel sums are accelerated with Wynn's epsilon
/// algorithm, which is what conditionally convergent integrals such as
/// sin(u)/u need.
IntegralResult integrate(const RealFunction& f, double lo, double hi,
                         const QuadratureSpec& spec = {});

/// Same contract as integrate() on a finite range that is pre-split at the
/// given (sorted) breakpoints. The first and last breakpoint are the limits.
/// Only bisections count towards max_subdivisions, not the initial panels.
IntegralResult integrate_panels(const RealFunction& f,
                                std::span<const double> breakpoints,
                                const QuadratureSpec& spec = {});

/// lo, hi and every zero of sin(frequency * u + phase) strictly in between.
std::vector<double> oscillation_breakpoints(double lo, double hi,
                                            double frequency, double phase);

/// Integral of envelope(u) * sin(frequency * u + phase) over [lo, hi].
IntegralResult integrate_oscillatory(const RealFunction& envelope,
                                     double frequency, double phase, double lo,
                                     double hi, const QuadratureSpec& spec = {});

/// Integral over [lo, infinity) of an integrand whose absolute tail is
/// bounded by tail_bound(Y) >= int_Y^inf |f|. The range is truncated at the
/// first Y (found by doubling the distance from lo) with
/// tail_bound(Y) < abs_tol / 10; optional `splits` gives the spacing of
/// oscillation breakpoints used on the truncated range (0 = none).
IntegralResult integrate_with_tail(const RealFunction& f, double lo,
                                   const RealFunction& tail_bound,
                                   const QuadratureSpec& spec = {},
                                   double splits = 0.0);

/// Truncation point used by integrate_with_tail.
double tail_truncation_point(double lo, const RealFunction& tail_bound,
                             double abs_tol);

/// f(x), f'(x), ..., f^{(order)}(x) by truncated-Taylor arithmetic.
std::vector<double> derivatives_taylor(const JetFunction& f, double x,
                                       int order);

struct Extrapolation {
  double limit = 0.0;
  double residual = 0.0;
};

/// Limit of a sequence sampled at increasing parameters p, assuming the
/// error behaves like c / p. Least-squares fit of value = limit + c / p;
/// the residual is the root-mean-square misfit.
Extrapolation extrapolate_limit(
    std::span<const std::pair<double, double>> samples);

/// Fixed n-point Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

}  // namespace hyperdirichlet
