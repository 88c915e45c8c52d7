#include "hyperdirichlet/test_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperdirichlet {

namespace {

void check_support(double a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::invalid_argument("support bound a must be positive and finite");
}

}  // namespace

RadialFunction linear_ramp(double a) {
  check_support(a);
  return RadialFunction::smooth([a](const Jet& x) { return 1.0 - x / a; }, a);
}

RadialFunction bump(double a) {
  check_support(a);
  return RadialFunction::smooth(
      [a](const Jet& x) {
        const Jet u = x / a;
        return exp(1.0 - 1.0 / (1.0 - u * u));
      },
      a);
}

RadialFunction poly_vanish(double a) {
  check_support(a);
  return RadialFunction::smooth([a](const Jet& x) { return x * x * (a - x); }, a);
}

RadialFunction one_jump(double a) {
  check_support(a);
  auto base = [a](const Jet& x) {
    const Jet u = 1.0 - x / a;
    return u * u;
  };
  auto upper = [a, base](const Jet& x) {
    const Jet v = 2.0 * x / a - 1.0;
    return base(x) + 1.0 - v * v;
  };
  return RadialFunction({0.0, 0.5 * a, a}, {base, upper}, 16);
}

HalfLineFunction exp_decay() {
  return {[](double y) { return std::exp(-(y - 1.0)); },
          [](double Y) { return std::exp(-(Y - 1.0)); }};
}

HalfLineFunction exp_decay_vanishing() {
  // int_Y^inf (y-1) e^{-(y-1)} dy = Y e^{-(Y-1)}
  return {[](double y) { return (y - 1.0) * std::exp(-(y - 1.0)); },
          [](double Y) { return Y * std::exp(-(Y - 1.0)); }};
}

RadialFunction radial_by_name(const std::string& name, double a) {
  if (name == "linear-ramp") return linear_ramp(a);
  if (name == "bump") return bump(a);
  if (name == "poly-vanish") return poly_vanish(a);
  if (name == "one-jump") return one_jump(a);
  throw std::invalid_argument("unknown radial test function: " + name);
}

HalfLineFunction half_line_by_name(const std::string& name) {
  if (name == "exp-decay") return exp_decay();
  if (name == "exp-decay-vanishing") return exp_decay_vanishing();
  throw std::invalid_argument("unknown half-line test function: " + name);
}

std::vector<std::string> radial_names() {
  return {"linear-ramp", "bump", "poly-vanish", "one-jump"};
}

std::vector<std::string> half_line_names() {
  return {"exp-decay", "exp-decay-vanishing"};
}

}  // namespace hyperdirichlet
