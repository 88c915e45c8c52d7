#include <doctest.h>

#include <cmath>

#include "hyperdirichlet/jet.hpp"
#include "hyperdirichlet/numerics.hpp"

using namespace hyperdirichlet;

namespace {

// central difference of order 1 on a double function
double fd(const std::function<double(double)>& f, double x, double h = 1e-5) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

}  // namespace

TEST_CASE("elementary functions differentiate correctly") {
  const double x = 0.7;
  struct Case {
    JetFunction jet;
    std::function<double(double)> value;
  };
  const Case cases[] = {
      {[](const Jet& t) { return exp(t); }, [](double t) { return std::exp(t); }},
      {[](const Jet& t) { return log(t); }, [](double t) { return std::log(t); }},
      {[](const Jet& t) { return sinh(t) * cos(t); },
       [](double t) { return std::sinh(t) * std::cos(t); }},
      {[](const Jet& t) { return sqrt(t) / (1.0 + t); },
       [](double t) { return std::sqrt(t) / (1.0 + t); }},
      {[](const Jet& t) { return pow(t, 2.5); }, [](double t) { return std::pow(t, 2.5); }},
      {[](const Jet& t) { return acosh(1.0 + t); },
       [](double t) { return std::acosh(1.0 + t); }},
  };
  for (const Case& c : cases) {
    const auto d = derivatives_taylor(c.jet, x, 2);
    CHECK(d[0] == doctest::Approx(c.value(x)).epsilon(1e-15));
    CHECK(d[1] == doctest::Approx(fd(c.value, x)).epsilon(1e-8));
    const double second = fd([&](double t) { return fd(c.value, t, 1e-4); }, x, 1e-4);
    CHECK(d[2] == doctest::Approx(second).epsilon(1e-5));
  }
}

TEST_CASE("sincos and sinhcosh agree with their separate forms") {
  const Jet t = Jet::variable(0.3, 8);
  Jet s, c, sh, ch;
  sincos(t, s, c);
  sinhcosh(t, sh, ch);
  for (int i = 0; i <= 8; ++i) {
    CHECK(s[i] == doctest::Approx(sin(t)[i]));
    CHECK(c[i] == doctest::Approx(cos(t)[i]));
    CHECK(sh[i] == doctest::Approx(sinh(t)[i]));
    CHECK(ch[i] == doctest::Approx(cosh(t)[i]));
  }
}

TEST_CASE("removable singularities cancel and cost one order each") {
  const Jet t = Jet::variable(0.0, 6);
  const Jet q = sin(t) / t;
  CHECK(q.order() == 5);
  CHECK(q.derivative(0) == doctest::Approx(1.0));
  CHECK(q.derivative(2) == doctest::Approx(-1.0 / 3.0));
  CHECK(q.derivative(4) == doctest::Approx(1.0 / 5.0));
  CHECK_THROWS_AS(Jet(1.0, 3) / t, std::domain_error);
}

TEST_CASE("coefficients hold scaled derivatives") {
  const Jet t = Jet::variable(0.0, 5);
  const Jet e = exp(t);
  double fact = 1.0;
  for (int i = 0; i <= 5; ++i) {
    if (i) fact *= i;
    CHECK(e[i] == doctest::Approx(1.0 / fact));
    CHECK(e.derivative(i) == doctest::Approx(1.0));
  }
}
