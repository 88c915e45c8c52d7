#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperdirichlet/numerics.hpp"
#include "hyperdirichlet/specfun.hpp"

using namespace hyperdirichlet;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// P_{-1/2+i mu}(cosh chi) = (1/pi) int_0^pi (cosh chi - sinh chi cos t)^{-1/2+i mu} dt
double conical_theta_oracle(double mu, double y) {
  const double chi = std::acosh(y);
  QuadratureSpec spec;
  spec.abs_tol = 1e-12;
  spec.rel_tol = 1e-12;
  spec.max_subdivisions = 20000;
  return integrate(
             [&](double t) {
               const double base = std::cosh(chi) - std::sinh(chi) * std::cos(t);
               return std::pow(base, -0.5) * std::cos(mu * std::log(base));
             },
             0.0, kPi, spec)
             .value /
         kPi;
}

}  // namespace

TEST_CASE("log gamma at simple points") {
  CHECK(std::abs(complex_log_gamma(1.0)) < 1e-14);
  CHECK(complex_log_gamma(0.5).real() == doctest::Approx(std::log(std::sqrt(kPi))).epsilon(1e-14));
  const double g2 = std::exp(2 * complex_log_gamma(Complex(0, 1)).real());
  CHECK(g2 == doctest::Approx(kPi / std::sinh(kPi)).epsilon(1e-13));
  CHECK(g2 == doctest::Approx(0.2720290).epsilon(1e-6));
  for (double x : {0.3, 1.7, 4.2, 11.5, -2.5})
    CHECK(complex_gamma(x).real() == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
  CHECK_THROWS_AS(complex_log_gamma(-2.0), std::domain_error);
}

TEST_CASE("gamma modulus identities") {
  CHECK(gamma_modulus_sq(GammaShift::imaginary, 1.0) ==
        doctest::Approx(kPi / std::sinh(kPi)).epsilon(1e-13));
  CHECK(gamma_modulus_sq(GammaShift::half_shift, 1.0) ==
        doctest::Approx(kPi / std::cosh(kPi)).epsilon(1e-13));
  for (double l = 0.25; l < 10; l += 0.75)
    CHECK(gamma_modulus_sq(GammaShift::integer_shift, l, 1) ==
          doctest::Approx(gamma_modulus_sq(GammaShift::imaginary, l) * l * l).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_modulus_sq(GammaShift::imaginary, 0.0), std::domain_error);

  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> kd(0, 6);
  std::uniform_real_distribution<double> ld(0.1, 30.0);
  for (int i = 0; i < 200; ++i) {
    const int k = kd(rng);
    const double l = ld(rng);
    const bool half = i % 2;
    const double oracle =
        std::exp(2 * complex_log_gamma(Complex(k + (half ? 0.5 : 0.0), l)).real());
    const GammaShift kind = half ? GammaShift::half_integer_shift : GammaShift::integer_shift;
    CHECK(rel(gamma_modulus_sq(kind, l, k), oracle) < 1e-10);
  }
}

TEST_CASE("Gauss hypergeometric values") {
  CHECK(std::abs(gauss_2f1({Complex(0.3, 1), Complex(0.3, -1), 1.5, 0.0}) - 1.0) < 1e-15);
  CHECK(std::abs(gauss_2f1({1.0, 2.0, 2.0, 0.5}) - 2.0) < 1e-13);
  // d = 3 spherical function at lambda = 1, chi = 1
  const Complex v = gauss_2f1(
      {Complex(0.5, 0.5), Complex(0.5, -0.5), 1.5, -std::sinh(1.0) * std::sinh(1.0)});
  CHECK(v.real() == doctest::Approx(std::sin(1.0) / std::sinh(1.0)).epsilon(1e-12));
  CHECK(std::abs(v.imag()) < 1e-12);
  CHECK_THROWS_AS(gauss_2f1({1.0, 1.0, -2.0, 0.3}), std::domain_error);
}

TEST_CASE("Pfaff transformation agrees with the direct series") {
  const Complex a(0.7, 1.3), b(0.7, -1.3), c(2.2, 0.0);
  for (double z = -0.5; z <= 0.5; z += 0.125) {
    const Complex direct = gauss_2f1({a, b, c, z});
    const Complex pfaff = std::pow(1.0 - z, -a) * gauss_2f1({a, c - b, c, z / (z - 1.0)});
    CHECK(std::abs(direct - pfaff) < 1e-9);
  }
}

TEST_CASE("conical function") {
  for (double mu : {0.0, 0.5, 3.0}) CHECK(conical_p0(mu, 1.0) == 1.0);
  CHECK(conical_p0(0.0, 3.0) == doctest::Approx(conical_theta_oracle(0.0, 3.0)).epsilon(1e-11));
  for (double mu : {0.7, 2.5, 9.0})
    for (double y : {1.2, 4.0, 30.0}) {
      CHECK(std::abs(conical_p0(mu, y) - conical_theta_oracle(mu, y)) < 1e-10);
      CHECK(std::abs(conical_p0(mu, y) - conical_p0(-mu, y)) < 1e-12);
    }
  CHECK_THROWS_AS(conical_p0(1.0, 0.5), std::domain_error);
}

TEST_CASE("Bessel J") {
  CHECK(bessel_j(0.0, 0.0) == 1.0);
  CHECK(bessel_j(0.5, 1.0) ==
        doctest::Approx(std::sqrt(2 / kPi) * std::sin(1.0)).epsilon(1e-13));
  CHECK(std::abs(bessel_j(0.0, 2.404825557695773)) < 1e-9);
  // every regime against the standard library
  for (double nu : {0.0, 0.5, 1.0, 2.5, 4.0})
    for (double x : {0.1, 3.0, 11.0, 15.0, 20.0, 27.0, 60.0})
      CHECK(std::abs(bessel_j(nu, x) - std::cyl_bessel_j(nu, x)) < 1e-11);
}

TEST_CASE("normalized spherical Bessel function") {
  for (double a : {0.0, 0.5, 1.0, 1.5}) CHECK(spherical_bessel(a, 0.0) == 1.0);
  CHECK(std::abs(spherical_bessel(0.5, kPi)) < 1e-10);
  CHECK(spherical_bessel(0.5, 2.0) == doctest::Approx(std::sin(2.0) / 2.0).epsilon(1e-13));
  CHECK(spherical_bessel(0.0, 1.0) == doctest::Approx(bessel_j(0.0, 1.0)).epsilon(1e-10));
  CHECK(spherical_bessel(-0.5, 1.3) == doctest::Approx(std::cos(1.3)).epsilon(1e-14));
}

TEST_CASE("spherical Bessel function solves its radial equation") {
  // u'' + (2a+1)/x u' + u = 0
  const double h = 1e-3;
  for (double a : {0.0, 0.5, 1.0, 1.5})
    for (double x = 0.5; x <= 10.0; x += 0.5) {
      auto u = [&](double t) { return spherical_bessel(a, t); };
      const double d1 = (-u(x + 2 * h) + 8 * u(x + h) - 8 * u(x - h) + u(x - 2 * h)) / (12 * h);
      const double d2 = (-u(x + 2 * h) + 16 * u(x + h) - 30 * u(x) + 16 * u(x - h) -
                         u(x - 2 * h)) / (12 * h * h);
      CHECK(std::abs(d2 + (2 * a + 1) / x * d1 + u(x)) < 1e-6);
    }
}
