#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperdirichlet/cfunction.hpp"

using namespace hyperdirichlet;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// The nested-sum expansion of prod_{l<k} (l^2 + x) by enumeration of index
// subsets: coefficient of x^j is the elementary symmetric sum of order k - j
// of the shifts.
std::vector<double> elementary_symmetric(const std::vector<double>& s) {
  const std::size_t n = s.size();
  std::vector<double> e(n + 1, 0.0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    double prod = 1.0;
    int bits = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        prod *= s[i];
        ++bits;
      }
    e[bits] += prod;
  }
  return e;
}

}  // namespace

TEST_CASE("gamma form against closed form") {
  const double lambdas[] = {0.1, 0.5, 1, 2, 5, 10, 30};
  for (int d = 2; d <= 8; ++d)
    for (double l : lambdas) {
      const SpectralParams p(d);
      CHECK(rel(c_modulus_sq_gamma(p, l), c_modulus_sq_closed(p, l)) <= 1e-10);
      CHECK(c_modulus_sq_gamma(p, -l) == doctest::Approx(c_modulus_sq_gamma(p, l)).epsilon(1e-14));
      CHECK(c_modulus_sq_closed(p, -l) == c_modulus_sq_closed(p, l));
    }
}

TEST_CASE("c-function special values") {
  for (double l : {0.3, 1.0, 7.0})
    CHECK(c_modulus_sq_gamma(SpectralParams(1), l) == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(c_modulus_sq_gamma(SpectralParams(3), 2.0) == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(c_modulus_sq_closed(SpectralParams(3), 3.0) == doctest::Approx(1.0 / 9).epsilon(1e-14));
  CHECK(c_modulus_sq_closed(SpectralParams(5), 1.0) == doctest::Approx(18.0).epsilon(1e-14));
  CHECK(c_modulus_sq_gamma(SpectralParams(5), 1.0) == doctest::Approx(18.0).epsilon(1e-12));
  const double d2 = 1.0 / (kPi * std::tanh(kPi));
  CHECK(c_modulus_sq_gamma(SpectralParams(2), 1.0) == doctest::Approx(d2).epsilon(1e-13));
  CHECK(c_modulus_sq_closed(SpectralParams(2), 1.0) == doctest::Approx(d2).epsilon(1e-14));
  CHECK_THROWS_AS(c_modulus_sq_gamma(SpectralParams(3), 0.0), std::domain_error);
  CHECK_THROWS_AS(c_modulus_sq_closed(SpectralParams(2), 0.0), std::domain_error);
}

TEST_CASE("Plancherel density") {
  for (double R : {1.0, 2.5}) {
    CHECK(plancherel_density(SpectralParams(1, R), 3.0) == doctest::Approx(2 / (kPi * R)).epsilon(1e-14));
    CHECK(plancherel_density(SpectralParams(3, R), 2.0) ==
          doctest::Approx(8 / (kPi * R * R * R)).epsilon(1e-14));
  }
  CHECK(plancherel_density(SpectralParams(2), 0.0) == 0.0);
  CHECK(plancherel_density(SpectralParams(5), 0.0) == 0.0);
  CHECK(plancherel_density(SpectralParams(1), 0.0) > 0.0);
}

TEST_CASE("large-lambda density asymptotic") {
  for (int d = 2; d <= 8; ++d) {
    const SpectralParams p(d);
    const double l = 1e3;
    const double lhs = inverse_c_modulus_sq(p, l) * std::pow(l, -2 * p.rho());
    CHECK(rel(lhs, inverse_c_asymptotic_constant(p)) < 0.01);
    const double closed_constant =
        kPi / (std::pow(2.0, 2 * (2 * p.rho() - 1)) * std::pow(std::tgamma(p.rho() + 0.5), 2));
    CHECK(inverse_c_asymptotic_constant(p) == doctest::Approx(closed_constant).epsilon(1e-13));
  }
}

TEST_CASE("polynomial coefficients") {
  const auto o1 = poly_coefficients(1, Parity::odd);
  REQUIRE(o1.coefficients.size() == 1);
  CHECK(o1.coefficients[0] == 1.0);
  const auto o2 = poly_coefficients(2, Parity::odd);
  CHECK(o2.coefficients == std::vector<double>{1.0, 1.0});
  const auto e2 = poly_coefficients(2, Parity::even);
  CHECK(e2.coefficients[0] == doctest::Approx(0.25));
  CHECK(e2.coefficients[0] == doctest::Approx(std::pow(std::tgamma(1.5), 2) / kPi).epsilon(1e-14));
  CHECK(e2.coefficients[1] == doctest::Approx(1.0));
  for (int k = 1; k <= 6; ++k) {
    const auto p = poly_coefficients(k, Parity::odd);
    CHECK(p.coefficients.back() == doctest::Approx(1 / std::pow(std::tgamma(k), 2)).epsilon(1e-14));
    for (double c : p.coefficients) CHECK(c > 0.0);
  }
  for (int k = 2; k <= 6; ++k) {
    const auto p = poly_coefficients(k, Parity::even);
    CHECK(p.coefficients[0] ==
          doctest::Approx(std::pow(std::tgamma(k - 0.5), 2) / kPi).epsilon(1e-13));
    CHECK(p.coefficients.back() ==
          doctest::Approx(1 / (std::pow(4.0, k - 1) * p.coefficients[0])).epsilon(1e-13));
  }
  CHECK_THROWS_AS(poly_coefficients(1, Parity::even), std::invalid_argument);
}

TEST_CASE("polynomial round trip against the direct products") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.0, 12.0);
  for (int k = 1; k <= 5; ++k) {
    const auto odd = poly_coefficients(k, Parity::odd);
    const auto even = poly_coefficients(k + 1, Parity::even);
    for (int i = 0; i < 20; ++i) {
      const double l = u(rng);
      double po = 1.0, pe = 1.0;
      for (int j = 0; j < k; ++j) {
        po *= j * j + l * l;
        pe *= (j + 0.5) * (j + 0.5) + l * l;
      }
      CHECK(rel(odd.evaluate(l), po) < 1e-12);
      CHECK(rel(even.evaluate(l), pe) < 1e-12);
    }
  }
}

TEST_CASE("nested-sum coefficients by subset enumeration") {
  for (int k = 1; k <= 4; ++k) {
    std::vector<double> shifts;
    for (int l = 1; l < k; ++l) shifts.push_back(double(l) * l);
    // prod_{l=1}^{k-1} (l^2 + x) = sum_m e_{k-1-m} x^m; the l = 0 factor adds one power
    const auto e = elementary_symmetric(shifts);
    const auto p = poly_coefficients(k, Parity::odd);
    const double g2 = std::pow(std::tgamma(k), 2);
    for (int j = 1; j <= k; ++j)
      CHECK(p.coefficients[j - 1] * g2 == doctest::Approx(e[k - j]).epsilon(1e-14));
  }
}

TEST_CASE("Euclidean density limit") {
  CHECK(density_euclid_constant(SpectralParams(3)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(density_euclid_constant(SpectralParams(1)) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(density_euclid_constant(SpectralParams(5)) == doctest::Approx(1.0 / 36).epsilon(1e-14));

  const std::vector<double> Rs{1e3};
  CHECK(density_euclid_limit(SpectralParams(3), 1.0, Rs)[0] == doctest::Approx(1.0).epsilon(1e-12));
  const std::vector<double> R1{1, 10, 100};
  for (double v : density_euclid_limit(SpectralParams(1), 1.0, R1)) CHECK(v == doctest::Approx(4.0));

  for (int d : {4, 5, 6}) {
    const SpectralParams p(d);
    const std::vector<double> R{10, 20, 40, 80};
    const auto v = density_euclid_limit(p, 1.3, R);
    const double L = density_euclid_constant(p) * std::pow(1.3, d - 1);
    for (std::size_t i = 1; i + 1 < R.size(); ++i) {
      const double ratio = std::abs(v[i + 1] - L) / std::abs(v[i] - L);
      CHECK(ratio == doctest::Approx(0.25).epsilon(0.3));
    }
  }
}
