#include "hyperdirichlet/cfunction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperdirichlet {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLn2 = std::log(2.0);

// lambda tanh(pi lambda), even and smooth through 0.
double lambda_tanh(double lambda) { return lambda * std::tanh(kPi * lambda); }

// The finite product of the closed form (not including lambda tanh).
double closed_product(const SpectralParams& p, double lambda) {
  const double l2 = lambda * lambda;
  const int k = p.k();
  double prod = 1.0;
  if (p.odd()) {
    for (int l = 0; l < k; ++l) prod *= l * l + l2;
  } else {
    for (int l = 0; l + 1 < k; ++l) prod *= (l + 0.5) * (l + 0.5) + l2;
  }
  return prod;
}

// log of the numerator constant 4^{...} Gamma^2(...) / pi.
double log_closed_constant(const SpectralParams& p) {
  const int k = p.k();
  if (p.odd())
    return (2 * k - 1) * 2 * kLn2 + 2 * std::lgamma(k + 0.5) - std::log(kPi);
  return 2 * (k - 1) * 2 * kLn2 + 2 * std::lgamma(k) - std::log(kPi);
}

}  // namespace

double c_modulus_sq_gamma(const SpectralParams& p, double lambda) {
  if (lambda == 0.0)
    throw std::domain_error("|c(lambda)|^2 has a pole at lambda = 0");
  const double rho = p.rho();
  const double log_c2 = (4 * rho - 2) * kLn2 +
                        2 * complex_log_gamma(Complex(0, lambda)).real() +
                        2 * std::lgamma(rho + 0.5) - std::log(kPi) -
                        2 * complex_log_gamma(Complex(rho, lambda)).real();
  return std::exp(log_c2);
}

double c_modulus_sq_closed(const SpectralParams& p, double lambda) {
  double denom = closed_product(p, lambda);
  if (!p.odd()) denom *= lambda_tanh(lambda);
  if (denom == 0.0)
    throw std::domain_error("|c(lambda)|^2 has a pole at lambda = 0");
  return std::exp(log_closed_constant(p)) / denom;
}

double inverse_c_modulus_sq(const SpectralParams& p, double lambda) {
  double num = closed_product(p, lambda);
  if (!p.odd()) num *= lambda_tanh(lambda);
  return num * std::exp(-log_closed_constant(p));
}

double plancherel_density(const SpectralParams& p, double lambda) {
  const double pref = std::exp(2 * p.rho() * kLn2 - std::log(2 * kPi) -
                               p.d() * std::log(p.R()));
  return pref * inverse_c_modulus_sq(p, lambda);
}

double inverse_c_asymptotic_constant(const SpectralParams& p) {
  const double rho = p.rho();
  return kPi * std::exp(-2 * (2 * rho - 1) * kLn2 - 2 * std::lgamma(rho + 0.5));
}

double PlancherelPoly::evaluate(double lambda) const {
  const double l2 = lambda * lambda;
  if (parity == Parity::odd) {
    double sum = 0.0, power = 1.0;
    for (double beta : coefficients) {
      power *= l2;
      sum += beta * power;
    }
    return std::tgamma(k) * std::tgamma(k) * sum;
  }
  double sum = 1.0, power = 1.0;
  for (std::size_t j = 1; j < coefficients.size(); ++j) {
    power *= 4.0 * l2;
    sum += coefficients[j] * power;
  }
  return coefficients[0] * sum;
}

PlancherelPoly poly_coefficients(int k, Parity parity) {
  if (parity == Parity::odd ? k < 1 : k < 2)
    throw std::invalid_argument("poly_coefficients: k out of range");
  // Coefficients in x = lambda^2 of prod (s_l + x).
  std::vector<double> c{1.0};
  const int factors = parity == Parity::odd ? k : k - 1;
  for (int l = 0; l < factors; ++l) {
    const double s = parity == Parity::odd ? double(l) * l : (l + 0.5) * (l + 0.5);
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += s * c[i];
      next[i + 1] += c[i];
    }
    c = std::move(next);
  }
  PlancherelPoly poly;
  poly.parity = parity;
  poly.k = k;
  if (parity == Parity::odd) {
    // c[0] = 0 from the l = 0 factor.
    const double g2 = std::tgamma(k) * std::tgamma(k);
    for (int j = 1; j <= k; ++j) poly.coefficients.push_back(c[j] / g2);
    const double top = poly.coefficients.back();
    if (std::abs(top * g2 - 1.0) > 1e-12)
      throw std::logic_error("leading Plancherel coefficient is not 1/Gamma^2(k)");
  } else {
    const double alpha0 = c[0];
    poly.coefficients.push_back(alpha0);
    for (int j = 1; j < k; ++j)
      poly.coefficients.push_back(c[j] / (alpha0 * std::pow(4.0, j)));
  }
  return poly;
}

double density_euclid_constant(const SpectralParams& p) {
  const double rho = p.rho();
  return 4 * kPi * std::exp(-4 * rho * kLn2 - 2 * std::lgamma(rho + 0.5));
}

std::vector<double> density_euclid_limit(const SpectralParams& p, double p_norm,
                                         std::span<const double> R_values) {
  std::vector<double> out;
  for (double R : R_values)
    out.push_back(std::pow(R, 1 - p.d()) * inverse_c_modulus_sq(p, R * p_norm));
  return out;
}

}  // namespace hyperdirichlet
