#pragma once

#include <span>
#include <vector>

#include "hyperdirichlet/spherical.hpp"

namespace hyperdirichlet {

/// |c(lambda, rho)|^2 from
///   c = 2^{2 rho - 1} Gamma(i lambda) Gamma(rho + 1/2) / (sqrt(pi) Gamma(rho + i lambda))
/// through complex_log_gamma. lambda = 0 throws std::domain_error.
double c_modulus_sq_gamma(const SpectralParams& p, double lambda);

/// |c(lambda, rho)|^2 from the sinh / tanh product formulas:
///   d = 2k+1:  4^{2k-1} Gamma^2(k+1/2) / (pi prod_{l<k} (l^2 + lambda^2))
///   d = 2k:    4^{2(k-1)} Gamma^2(k) / (pi lambda tanh(pi lambda)
///                                       prod_{l<k-1} ((l+1/2)^2 + lambda^2))
/// A zero denominator (lambda = 0, d >= 2) throws std::domain_error.
double c_modulus_sq_closed(const SpectralParams& p, double lambda);

/// |c(lambda, rho)|^{-2} by the same product formulas; finite everywhere.
double inverse_c_modulus_sq(const SpectralParams& p, double lambda);

/// Plancherel density 2^{2 rho} / (2 pi R^d) |c(lambda, rho)|^{-2}.
double plancherel_density(const SpectralParams& p, double lambda);

/// Large-lambda constant: |c|^{-2} lambda^{-2 rho} -> pi / (2^{2(2 rho - 1)} Gamma^2(rho + 1/2)).
double inverse_c_asymptotic_constant(const SpectralParams& p);

enum class Parity { odd, even };

/// Coefficients of the Plancherel products as polynomials in lambda.
///   odd(k):  prod_{l=0}^{k-1} (l^2 + lambda^2) = Gamma^2(k) sum_{j=1}^{k} beta_j lambda^{2j}
///            coefficients = {beta_1, ..., beta_k}
///   even(k): prod_{l=0}^{k-2} ((l+1/2)^2 + lambda^2)
///              = alpha_0 (1 + sum_{j=1}^{k-1} beta_j (2 lambda)^{2j})
///            coefficients = {alpha_0, beta_1, ..., beta_{k-1}}
struct PlancherelPoly {
  Parity parity = Parity::odd;
  int k = 1;
  std::vector<double> coefficients;

  /// Value of the product at lambda, from the coefficients.
  double evaluate(double lambda) const;
};

/// Expands the product by convolving its quadratic factors. odd needs k >= 1,
/// even needs k >= 2.
PlancherelPoly poly_coefficients(int k, Parity parity);

/// 4 pi / (2^{4 rho} Gamma^2(rho + 1/2)): the Euclidean density constant.
double density_euclid_constant(const SpectralParams& p);

/// R^{-d} |c(R p_norm, rho)|^{-2} R for each R (d lambda = R d|p|).
std::vector<double> density_euclid_limit(const SpectralParams& p, double p_norm,
                                         std::span<const double> R_values);

}  // namespace hyperdirichlet
