#pragma once

#include <span>
#include <vector>

#include "hyperdirichlet/specfun.hpp"

namespace hyperdirichlet {

/// Dimension d and curvature radius R of H^d with the derived exponents
///   rho = (d-1)/2,  a = rho - 1/2,  b = -1/2.
class SpectralParams {
 public:
  /// Throws std::invalid_argument unless d >= 1 and R > 0.
  explicit SpectralParams(int d, double R = 1.0);

  int d() const { return d_; }
  double R() const { return R_; }
  double rho() const { return 0.5 * (d_ - 1); }
  double a() const { return rho() - 0.5; }
  double b() const { return -0.5; }
  bool odd() const { return d_ % 2 == 1; }
  /// k with d = 2k+1 (odd) or d = 2k (even).
  int k() const { return d_ / 2; }

  SpectralParams with_R(double R) const { return SpectralParams(d_, R); }

 private:
  int d_;
  double R_;
};

struct PhiValue {
  double value = 0.0;
  double error_estimate = 0.0;
  HypergeometricRoute route = HypergeometricRoute::direct;
};

/// Zonal spherical function Phi_lambda(chi). Phi(0) = 1 exactly, d = 1 gives
/// cos(lambda chi). Otherwise the hypergeometric form is used when one of its
/// routes is well conditioned, else the Legendre integral. Negative lambda is
/// folded by evenness; negative chi throws std::domain_error.
double phi(const SpectralParams& p, double lambda, double chi);

/// phi() together with the route taken and its error estimate.
PhiValue phi_detail(const SpectralParams& p, double lambda, double chi);

/// Phi through the associated Legendre function:
///   2^{rho-1/2} Gamma(rho+1/2) sinh^{-(rho-1/2)}(chi) P^{-(rho-1/2)}_{-1/2+i lambda}(cosh chi),
/// with P from its Mehler-type integral. chi > 0.
double phi_legendre(const SpectralParams& p, double lambda, double chi);

/// Brute-force theta quadrature of the spherical mean of a plane wave,
///   (1/B(rho,1/2)) int_0^pi (cosh chi - cos t sinh chi)^{-(rho - i lambda)}
///                   sin^{2 rho - 1} t dt.
/// d >= 2. Throws std::logic_error if the imaginary part exceeds 1e-10.
double phi_angular_oracle(const SpectralParams& p, double lambda, double chi);

/// Jacobi function Phi^{(a,b)}_lambda at z = -sinh^2(chi), hypergeometric
/// routes only.
double jacobi_phi(double a, double b, double lambda, double chi);

/// d/dz Phi^{(a-1,b)}_lambda(z) at z = -sinh^2(chi), with (a, b) taken from
/// params, via  ((a+b)^2 + lambda^2) / (4a) * Phi^{(a,b+1)}_lambda(z).
/// Throws std::domain_error when a = 0 (d = 2); d = 1 is rejected as well.
double phi_derivative(const SpectralParams& p, double lambda, double chi);

/// Same derivative from the Euler-transformed form
///   ((a+b)^2 + lambda^2)/(4a) (1-z)^{-(b+1)} 2F1((a-b+i lambda)/2, (a-b-i lambda)/2; a+1; z).
double phi_derivative_euler(const SpectralParams& p, double lambda, double chi);

/// |L Phi + (lambda^2 + rho^2)/R^2 Phi| with the radial Laplacian
/// (1/R^2)(d^2/dchi^2 + (d-1) coth(chi) d/dchi) discretized by 5-point
/// central differences of step h. Phi is extended evenly to chi < 0.
double eigen_residual(const SpectralParams& p, double lambda, double chi,
                      double h);

/// |phi(lambda = p_norm R, chi = r / R) - J_a(p_norm r)| for each R.
std::vector<double> euclidean_limit_error(const SpectralParams& p,
                                          double p_norm, double r,
                                          std::span<const double> R_values);

}  // namespace hyperdirichlet
