#include "hyperdirichlet/spherical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hyperdirichlet/numerics.hpp"

namespace hyperdirichlet {

namespace {

constexpr double kPi = std::numbers::pi;

// Largest error estimate for which the hypergeometric value is kept.
constexpr double kPhiTolerance = 1e-12;

void check_chi(double chi) {
  if (!(chi >= 0.0)) throw std::domain_error("phi: chi must be >= 0");
}

}  // namespace

SpectralParams::SpectralParams(int d, double R) : d_(d), R_(R) {
  if (d < 1) throw std::invalid_argument("dimension d must be >= 1");
  if (!(R > 0.0) || !std::isfinite(R))
    throw std::invalid_argument("curvature radius R must be > 0");
}

PhiValue phi_detail(const SpectralParams& p, double lambda, double chi) {
  check_chi(chi);
  lambda = std::abs(lambda);
  if (chi == 0.0) return {1.0, 0.0, HypergeometricRoute::direct};
  if (p.d() == 1) return {std::cos(lambda * chi), 0.0, HypergeometricRoute::direct};
  const double sh = std::sinh(chi);
  try {
    JacobiValue v = jacobi_hypergeometric(p.a(), p.b(), lambda, sh * sh);
    if (v.error_estimate <= kPhiTolerance)
      return {v.value, v.error_estimate, v.route};
  } catch (const std::runtime_error&) {
  }
  return {phi_legendre(p, lambda, chi), kPhiTolerance,
          HypergeometricRoute::integral};
}

double phi(const SpectralParams& p, double lambda, double chi) {
  return phi_detail(p, lambda, chi).value;
}

double phi_legendre(const SpectralParams& p, double lambda, double chi) {
  if (!(chi > 0.0))
    throw std::domain_error("phi_legendre needs chi > 0 (use phi at the origin)");
  const double mu = p.rho() - 0.5;
  if (p.d() == 1) {
    // P^{1/2}_{-1/2+i lambda}(cosh chi) = sqrt(2/(pi sinh chi)) cos(lambda chi)
    const double legendre =
        std::sqrt(2.0 / (kPi * std::sinh(chi))) * std::cos(lambda * chi);
    return std::pow(2.0, mu) * std::tgamma(mu + 1.0) *
           std::pow(std::sinh(chi), -mu) * legendre;
  }
  const double legendre = conical_integral(mu, lambda, chi);
  return std::exp(mu * std::log(2.0) + std::lgamma(mu + 1.0) -
                  mu * std::log(std::sinh(chi))) *
         legendre;
}

double phi_angular_oracle(const SpectralParams& p, double lambda, double chi) {
  if (p.d() < 2) throw std::domain_error("angular oracle needs d >= 2");
  check_chi(chi);
  const double rho = p.rho();
  const double ch = std::cosh(chi), sh = std::sinh(chi);
  auto base = [&](double t) { return ch - std::cos(t) * sh; };
  auto weight = [&](double t) {
    return rho == 0.5 ? 1.0 : std::pow(std::sin(t), 2.0 * rho - 1.0);
  };
  QuadratureSpec spec;
  spec.abs_tol = 1e-13;
  spec.rel_tol = 1e-12;
  spec.max_subdivisions = 20000;
  const double re = integrate(
      [&](double t) {
        const double q = base(t);
        return std::pow(q, -rho) * std::cos(lambda * std::log(q)) * weight(t);
      },
      0.0, kPi, spec).value;
  const double im = integrate(
      [&](double t) {
        const double q = base(t);
        return std::pow(q, -rho) * std::sin(lambda * std::log(q)) * weight(t);
      },
      0.0, kPi, spec).value;
  const double beta =
      std::exp(std::lgamma(rho) + std::lgamma(0.5) - std::lgamma(rho + 0.5));
  if (std::abs(im / beta) >= 1e-10)
    throw std::logic_error("angular oracle: imaginary part does not vanish");
  return re / beta;
}

double jacobi_phi(double a, double b, double lambda, double chi) {
  check_chi(chi);
  const double sh = std::sinh(chi);
  return jacobi_hypergeometric(a, b, lambda, sh * sh).value;
}

double phi_derivative(const SpectralParams& p, double lambda, double chi) {
  const double a = p.a(), b = p.b();
  if (a <= 0.0)
    throw std::domain_error("phi_derivative needs a > 0 (d >= 3)");
  const double bracket = ((a + b) * (a + b) + lambda * lambda) / (4.0 * a);
  return bracket * jacobi_phi(a, b + 1.0, lambda, chi);
}

double phi_derivative_euler(const SpectralParams& p, double lambda, double chi) {
  const double a = p.a(), b = p.b();
  if (a <= 0.0)
    throw std::domain_error("phi_derivative needs a > 0 (d >= 3)");
  check_chi(chi);
  const double sh = std::sinh(chi);
  const double z = -sh * sh;
  const double bracket = ((a + b) * (a + b) + lambda * lambda) / (4.0 * a);
  const Complex f = gauss_2f1({Complex(0.5 * (a - b), 0.5 * lambda),
                               Complex(0.5 * (a - b), -0.5 * lambda), a + 1.0, z});
  return bracket * std::pow(1.0 - z, -(b + 1.0)) * f.real();
}

double eigen_residual(const SpectralParams& p, double lambda, double chi,
                      double h) {
  if (!(h > 0.0) || !(chi > 0.0))
    throw std::domain_error("eigen_residual needs chi > 0 and h > 0");
  auto f = [&](double x) { return phi(p, lambda, std::abs(x)); };
  const double fm2 = f(chi - 2 * h), fm1 = f(chi - h), f0 = f(chi),
               fp1 = f(chi + h), fp2 = f(chi + 2 * h);
  const double d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h);
  const double d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h);
  const double R2 = p.R() * p.R();
  const double laplace = (d2 + (p.d() - 1) / std::tanh(chi) * d1) / R2;
  const double eigen = (lambda * lambda + p.rho() * p.rho()) / R2;
  return std::abs(laplace + eigen * f0);
}

std::vector<double> euclidean_limit_error(const SpectralParams& p,
                                          double p_norm, double r,
                                          std::span<const double> R_values) {
  std::vector<double> errors;
  for (double R : R_values) {
    if (r == 0.0) {
      errors.push_back(0.0);
      continue;
    }
    const double hyperbolic = phi(p.with_R(R), p_norm * R, r / R);
    errors.push_back(std::abs(hyperbolic - spherical_bessel(p.a(), p_norm * r)));
  }
  return errors;
}

}  // namespace hyperdirichlet
