#include "hyperdirichlet/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hyperdirichlet/cfunction.hpp"
#include "hyperdirichlet/numerics.hpp"

namespace hyperdirichlet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxRecursionSteps = 6;

// Breakpoints 0, pi/chi, 2 pi/chi, ..., M for the lambda integrals.
std::vector<double> lambda_panels(double M, double chi) {
  std::vector<double> cuts{0.0};
  if (chi > 0.0) {
    const double step = kPi / chi;
    for (double x = step; x < M; x += step) cuts.push_back(x);
  }
  cuts.push_back(M);
  return cuts;
}

QuadratureSpec kernel_spec(double scale) {
  QuadratureSpec spec;
  spec.abs_tol = 1e-13 * std::max(1.0, scale);
  spec.rel_tol = 1e-12;
  spec.max_subdivisions = 20000;
  return spec;
}

// Coefficients in x = lambda^2 of the closed Plancherel product.
std::vector<double> product_in_lambda_sq(const SpectralParams& p) {
  std::vector<double> c{1.0};
  const int factors = p.odd() ? p.k() : p.k() - 1;
  for (int l = 0; l < factors; ++l) {
    const double s = p.odd() ? double(l) * l : (l + 0.5) * (l + 0.5);
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += s * c[i];
      next[i + 1] += c[i];
    }
    c = std::move(next);
  }
  return c;
}

// Odd d: Phi expanded in z = -sinh^2 chi, each coefficient a polynomial in
// lambda^2 integrated exactly against the polynomial density.
double odd_small_chi_series(const KernelParams& kp, double chi) {
  const SpectralParams& p = kp.spectral();
  const double M = kp.M(), M2 = M * M;
  const double rho = p.rho(), a = p.a();
  const double sh = std::sinh(chi);
  const double z = -sh * sh;
  std::vector<double> poly = product_in_lambda_sq(p);  // Q_n(x) * P(x)
  double product_at_1 = 0.0;
  for (double c : poly) product_at_1 += c;
  const double density_scale = plancherel_density(p, 1.0) / product_at_1;
  double sum = 0.0, zn = 1.0, denom = 1.0;
  for (int n = 0; n < 60; ++n) {
    double integral = 0.0, power = M;  // M^{2m+1}
    for (std::size_t m = 0; m < poly.size(); ++m) {
      integral += poly[m] * power / (2.0 * m + 1.0);
      power *= M2;
    }
    const double term = zn / denom * integral;
    sum += term;
    if (n > 2 && std::abs(term) <= 1e-17 * std::abs(sum)) break;
    // Q_{n+1} = Q_n * ((rho/2 + n)^2 + x/4)
    const double s = (0.5 * rho + n) * (0.5 * rho + n);
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += s * poly[i];
      next[i + 1] += 0.25 * poly[i];
    }
    poly = std::move(next);
    zn *= z;
    denom *= (a + 1.0 + n) * (n + 1.0);
  }
  return density_scale * sum;
}

bool use_small_chi_series(const KernelParams& kp, double chi) {
  return kp.spectral().odd() && chi < 0.5 && kp.M() * chi < 0.5;
}

// sinc(x) and its first two derivatives.
void sinc_derivatives(double x, double& s0, double& s1, double& s2) {
  if (std::abs(x) < 0.5) {
    s0 = s1 = s2 = 0.0;
    double x2 = x * x, fact = 1.0, pw = 1.0;  // pw = x^{2n}, fact = (2n+1)!
    for (int n = 0; n < 20; ++n) {
      if (n > 0) {
        fact *= (2.0 * n) * (2.0 * n + 1.0);
        pw *= x2;
      }
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      s0 += sign * pw / fact;
      if (n >= 1) {
        // d/dx x^{2n} = 2n x^{2n-1}, d2 = 2n (2n-1) x^{2n-2}
        s1 += sign * 2.0 * n * pw / x / fact;
        s2 += sign * 2.0 * n * (2.0 * n - 1.0) * (pw / x2) / fact;
      }
    }
    if (x == 0.0) s1 = 0.0;
    return;
  }
  const double s = std::sin(x), c = std::cos(x);
  s0 = s / x;
  s1 = (x * c - s) / (x * x);
  s2 = ((2.0 - x * x) * s - 2.0 * x * c) / (x * x * x);
}

}  // namespace

KernelParams::KernelParams(SpectralParams spectral, double M)
    : spectral_(spectral), M_(M) {
  if (!(M > 0.0) || !std::isfinite(M))
    throw std::invalid_argument("band limit M must be > 0 and finite");
}

double dirichlet_quadrature(const KernelParams& kp, double chi) {
  chi = std::abs(chi);
  const SpectralParams& p = kp.spectral();
  const std::vector<double> cuts = lambda_panels(kp.M(), chi);
  // |Phi| <= 1, so the density integral bounds the result.
  QuadratureSpec coarse;
  coarse.abs_tol = 1e-8;
  coarse.rel_tol = 1e-6;
  const double scale =
      integrate([&](double l) { return plancherel_density(p, l); }, 0.0, kp.M(),
                coarse)
          .value;
  return integrate_panels(
             [&](double l) { return phi(p, l, chi) * plancherel_density(p, l); },
             cuts, kernel_spec(scale))
      .value;
}

double dirichlet_closed(const KernelParams& kp, double chi) {
  chi = std::abs(chi);
  const int d = kp.d();
  if (d != 1 && d != 3 && d != 5)
    throw std::invalid_argument(
        "closed form exists for d = 1, 3, 5 only; use dirichlet_quadrature or "
        "dirichlet_recursion");
  const double M = kp.M(), R = kp.R();
  if (d == 1) return 2.0 * shannon_delta(M, chi) / R;
  if (use_small_chi_series(kp, chi)) return odd_small_chi_series(kp, chi);
  double s0, s1, s2;
  sinc_derivatives(M * chi, s0, s1, s2);
  const double d1 = M * M / kPi * s1;      // delta_M'
  const double d2 = M * M * M / kPi * s2;  // delta_M''
  const double sh = std::sinh(chi);
  if (d == 3) return -2.0 * d1 / (std::pow(R, 3) * sh);
  return 2.0 / (3.0 * std::pow(R, 5)) *
         (d2 / (sh * sh) - std::cosh(chi) * d1 / (sh * sh * sh));
}

double dirichlet_d2(const KernelParams& kp, double y) {
  if (!(y >= 1.0)) throw std::domain_error("dirichlet_d2 needs y >= 1");
  const double chi = std::acosh(y);
  const double M = kp.M(), R = kp.R();
  const double scale = 0.5 * M * M;
  return integrate_panels(
             [&](double l) {
               return conical_p0(l, y) * l * std::tanh(kPi * l);
             },
             lambda_panels(M, chi), kernel_spec(scale))
             .value /
         (R * R);
}

double dirichlet_recursion(const KernelParams& kp, double chi) {
  chi = std::abs(chi);
  const int d = kp.d();
  if (d < 3) throw std::invalid_argument("dirichlet_recursion needs d >= 3");
  if (!(chi > 0.0)) throw std::domain_error("dirichlet_recursion needs chi > 0");
  const int steps = (d - 1) / 2;  // odd: k; even: k - 1
  if (steps > kMaxRecursionSteps)
    throw std::out_of_range("dirichlet_recursion: jet depth exceeded (d <= 14)");
  const double R = kp.R(), M = kp.M();
  // prod over the steps of -1 / (2 a_j R^2), j = d, d-2, ...
  double factor = 1.0;
  for (int j = d; j >= 3; j -= 2) factor *= -1.0 / (2.0 * 0.5 * (j - 2) * R * R);

  if (d % 2 == 1) {
    const Jet y = Jet::variable(std::cosh(chi), steps);
    const Jet delta = shannon_delta(M, acosh(y));
    return factor * 2.0 / R * delta.derivative(steps);
  }
  // d^m/dy^m P_{-1/2+i l}(y) = (-1/2)^m |(1/2 + i l)_m|^2 / m!
  //                           * 2F1(1/2 + m - i l, 1/2 + m + i l; 1 + m; (1 - y)/2)
  const int m = steps;
  const double y = std::cosh(chi);
  double m_fact = 1.0;
  for (int i = 2; i <= m; ++i) m_fact *= i;
  auto integrand = [&](double l) {
    double poch = 1.0;
    for (int i = 0; i < m; ++i) poch *= (0.5 + i) * (0.5 + i) + l * l;
    const Complex f = gauss_2f1({Complex(0.5 + m, -l), Complex(0.5 + m, l),
                                 1.0 + m, 0.5 * (1.0 - y)});
    const double deriv = std::pow(-0.5, m) * poch / m_fact * f.real();
    return deriv * l * std::tanh(kPi * l);
  };
  const double scale = std::pow(M, 2 * m + 2);
  const double d2_derivative =
      integrate_panels(integrand, lambda_panels(M, chi), kernel_spec(scale)).value /
      (R * R);
  return factor * d2_derivative;
}

AsymptoticValue dirichlet_asymptotic(const KernelParams& kp, double chi) {
  chi = std::abs(chi);
  const SpectralParams& p = kp.spectral();
  const double rho = p.rho(), M = kp.M();
  const double log_pref = (1.0 - rho) * std::log(2.0) + rho * std::log(M) -
                          0.5 * std::log(kPi) - std::lgamma(rho + 0.5) -
                          p.d() * std::log(p.R()) - std::log(chi) -
                          rho * std::log(std::sinh(chi));
  return {std::exp(log_pref) * std::sin(M * chi - 0.5 * kPi * rho),
          M * chi >= 10.0};
}

double dirichlet_asymptotic_alt_constant(const KernelParams& kp, double chi) {
  chi = std::abs(chi);
  const double rho = kp.spectral().rho();
  return std::pow(2.0, -0.5 * (rho - 3.0)) /
         (std::sqrt(kPi) * std::tgamma(rho + 0.5)) * std::pow(kp.M_tilde(), rho) /
         std::pow(std::sinh(chi), rho + 1.0) *
         std::sin(kp.M() * chi - 0.5 * kPi * rho);
}

double dirichlet_origin_odd(const KernelParams& kp) {
  const SpectralParams& p = kp.spectral();
  if (!p.odd() || p.d() < 3)
    throw std::invalid_argument(
        "origin value is only available in odd dimensions d >= 3");
  const int k = p.k();
  const PlancherelPoly poly = poly_coefficients(k, Parity::odd);
  const double M = kp.M();
  double sum = 0.0;
  for (int l = 1; l <= k; ++l)
    sum += poly.coefficients[l - 1] * std::pow(M, 2 * l + 1) / (2 * l + 1);
  const double rho = p.rho();
  return std::exp(2 * std::lgamma(k) - (2 * rho - 1) * std::log(2.0) -
                  2 * std::lgamma(rho + 0.5) - p.d() * std::log(p.R())) *
         sum;
}

double dirichlet_origin_integral(const KernelParams& kp) {
  const SpectralParams& p = kp.spectral();
  if (!p.odd() || p.d() < 3)
    throw std::invalid_argument(
        "origin value is only available in odd dimensions d >= 3");
  const int k = p.k();
  QuadratureSpec spec;
  spec.abs_tol = 1e-14;
  spec.rel_tol = 1e-13;
  const double integral =
      integrate(
          [&](double l) {
            return gamma_modulus_sq(GammaShift::integer_shift, l, k) /
                   gamma_modulus_sq(GammaShift::imaginary, l);
          },
          0.0, kp.M(), spec)
          .value;
  const double rho = p.rho();
  return std::exp(-(2 * rho - 1) * std::log(2.0) - 2 * std::lgamma(rho + 0.5) -
                  p.d() * std::log(p.R())) *
         integral;
}

double shannon_delta(double M, double chi) {
  const double x = M * chi;
  if (std::abs(x) < 1e-4) return M / kPi * (1.0 - x * x / 6.0 + x * x * x * x / 120.0);
  return std::sin(x) / (kPi * chi);
}

Jet shannon_delta(double M, const Jet& chi) {
  return sin(M * chi) / (kPi * chi);
}

double euclidean_dirichlet(int d, double M_tilde, double r) {
  const SpectralParams p(d);
  const double rho = p.rho(), a = p.a(), nu = rho + 0.5;
  const double log_c = (1.0 + a - 2.0 * rho) * std::log(2.0) - std::lgamma(rho + 0.5);
  r = std::abs(r);
  const double x = M_tilde * r;
  if (x < 1e-6) {
    // J_nu(x) ~ (x/2)^nu / Gamma(nu+1)
    return std::exp(log_c + (2.0 * rho + 1.0) * std::log(M_tilde) -
                    nu * std::log(2.0) - std::lgamma(nu + 1.0));
  }
  return std::exp(log_c + nu * std::log(M_tilde / r)) * bessel_j(nu, x);
}

}  // namespace hyperdirichlet
