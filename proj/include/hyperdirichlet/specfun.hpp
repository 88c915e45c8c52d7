#pragma once

#include <complex>

namespace hyperdirichlet {

using Complex = std::complex<double>;

/// log Gamma(z) for complex z away from the poles (Lanczos, g = 7, nine
/// coefficients; reflection for Re z < 1/2). The real part is log|Gamma(z)|;
/// the imaginary part is a branch of arg Gamma(z).
Complex complex_log_gamma(Complex z);

/// Gamma(z) for complex z; zero is never returned, poles throw.
Complex complex_gamma(Complex z);

/// Digamma psi(z) for complex z away from the poles.
Complex complex_digamma(Complex z);

enum class GammaShift {
  imaginary,           // |Gamma(i lambda)|^2
  half_shift,          // |Gamma(1/2 + i lambda)|^2
  integer_shift,       // |Gamma(k + i lambda)|^2
  half_integer_shift,  // |Gamma(k + 1/2 + i lambda)|^2
};

/// Squared modulus of Gamma on vertical lines, by the closed product
/// formulas in terms of sinh / cosh.
double gamma_modulus_sq(GammaShift kind, double lambda, int k = 0);

/// Parameters of 2F1(p1, p2; p3; argument).
struct HypergeometricParams {
  Complex p1;
  Complex p2;
  Complex p3;
  double argument = 0.0;
};

/// Gauss hypergeometric function for real argument < 1.
///
/// Power series on [-0.7, 0.7] with ratio-based stopping; for negative
/// arguments the Pfaff transformation to z / (z - 1); arguments past 0.7
/// (after Pfaff, if applied) go through the 1 - z connection formula,
/// including its logarithmic form when c - a - b = 0. Among the applicable
/// routes the one with the smallest predicted cancellation is used.
Complex gauss_2f1(const HypergeometricParams& params);

/// How a hypergeometric value was obtained.
enum class HypergeometricRoute {
  direct,            // series in z
  pfaff,             // series in z / (z - 1)
  pfaff_connection,  // 1 - w connection after Pfaff
  integral,          // Mehler-type integral (spherical / conical only)
};

struct JacobiValue {
  double value = 0.0;
  double error_estimate = 0.0;
  HypergeometricRoute route = HypergeometricRoute::direct;
};

/// 2F1((a+b+1+i lambda)/2, (a+b+1-i lambda)/2; a+1; -s), s >= 0: the Jacobi
/// function Phi^{(a,b)}_lambda at s = sinh^2(chi). Parameters are a conjugate
/// pair, so the value is real. Uses only hypergeometric routes; throws
/// std::runtime_error if none of them is well conditioned.
JacobiValue jacobi_hypergeometric(double a, double b, double lambda, double s);

/// Associated conical function P^{-mu}_{-1/2+i tau}(cosh chi), mu > -1/2,
/// chi > 0, from the Mehler-type integral
///   sqrt(2/pi) sinh(chi)^{-mu} / Gamma(mu+1/2)
///     * int_0^chi cos(tau t) (cosh chi - cosh t)^{mu-1/2} dt.
double conical_integral(double mu, double tau, double chi);

/// Zero-order conical (Mehler) function P_{-1/2+i mu}(y), y >= 1.
double conical_p0(double mu, double y);

/// Bessel function of the first kind J_nu(x), nu >= 0 (nu > -1 accepted),
/// x >= 0.
double bessel_j(double nu, double x);

/// Normalized ("spherical") Bessel function
///   J_a(x) = Gamma(a+1) (2/x)^a J_a(x) = Gamma(a+1) sum (-1)^n (x/2)^{2n}
///            / (n! Gamma(a+n+1)),
/// with value 1 at x = 0. a = -1/2 gives cos(x).
double spherical_bessel(double a, double x);

}  // namespace hyperdirichlet
