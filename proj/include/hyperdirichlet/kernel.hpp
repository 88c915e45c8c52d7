#pragma once

#include "hyperdirichlet/jet.hpp"
#include "hyperdirichlet/spherical.hpp"

namespace hyperdirichlet {

/// Spectral parameters plus the band limit M = R * M_tilde.
class KernelParams {
 public:
  /// Throws std::invalid_argument unless M > 0 and finite.
  KernelParams(SpectralParams spectral, double M);

  const SpectralParams& spectral() const { return spectral_; }
  double M() const { return M_; }
  double M_tilde() const { return M_ / spectral_.R(); }
  int d() const { return spectral_.d(); }
  double R() const { return spectral_.R(); }

 private:
  SpectralParams spectral_;
  double M_;
};

/// Dirichlet kernel from its definition,
///   D_M(chi) = 2^{2 rho} / (2 pi R^d) int_0^M Phi_lambda(chi) |c(lambda)|^{-2} d lambda,
/// with lambda panels cut every pi / chi. Any d; chi = 0 is allowed.
double dirichlet_quadrature(const KernelParams& kp, double chi);

/// Closed forms for d = 1, 3, 5 in terms of delta_M = sin(M chi) / (pi chi):
///   d = 1:  2 delta_M / R
///   d = 3:  -2 delta_M' / (R^3 sinh chi)
///   d = 5:  (2 / (3 R^5)) (delta_M'' / sinh^2 chi - cosh chi delta_M' / sinh^3 chi)
/// For M chi < 0.5 and chi < 0.5 the kernel is summed as a power series in
/// sinh^2 chi instead. Other d throw std::invalid_argument.
double dirichlet_closed(const KernelParams& kp, double chi);

/// d = 2 kernel as a function of y = cosh chi:
///   (1/R^2) int_0^M P_{-1/2+i lambda}(y) lambda tanh(pi lambda) d lambda.
double dirichlet_d2(const KernelParams& kp, double y);

/// dirichlet_d2 and dirichlet_quadrature at d = 2 use the same normalization:
/// 2^{2 rho} / (2 pi) * pi = 1 at rho = 1/2. Multiply a dirichlet_d2 value by
/// this to get the definition's convention.
inline constexpr double kD2ConventionFactor = 1.0;

/// Dimension recursion D^{(d)} = -(1 / (2 a_d R^2)) d/d(cosh chi) D^{(d-2)},
/// a_d = (d - 2) / 2, applied from d = 1 (odd) or d = 2 (even). Odd d uses
/// exact jet derivatives of delta_M in cosh chi; even d differentiates the
/// conical function under the lambda integral. d >= 3, at most 6 steps.
double dirichlet_recursion(const KernelParams& kp, double chi);

struct AsymptoticValue {
  double value = 0.0;
  /// False when M chi < 10, outside the regime of the leading term.
  bool reliable = true;
};

/// Leading large-M term
///   2^{1-rho} M^rho sin(M chi - pi rho / 2) / (sqrt(pi) Gamma(rho + 1/2) R^d chi sinh^rho chi).
AsymptoticValue dirichlet_asymptotic(const KernelParams& kp, double chi);

/// The same leading term with the alternative constant and chi dependence
///   2^{-(rho-3)/2} / (sqrt(pi) Gamma(rho+1/2)) M_tilde^rho / sinh^{rho+1} chi sin(M chi - pi rho / 2).
/// Kept for comparison only; its constant and chi dependence do not match
/// the closed forms.
double dirichlet_asymptotic_alt_constant(const KernelParams& kp, double chi);

/// D_M(0) for odd d >= 3 through the Plancherel polynomial:
///   Gamma^2(k) / (2^{2 rho - 1} Gamma^2(rho + 1/2) R^d) sum_l beta_l M^{2l+1} / (2l+1).
double dirichlet_origin_odd(const KernelParams& kp);

/// The same value from the integral of |Gamma(rho + i lambda)|^2 / |Gamma(i lambda)|^2.
double dirichlet_origin_integral(const KernelParams& kp);

/// sin(M chi) / (pi chi); M / pi at chi = 0. Even in chi.
double shannon_delta(double M, double chi);

/// shannon_delta on jets. A jet expanded at exactly 0 is handled by
/// cancelling the common factor chi.
Jet shannon_delta(double M, const Jet& chi);

/// Limit kernel of the R-family at fixed M_tilde:
///   2 / (2^{2 rho} Gamma^2(rho + 1/2)) int_0^{M_tilde} J_a(p r) p^{d-1} dp
///   = 2^{1 + a - 2 rho} / Gamma(rho + 1/2) M_tilde^{rho+1/2} J_{rho+1/2}(M_tilde r) / r^{rho+1/2},
/// with J_a the normalized Bessel function.
double euclidean_dirichlet(int d, double M_tilde, double r);

}  // namespace hyperdirichlet
