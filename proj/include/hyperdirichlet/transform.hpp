#pragma once

#include <iosfwd>
#include <vector>

#include "hyperdirichlet/jet.hpp"
#include "hyperdirichlet/numerics.hpp"
#include "hyperdirichlet/spherical.hpp"

namespace hyperdirichlet {

/// Piecewise-smooth radial profile f(chi) supported in [0, a].
///
/// Piece i lives on [b_i, b_{i+1}] and is given on jets, so one-sided limits
/// of f and its derivatives at every breakpoint come from evaluating the
/// adjacent piece there. A profile built from plain values (sampled())
/// has no declared derivative limits.
class RadialFunction {
 public:
  /// breakpoints = {0 = b_0 < b_1 < ... < b_n = a}, pieces.size() == n.
  /// smoothness: each piece is C^{smoothness}.
  RadialFunction(std::vector<double> breakpoints, std::vector<JetFunction> pieces,
                 int smoothness);

  /// One smooth piece on [0, a].
  static RadialFunction smooth(JetFunction f, double a, int smoothness = 16);
  /// Identically zero on [0, a].
  static RadialFunction zero(double a);
  /// Values only; one-sided derivative limits are not available.
  static RadialFunction sampled(RealFunction f, std::vector<double> breakpoints);

  /// f(chi); 0 outside [0, a). At an interior breakpoint the right piece is
  /// used.
  double operator()(double chi) const;
  /// Derivatives 0..order of piece i at chi.
  std::vector<double> piece_derivatives(std::size_t i, double chi, int order) const;

  /// f^{(m)}(b_i^-) for i = 1..n and f^{(m)}(b_i^+) for i = 0..n-1.
  double limit_left(std::size_t i, int m) const;
  double limit_right(std::size_t i, int m) const;
  /// delta f^{(m)}(b_i) = f^{(m)}(b_i^+) - f^{(m)}(b_i^-), i = 1..n-1.
  double jump(std::size_t i, int m) const;

  double support() const { return breakpoints_.back(); }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  std::size_t pieces() const { return breakpoints_.size() - 1; }
  int smoothness() const { return smoothness_; }
  bool has_derivatives() const { return !jet_pieces_.empty(); }

  /// s * f.
  RadialFunction scaled(double s) const;

 private:
  std::size_t piece_of(double chi) const;

  std::vector<double> breakpoints_;
  std::vector<JetFunction> jet_pieces_;
  RealFunction values_;
  int smoothness_ = 0;
};

/// Sampled forward transform on an increasing lambda grid.
struct SpectrumTable {
  std::vector<double> lambda_grid;
  std::vector<double> values;
  SpectralParams params{1};

  /// Throws std::invalid_argument on mismatched sizes, empty or
  /// non-increasing grids, negative lambda or non-finite values.
  void validate() const;
};

/// CSV with header `lambda,fhat` and 17 significant digits.
void write_spectrum_csv(std::ostream& out, const SpectrumTable& table);
/// Reads the format written by write_spectrum_csv.
SpectrumTable read_spectrum_csv(std::istream& in, const SpectralParams& params);

/// R^d int_0^a f(chi) Phi_lambda(chi) sinh^{d-1}(chi) d chi.
double fh_forward(const RadialFunction& f, const SpectralParams& p, double lambda);

/// fh_forward on every grid point.
SpectrumTable tabulate_spectrum(const RadialFunction& f, const SpectralParams& p,
                                std::vector<double> lambda_grid);

/// int_0^{lambda_max} fhat(lambda) Phi_lambda(chi) rho_P(lambda) d lambda with
/// fhat interpolated by monotone cubic Hermite (PCHIP) and rho_P the
/// Plancherel density; zero beyond the last grid point. The interpolation
/// error is estimated by rebuilding the interpolant on every other grid point;
/// if the induced error bound exceeds `tol` the call throws
/// std::runtime_error.
double fh_inverse(const SpectrumTable& spectrum, double chi, double lambda_max,
                  double tol = 1e-4);

/// Interpolation error bound used by fh_inverse.
double fh_inverse_interpolation_bound(const SpectrumTable& spectrum,
                                      double lambda_max);

/// Spherical partial sum R^d int_0^a f(chi) D_M(chi) sinh^{d-1}(chi) d chi at
/// the origin. The kernel is the closed form for d = 1, 3, 5 and the
/// dimension recursion otherwise. chi != 0 throws std::invalid_argument.
double partial_sum(const RadialFunction& f, const SpectralParams& p, double M,
                   double chi = 0.0);

struct ParsevalNorms {
  double function_norm_sq = 0.0;  // R^d int f^2 sinh^{d-1} d chi
  double spectral_norm_sq = 0.0;  // int_0^{lambda_max} fhat^2 rho_P d lambda
};

ParsevalNorms parseval_check(const RadialFunction& f, const SpectralParams& p,
                             double lambda_max);

/// Function on y in [1, inf) with a declared absolute tail bound
/// tail_bound(Y) >= int_Y^inf |f(y)| dy.
struct HalfLineFunction {
  RealFunction f;
  RealFunction tail_bound;

  double operator()(double y) const { return f(y); }
};

/// Point beyond which the declared tail of |f| is below abs_tol / 10.
/// Throws std::runtime_error when the bound does not fall that low before
/// y = 1e8.
double half_line_truncation(const HalfLineFunction& f, double abs_tol);

/// g(mu) = mu tanh(pi mu) int_1^inf P_{-1/2+i mu}(y) f(y) dy, the y range
/// truncated by the declared tail (times truncation_factor).
double mehler_fock_forward(const HalfLineFunction& f, double mu,
                           double truncation_factor = 1.0);

/// int_0^{mu_max} P_{-1/2+i mu}(y) g(mu) d mu.
double mehler_fock_inverse(const RealFunction& g, double y, double mu_max);

/// Generalized translation
///   (T_x g)(y) = (1/pi) int_0^pi g(x y + sqrt((x^2-1)(y^2-1)) cos t) dt.
double translate(const RealFunction& g, double x, double y);

/// Same translation as int K(x, y, z) g(z) dz over (z1, z2), with Gauss-
/// Chebyshev nodes for the arcsine weight; the node count doubles until two
/// successive sums agree to `tol`.
double translate_z(const RealFunction& g, double x, double y, double tol = 1e-13);

/// K(x, y, z) = 1 / (pi sqrt((z - z1)(z2 - z))) on (z1, z2), 0 elsewhere,
/// z1,2 = x y -/+ sqrt((x^2-1)(y^2-1)).
double arcsine_kernel(double x, double y, double z);

/// (f * g)(x) = int_1^inf f(y) (T_x g)(y) dy.
double convolve(const HalfLineFunction& f, const RealFunction& g, double x);

/// |P(x) P(y) - int K(x, y, z) P(z) dz| for P = P_{-1/2+i mu}.
double product_formula_residual(double x, double y, double mu);

/// int g(mu) [int_0^Lambda lambda tanh(pi lambda) int_1^Y P_mu P_lambda dy d lambda] d mu
/// over mu in [0, mu_max]; tends to int g as Y and Lambda grow.
double completeness_smeared(const RealFunction& g, double mu_max, double Y,
                            double Lambda);

}  // namespace hyperdirichlet
