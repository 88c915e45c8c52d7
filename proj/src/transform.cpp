#include "hyperdirichlet/transform.hpp"

#include <algorithm>
#include <math.h>  // pchip.hpp calls unqualified isnan
#include <boost/math/interpolators/pchip.hpp>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hyperdirichlet/cfunction.hpp"
#include "hyperdirichlet/kernel.hpp"

namespace hyperdirichlet {

namespace {

constexpr double kPi = std::numbers::pi;

// breakpoints plus every multiple of `step` strictly inside (lo, hi).
std::vector<double> merged_cuts(const std::vector<double>& breakpoints,
                                double step) {
  std::vector<double> cuts = breakpoints;
  const double lo = breakpoints.front(), hi = breakpoints.back();
  if (step > 0.0 && std::isfinite(step))
    for (double x = lo + step; x < hi; x += step) cuts.push_back(x);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

std::vector<double> range_cuts(double lo, double hi, double step) {
  return merged_cuts({lo, hi}, step);
}

double sinh_power(double chi, int n) {
  return n == 0 ? 1.0 : std::pow(std::sinh(chi), n);
}

// Kernel used by partial_sum.
double origin_kernel(const KernelParams& kp, double chi) {
  const int d = kp.d();
  if (d == 1 || d == 3 || d == 5) return dirichlet_closed(kp, chi);
  if (d == 2) return dirichlet_d2(kp, std::cosh(chi)) * kD2ConventionFactor;
  return dirichlet_recursion(kp, chi);
}

}  // namespace

// --- RadialFunction ---------------------------------------------------------

RadialFunction::RadialFunction(std::vector<double> breakpoints,
                               std::vector<JetFunction> pieces, int smoothness)
    : breakpoints_(std::move(breakpoints)),
      jet_pieces_(std::move(pieces)),
      smoothness_(smoothness) {
  if (breakpoints_.size() < 2 || breakpoints_.front() != 0.0)
    throw std::invalid_argument("breakpoints must start at 0 and end at a > 0");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] > breakpoints_[i - 1]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
  if (jet_pieces_.size() != breakpoints_.size() - 1)
    throw std::invalid_argument("need one piece per breakpoint interval");
}

RadialFunction RadialFunction::smooth(JetFunction f, double a, int smoothness) {
  return RadialFunction({0.0, a}, {std::move(f)}, smoothness);
}

RadialFunction RadialFunction::zero(double a) {
  return smooth([](const Jet& x) { return Jet(0.0, x.order()); }, a);
}

RadialFunction RadialFunction::sampled(RealFunction f,
                                       std::vector<double> breakpoints) {
  const std::size_t n = breakpoints.size() < 2 ? 1 : breakpoints.size() - 1;
  std::vector<JetFunction> placeholders(n, [](const Jet& x) { return x; });
  RadialFunction r(std::move(breakpoints), std::move(placeholders), 0);
  r.jet_pieces_.clear();
  r.values_ = std::move(f);
  return r;
}

std::size_t RadialFunction::piece_of(double chi) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), chi);
  std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin());
  return i == 0 ? 0 : std::min(i - 1, pieces() - 1);
}

double RadialFunction::operator()(double chi) const {
  if (chi < 0.0 || chi >= support()) return 0.0;
  if (!has_derivatives()) return values_(chi);
  return jet_pieces_[piece_of(chi)](Jet(chi, 0)).value();
}

std::vector<double> RadialFunction::piece_derivatives(std::size_t i, double chi,
                                                      int order) const {
  if (!has_derivatives())
    throw std::invalid_argument(
        "one-sided derivative limits are not declared for this profile");
  if (i >= pieces()) throw std::out_of_range("piece index out of range");
  return derivatives_taylor(jet_pieces_[i], chi, order);
}

double RadialFunction::limit_left(std::size_t i, int m) const {
  if (i == 0 || i > pieces()) throw std::out_of_range("no left limit at b_0");
  return piece_derivatives(i - 1, breakpoints_[i], m)[m];
}

double RadialFunction::limit_right(std::size_t i, int m) const {
  if (i >= pieces()) throw std::out_of_range("no right limit at b_n");
  return piece_derivatives(i, breakpoints_[i], m)[m];
}

double RadialFunction::jump(std::size_t i, int m) const {
  return limit_right(i, m) - limit_left(i, m);
}

RadialFunction RadialFunction::scaled(double s) const {
  if (!has_derivatives())
    return sampled([f = values_, s](double x) { return s * f(x); }, breakpoints_);
  std::vector<JetFunction> pieces;
  for (const JetFunction& piece : jet_pieces_)
    pieces.push_back([piece, s](const Jet& x) { return s * piece(x); });
  return RadialFunction(breakpoints_, std::move(pieces), smoothness_);
}

// --- SpectrumTable ----------------------------------------------------------

void SpectrumTable::validate() const {
  if (lambda_grid.empty()) throw std::invalid_argument("empty lambda grid");
  if (lambda_grid.size() != values.size())
    throw std::invalid_argument("lambda grid and values differ in length");
  if (lambda_grid.front() < 0.0)
    throw std::invalid_argument("lambda grid must be >= 0");
  for (std::size_t i = 1; i < lambda_grid.size(); ++i)
    if (!(lambda_grid[i] > lambda_grid[i - 1]))
      throw std::invalid_argument("lambda grid must be strictly increasing");
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite spectrum value");
}

void write_spectrum_csv(std::ostream& out, const SpectrumTable& table) {
  table.validate();
  out << "lambda,fhat\n";
  char buf[64];
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", table.lambda_grid[i],
                  table.values[i]);
    out << buf;
  }
}

SpectrumTable read_spectrum_csv(std::istream& in, const SpectralParams& params) {
  std::string line;
  if (!std::getline(in, line) || line != "lambda,fhat")
    throw std::invalid_argument("spectrum CSV must start with header lambda,fhat");
  SpectrumTable t;
  t.params = params;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("malformed spectrum CSV row: " + line);
    t.lambda_grid.push_back(std::stod(line.substr(0, comma)));
    t.values.push_back(std::stod(line.substr(comma + 1)));
  }
  t.validate();
  return t;
}

// --- Fourier-Helgason pair ----------------------------------------------------

double fh_forward(const RadialFunction& f, const SpectralParams& p,
                  double lambda) {
  const int n = p.d() - 1;
  const double step = lambda != 0.0 ? kPi / std::abs(lambda) : 0.0;
  QuadratureSpec spec;
  spec.abs_tol = 1e-13;
  spec.rel_tol = 1e-11;
  spec.max_subdivisions = 20000;
  const double integral =
      integrate_panels(
          [&](double chi) { return f(chi) * phi(p, lambda, chi) * sinh_power(chi, n); },
          merged_cuts(f.breakpoints(), step), spec)
          .value;
  return std::pow(p.R(), p.d()) * integral;
}

SpectrumTable tabulate_spectrum(const RadialFunction& f, const SpectralParams& p,
                                std::vector<double> lambda_grid) {
  SpectrumTable t;
  t.params = p;
  t.lambda_grid = std::move(lambda_grid);
  for (double l : t.lambda_grid) t.values.push_back(fh_forward(f, p, l));
  t.validate();
  return t;
}

namespace {

using Pchip = boost::math::interpolators::pchip<std::vector<double>>;

Pchip make_pchip(std::vector<double> x, std::vector<double> y) {
  return Pchip(std::move(x), std::move(y));
}

}  // namespace

double fh_inverse_interpolation_bound(const SpectrumTable& s, double lambda_max) {
  s.validate();
  const std::size_t n = s.lambda_grid.size();
  if (n < 9)
    throw std::runtime_error("spectrum grid too short to estimate interpolation error");
  std::vector<double> cx, cy;
  for (std::size_t i = 0; i < n; i += 2) {
    cx.push_back(s.lambda_grid[i]);
    cy.push_back(s.values[i]);
  }
  const Pchip coarse = make_pchip(std::move(cx), std::move(cy));
  double bound = 0.0;
  for (std::size_t j = 1; j + 1 < n; j += 2) {
    const double l = s.lambda_grid[j];
    if (s.lambda_grid[j - 1] >= lambda_max) break;
    const double residual = std::abs(coarse(l) - s.values[j]);
    // Halving the spacing of a cubic Hermite interpolant cuts its error by
    // about 2^3; |Phi| <= 1.
    const double width = s.lambda_grid[j + 1] - s.lambda_grid[j - 1];
    bound += residual / 8.0 * plancherel_density(s.params, l) * width;
  }
  return bound;
}

double fh_inverse(const SpectrumTable& s, double chi, double lambda_max,
                  double tol) {
  s.validate();
  if (!(lambda_max > 0.0)) throw std::invalid_argument("lambda_max must be > 0");
  bool all_zero = std::all_of(s.values.begin(), s.values.end(),
                              [](double v) { return v == 0.0; });
  if (all_zero) return 0.0;
  const double bound = fh_inverse_interpolation_bound(s, lambda_max);
  if (bound > tol) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "spectrum grid too coarse: interpolation error bound %.3g "
                  "exceeds tolerance %.3g",
                  bound, tol);
    throw std::runtime_error(buf);
  }
  const Pchip interp = make_pchip(s.lambda_grid, s.values);
  const double lo = s.lambda_grid.front();
  const double hi = std::min(lambda_max, s.lambda_grid.back());
  if (!(hi > lo)) return 0.0;
  const double step = chi > 0.0 ? kPi / chi : 0.0;
  QuadratureSpec spec;
  spec.abs_tol = tol / 100.0;
  spec.rel_tol = 1e-10;
  spec.max_subdivisions = 50000;
  const SpectralParams& p = s.params;
  return integrate_panels(
             [&](double l) {
               return interp(l) * phi(p, l, chi) * plancherel_density(p, l);
             },
             range_cuts(lo, hi, step), spec)
      .value;
}

double partial_sum(const RadialFunction& f, const SpectralParams& p, double M,
                   double chi) {
  if (chi != 0.0)
    throw std::invalid_argument(
        "partial sums are only supported at the origin (chi = 0)");
  const KernelParams kp(p, M);
  const int n = p.d() - 1;
  QuadratureSpec spec;
  spec.abs_tol = 1e-12;
  spec.rel_tol = 1e-11;
  spec.max_subdivisions = 50000;
  const double integral =
      integrate_panels(
          [&](double x) {
            const double fx = f(x);
            return fx == 0.0 ? 0.0 : fx * origin_kernel(kp, x) * sinh_power(x, n);
          },
          merged_cuts(f.breakpoints(), kPi / M), spec)
          .value;
  return std::pow(p.R(), p.d()) * integral;
}

ParsevalNorms parseval_check(const RadialFunction& f, const SpectralParams& p,
                             double lambda_max) {
  const int n = p.d() - 1;
  QuadratureSpec spec;
  spec.abs_tol = 1e-14;
  spec.rel_tol = 1e-12;
  ParsevalNorms out;
  out.function_norm_sq =
      std::pow(p.R(), p.d()) *
      integrate_panels([&](double x) { return f(x) * f(x) * sinh_power(x, n); },
                       f.breakpoints(), spec)
          .value;
  if (out.function_norm_sq == 0.0) return out;
  QuadratureSpec lspec;
  lspec.abs_tol = 1e-10 * out.function_norm_sq;
  lspec.rel_tol = 1e-9;
  lspec.max_subdivisions = 20000;
  out.spectral_norm_sq =
      integrate_panels(
          [&](double l) {
            const double v = fh_forward(f, p, l);
            return v * v * plancherel_density(p, l);
          },
          range_cuts(0.0, lambda_max, kPi / f.support()), lspec)
          .value;
  return out;
}

// --- Mehler-Fock transform and d = 2 harmonic analysis ----------------------

double half_line_truncation(const HalfLineFunction& f, double abs_tol) {
  for (double width = 1.0; width <= 1e8; width *= 2.0)
    if (f.tail_bound(1.0 + width) < abs_tol / 10.0) return 1.0 + width;
  throw std::runtime_error(
      "declared decay envelope is insufficient: tail bound stays above the "
      "tolerance up to y = 1e8");
}

double mehler_fock_forward(const HalfLineFunction& f, double mu,
                           double truncation_factor) {
  if (mu == 0.0) return 0.0;
  mu = std::abs(mu);
  const double Y = 1.0 + (half_line_truncation(f, 1e-13) - 1.0) * truncation_factor;
  const double chi_max = std::acosh(Y);
  QuadratureSpec spec;
  spec.abs_tol = 1e-13;
  spec.rel_tol = 1e-12;
  spec.max_subdivisions = 20000;
  const double integral =
      integrate_panels(
          [&](double chi) {
            const double y = std::cosh(chi);
            return conical_p0(mu, y) * f(y) * std::sinh(chi);
          },
          range_cuts(0.0, chi_max, kPi / mu), spec)
          .value;
  return mu * std::tanh(kPi * mu) * integral;
}

double mehler_fock_inverse(const RealFunction& g, double y, double mu_max) {
  if (!(y >= 1.0)) throw std::domain_error("mehler_fock_inverse needs y >= 1");
  const double chi = std::acosh(y);
  QuadratureSpec spec;
  spec.abs_tol = 1e-11;
  spec.rel_tol = 1e-10;
  spec.max_subdivisions = 20000;
  return integrate_panels([&](double mu) { return conical_p0(mu, y) * g(mu); },
                          range_cuts(0.0, mu_max, chi > 0 ? kPi / chi : 0.0), spec)
      .value;
}

namespace {

void check_translation_args(double x, double y) {
  if (!(x >= 1.0) || !(y >= 1.0))
    throw std::domain_error("translation needs x >= 1 and y >= 1");
}

}  // namespace

double translate(const RealFunction& g, double x, double y) {
  check_translation_args(x, y);
  const double disc = std::sqrt((x * x - 1.0) * (y * y - 1.0));
  if (disc == 0.0) return g(x * y);
  QuadratureSpec spec;
  spec.abs_tol = 1e-13;
  spec.rel_tol = 1e-12;
  return integrate([&](double t) { return g(x * y + disc * std::cos(t)); }, 0.0,
                   kPi, spec)
             .value /
         kPi;
}

double translate_z(const RealFunction& g, double x, double y, double tol) {
  check_translation_args(x, y);
  const double disc = std::sqrt((x * x - 1.0) * (y * y - 1.0));
  if (disc == 0.0) return g(x * y);
  // z = x y + disc cos(theta_j): Gauss-Chebyshev nodes of the arcsine weight.
  auto sum = [&](int n) {
    double s = 0.0;
    for (int j = 1; j <= n; ++j)
      s += g(x * y + disc * std::cos((2.0 * j - 1.0) * kPi / (2.0 * n)));
    return s / n;
  };
  double prev = sum(8);
  for (int n = 16; n <= (1 << 20); n *= 2) {
    const double next = sum(n);
    if (std::abs(next - prev) <= tol * std::max(1.0, std::abs(next))) return next;
    prev = next;
  }
  throw std::runtime_error("translate_z: Chebyshev sums did not settle");
}

double arcsine_kernel(double x, double y, double z) {
  check_translation_args(x, y);
  const double disc = std::sqrt((x * x - 1.0) * (y * y - 1.0));
  const double z1 = x * y - disc, z2 = x * y + disc;
  if (!(z > z1 && z < z2)) return 0.0;
  return 1.0 / (kPi * std::sqrt((z - z1) * (z2 - z)));
}

double convolve(const HalfLineFunction& f, const RealFunction& g, double x) {
  if (!(x >= 1.0)) throw std::domain_error("convolve needs x >= 1");
  QuadratureSpec spec;
  spec.abs_tol = 1e-10;
  spec.rel_tol = 1e-10;
  spec.max_subdivisions = 20000;
  const double Y = half_line_truncation(f, spec.abs_tol);
  return integrate_panels(
             [&](double y) {
               const double fy = f(y);
               return fy == 0.0 ? 0.0 : fy * translate(g, x, y);
             },
             range_cuts(1.0, Y, 1.0), spec)
      .value;
}

double product_formula_residual(double x, double y, double mu) {
  check_translation_args(x, y);
  const double lhs = conical_p0(mu, x) * conical_p0(mu, y);
  const double rhs = translate_z([&](double z) { return conical_p0(mu, z); }, x, y);
  return std::abs(lhs - rhs);
}

double completeness_smeared(const RealFunction& g, double mu_max, double Y,
                            double Lambda) {
  if (!(Y > 1.0) || !(Lambda > 0.0) || !(mu_max > 0.0))
    throw std::invalid_argument("completeness_smeared needs Y > 1, Lambda, mu_max > 0");
  // Fixed composite Gauss-Legendre in chi = acosh y, shared by every lambda.
  const double chi_max = std::acosh(Y);
  const double width = std::min(0.25, kPi / (2.0 * std::max(Lambda, mu_max)));
  const int panels = static_cast<int>(std::ceil(chi_max / width));
  const double h = chi_max / panels;
  const GaussLegendreRule rule = gauss_legendre(10);
  std::vector<double> ys, weights;
  for (int i = 0; i < panels; ++i) {
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double chi = h * (i + 0.5 * (rule.nodes[j] + 1.0));
      const double y = std::cosh(chi);
      ys.push_back(y);
      // dy = sinh(chi) dchi; F(y) = int_0^mu_max g(mu) P_mu(y) dmu
      weights.push_back(0.5 * h * rule.weights[j] * std::sinh(chi) *
                        mehler_fock_inverse(g, y, mu_max));
    }
  }
  QuadratureSpec spec;
  spec.abs_tol = 1e-9;
  spec.rel_tol = 1e-9;
  spec.max_subdivisions = 20000;
  return integrate(
             [&](double l) {
               double s = 0.0;
               for (std::size_t i = 0; i < ys.size(); ++i)
                 s += weights[i] * conical_p0(l, ys[i]);
               return l * std::tanh(kPi * l) * s;
             },
             0.0, Lambda, spec)
      .value;
}

}  // namespace hyperdirichlet
