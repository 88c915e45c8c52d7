#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperdirichlet/transform.hpp"

namespace hyperdirichlet {

enum class Verdict { converged, diverged, inconclusive };

std::string to_string(Verdict v);

struct ConvergenceReport {
  std::vector<double> M_schedule;
  std::vector<double> partial_sums;
  double extrapolated_limit = 0.0;
  double target = 0.0;
  Verdict verdict = Verdict::inconclusive;
  /// max |S_M - extrapolated_limit| over the last three schedule points.
  double max_drift = 0.0;
};

/// Builds a report from computed partial sums.
///
/// Errors |S_M - target| below a noise floor of 1e-12 * max(1, |target|) are
/// treated as equal. converged: |limit - target| < tol and the errors do not
/// increase over the last three points. diverged: errors never decrease and
/// the last one exceeds tol. Otherwise inconclusive. The limit is a least
/// squares fit of S_M = L + c / M over the whole schedule.
ConvergenceReport make_report(std::vector<double> M_schedule,
                              std::vector<double> partial_sums, double target,
                              double tol);

/// Which boundary hypotheses the caller declares for f.
enum class HypothesisProfile {
  /// f^{(m)}(0+) = 0 for m = 0..k and f^{(l)}(a-) = 0 for l = 0..k-1.
  vanishing_at_origin,
  /// Only the endpoint conditions f^{(l)}(a-) = 0, l = 0..k-1.
  endpoint_only,
};

/// Throws std::invalid_argument naming the first violated condition
/// (checked to 1e-10). k = (d - 1) / 2.
void check_hypotheses(const RadialFunction& f, const SpectralParams& p,
                      HypothesisProfile profile);

/// Partial sums at the origin over the schedule (evaluated on up to `threads`
/// threads; assembly is in schedule order). Odd d only; even d throws
/// std::invalid_argument pointing at converge_d2.
ConvergenceReport converge_at_origin(const RadialFunction& f,
                                     const SpectralParams& p,
                                     const std::vector<double>& M_schedule,
                                     double target, double tol,
                                     HypothesisProfile profile,
                                     unsigned threads = 1);

/// Boundary-term decomposition of the d = 5 partial sum at the origin.
///
/// With delta = shannon_delta(M, .), s = sinh, and the piecewise integration
/// by parts of f D sinh^4, total = (2/3) (G1 + ... + G6 + I1 + I2) where
///   G1 =  1/2 sum_i delta(b_i) df(b_i) sinh(2 b_i)
///   G2 = -1/2 delta(a) f(a-) sinh(2a)
///   G3 = -sum_i delta'(b_i) df(b_i) s^2(b_i)
///   G4 =  delta'(a) f(a-) s^2(a)
///   G5 =  sum_i delta(b_i) (df(b_i) sinh(2 b_i) + df'(b_i) s^2(b_i))
///   G6 = -delta(a) (f(a-) sinh(2a) + f'(a-) s^2(a))
///   I1 =  1/2 int delta (f sinh 2chi)'
///   I2 =  int delta (f s^2)''
/// over interior breakpoints b_i. sign_flipped_total flips the signs of G5 and G6.
struct BoundaryAudit {
  double G1 = 0, G2 = 0, G3 = 0, G4 = 0, G5 = 0, G6 = 0;
  double I1 = 0, I2 = 0;
  double total = 0;
  double sign_flipped_total = 0;
};

/// Requires d = 5, R = 1 and a profile with jet pieces.
BoundaryAudit example_d5_boundary_audit(const RadialFunction& f,
                                        const SpectralParams& p, double M);

struct D2Options {
  /// Multiplies the declared y-truncation distance.
  double y_truncation_factor = 1.0;
  unsigned threads = 1;
};

/// S_M = int_1^inf f(y) delta_M(y) dy with delta_M = dirichlet_d2 at R = 1,
/// computed as int_0^M g(mu) d mu, g the Mehler-Fock transform of f.
double d2_partial_sum(const HalfLineFunction& f, double M,
                      const D2Options& options = {});

/// The same integral taken in y directly (kernel inside); slow, for
/// cross-checking small M.
double d2_partial_sum_direct(const HalfLineFunction& f, double M);

ConvergenceReport converge_d2(const HalfLineFunction& f,
                              const std::vector<double>& M_schedule,
                              double target_f_at_1, double tol,
                              const D2Options& options = {});

/// (lim delta_M^{(2l)}(0+), lim delta_M^{(2l+1)}(0+)) by jet expansion at 0.
/// l > 7 exceeds the jet depth and throws std::out_of_range.
std::pair<double, double> delta_limit_audit(int l, double M);

}  // namespace hyperdirichlet
