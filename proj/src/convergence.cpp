#include "hyperdirichlet/convergence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "hyperdirichlet/kernel.hpp"

namespace hyperdirichlet {

namespace {

constexpr double kPi = std::numbers::pi;

// out[i] = work(i) for i < n on up to `threads` threads. The first exception
// (lowest index) is rethrown after all workers stop.
std::vector<double> evaluate_all(std::size_t n, unsigned threads,
                                 const std::function<double(std::size_t)>& work) {
  std::vector<double> out(n, 0.0);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = work(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_at = n;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = work(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (i < failed_at) {
          failed_at = i;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

void check_schedule(const std::vector<double>& M) {
  if (M.size() < 3)
    throw std::invalid_argument("M schedule needs at least three points");
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (!(M[i] > 0.0) || !std::isfinite(M[i]))
      throw std::invalid_argument("M schedule entries must be positive");
    if (i > 0 && !(M[i] > M[i - 1]))
      throw std::invalid_argument("M schedule must be strictly increasing");
  }
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::converged: return "converged";
    case Verdict::diverged: return "diverged";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ConvergenceReport make_report(std::vector<double> M_schedule,
                              std::vector<double> partial_sums, double target,
                              double tol) {
  if (M_schedule.size() != partial_sums.size())
    throw std::invalid_argument("schedule and partial sums differ in length");
  check_schedule(M_schedule);
  ConvergenceReport r;
  r.target = target;
  std::vector<std::pair<double, double>> samples;
  for (std::size_t i = 0; i < M_schedule.size(); ++i)
    samples.emplace_back(M_schedule[i], partial_sums[i]);
  r.extrapolated_limit = extrapolate_limit(samples).limit;

  const double floor = 1e-12 * std::max(1.0, std::abs(target));
  std::vector<double> err;
  for (double s : partial_sums) err.push_back(std::max(std::abs(s - target), floor));
  const std::size_t n = err.size();
  bool non_increasing = true;
  for (std::size_t i = n - 2; i < n; ++i)
    if (err[i] > err[i - 1]) non_increasing = false;
  bool never_decreasing = true;
  for (std::size_t i = 1; i < n; ++i)
    if (err[i] < err[i - 1]) never_decreasing = false;

  if (std::abs(r.extrapolated_limit - target) < tol && non_increasing)
    r.verdict = Verdict::converged;
  else if (never_decreasing && err.back() > tol)
    r.verdict = Verdict::diverged;
  else
    r.verdict = Verdict::inconclusive;

  for (std::size_t i = n - 3; i < n; ++i)
    r.max_drift = std::max(r.max_drift, std::abs(partial_sums[i] - r.extrapolated_limit));
  r.M_schedule = std::move(M_schedule);
  r.partial_sums = std::move(partial_sums);
  return r;
}

namespace {

// f^{(l)}(a-), stepping inside when the piece is singular at a itself.
double endpoint_derivative(const RadialFunction& f, int l) {
  const std::size_t n = f.pieces();
  try {
    const double v = f.limit_left(n, l);
    if (std::isfinite(v)) return v;
  } catch (const std::domain_error&) {
  }
  const double a = f.support();
  return f.piece_derivatives(n - 1, a * (1.0 - 1e-3), l)[l];
}

}  // namespace

void check_hypotheses(const RadialFunction& f, const SpectralParams& p,
                      HypothesisProfile profile) {
  if (!f.has_derivatives())
    throw std::invalid_argument(
        "hypothesis check needs a profile with declared one-sided limits");
  const int k = (p.d() - 1) / 2;
  constexpr double tol = 1e-10;
  char buf[128];
  if (profile == HypothesisProfile::vanishing_at_origin) {
    for (int m = 0; m <= k; ++m) {
      const double v = f.limit_right(0, m);
      if (!(std::abs(v) <= tol)) {
        std::snprintf(buf, sizeof buf,
                      "hypothesis violated: f^(%d)(0+) = %.6g, expected 0", m, v);
        throw std::invalid_argument(buf);
      }
    }
  }
  for (int l = 0; l < k; ++l) {
    const double v = endpoint_derivative(f, l);
    if (!(std::abs(v) <= tol)) {
      std::snprintf(buf, sizeof buf,
                    "hypothesis violated: f^(%d)(a-) = %.6g, expected 0", l, v);
      throw std::invalid_argument(buf);
    }
  }
}

ConvergenceReport converge_at_origin(const RadialFunction& f,
                                     const SpectralParams& p,
                                     const std::vector<double>& M_schedule,
                                     double target, double tol,
                                     HypothesisProfile profile,
                                     unsigned threads) {
  if (!p.odd())
    throw std::invalid_argument(
        "converge_at_origin handles odd d only; use converge_d2 for d = 2 or "
        "partial_sum with the quadrature kernel for other even d");
  check_schedule(M_schedule);
  if (f.has_derivatives()) check_hypotheses(f, p, profile);
  std::vector<double> sums = evaluate_all(
      M_schedule.size(), threads,
      [&](std::size_t i) { return partial_sum(f, p, M_schedule[i]); });
  return make_report(M_schedule, std::move(sums), target, tol);
}

BoundaryAudit example_d5_boundary_audit(const RadialFunction& f,
                                        const SpectralParams& p, double M) {
  if (p.d() != 5) throw std::invalid_argument("boundary audit is for d = 5");
  if (p.R() != 1.0) throw std::invalid_argument("boundary audit assumes R = 1");
  if (!f.has_derivatives())
    throw std::invalid_argument(
        "boundary audit needs declared one-sided limits f^(m)(b+-)");
  const std::vector<double>& b = f.breakpoints();
  const std::size_t n = f.pieces();
  const double a = f.support();
  auto delta = [M](double x) { return shannon_delta(M, x); };
  auto delta_prime = [M](double x) {
    return shannon_delta(M, Jet::variable(x, 1)).derivative(1);
  };

  BoundaryAudit out;
  for (std::size_t i = 1; i < n; ++i) {
    const double x = b[i];
    const double df = f.jump(i, 0), dfp = f.jump(i, 1);
    const double s2 = std::sinh(x) * std::sinh(x), sh2 = std::sinh(2 * x);
    out.G1 += 0.5 * delta(x) * df * sh2;
    out.G3 -= delta_prime(x) * df * s2;
    out.G5 += delta(x) * (df * sh2 + dfp * s2);
  }
  const double fa = endpoint_derivative(f, 0), fpa = endpoint_derivative(f, 1);
  const double s2a = std::sinh(a) * std::sinh(a), sh2a = std::sinh(2 * a);
  out.G2 = -0.5 * delta(a) * fa * sh2a;
  out.G4 = delta_prime(a) * fa * s2a;
  out.G6 = -delta(a) * (fa * sh2a + fpa * s2a);

  QuadratureSpec spec;
  spec.abs_tol = 1e-12;
  spec.rel_tol = 1e-12;
  spec.max_subdivisions = 20000;
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = b[i], hi = b[i + 1];
    std::vector<double> cuts{lo};
    for (double x = lo + kPi / M; x < hi; x += kPi / M) cuts.push_back(x);
    cuts.push_back(hi);
    const double i1 = integrate_panels(
        [&](double x) {
          // (f sinh 2x)' = f' sinh 2x + 2 f cosh 2x
          const auto d = f.piece_derivatives(i, x, 1);
          return delta(x) * (d[1] * std::sinh(2 * x) + 2 * d[0] * std::cosh(2 * x));
        },
        cuts, spec).value;
    const double i2 = integrate_panels(
        [&](double x) {
          // (f s^2)'' = f'' s^2 + 2 f' sinh 2x + 2 f cosh 2x
          const auto d = f.piece_derivatives(i, x, 2);
          const double s = std::sinh(x);
          return delta(x) * (d[2] * s * s + 2 * d[1] * std::sinh(2 * x) +
                             2 * d[0] * std::cosh(2 * x));
        },
        cuts, spec).value;
    out.I1 += 0.5 * i1;
    out.I2 += i2;
  }
  const double sum = out.G1 + out.G2 + out.G3 + out.G4 + out.G5 + out.G6 + out.I1 + out.I2;
  out.total = 2.0 / 3.0 * sum;
  out.sign_flipped_total = 2.0 / 3.0 * (sum - 2.0 * (out.G5 + out.G6));
  return out;
}

double d2_partial_sum(const HalfLineFunction& f, double M, const D2Options& options) {
  if (!(M > 0.0)) throw std::invalid_argument("M must be > 0");
  // g carries ~1e-13 of quadrature noise; a tighter outer tolerance only
  // bisects that noise.
  QuadratureSpec spec;
  spec.abs_tol = 1e-10;
  spec.rel_tol = 1e-10;
  spec.max_subdivisions = 20000;
  std::vector<double> cuts;
  for (double x = 0.0; x < M; x += 1.0) cuts.push_back(x);
  cuts.push_back(M);
  return integrate_panels(
             [&](double mu) {
               return mehler_fock_forward(f, mu, options.y_truncation_factor);
             },
             cuts, spec)
      .value;
}

double d2_partial_sum_direct(const HalfLineFunction& f, double M) {
  const KernelParams kp(SpectralParams(2), M);
  QuadratureSpec spec;
  spec.abs_tol = 1e-9;
  spec.rel_tol = 1e-9;
  spec.max_subdivisions = 20000;
  const double Y = half_line_truncation(f, spec.abs_tol);
  // integrate in chi = acosh y to resolve the kernel's oscillation
  const double chi_max = std::acosh(Y);
  std::vector<double> cuts{0.0};
  for (double x = kPi / M; x < chi_max; x += kPi / M) cuts.push_back(x);
  cuts.push_back(chi_max);
  return integrate_panels(
             [&](double chi) {
               const double y = std::cosh(chi);
               return f(y) * dirichlet_d2(kp, y) * std::sinh(chi);
             },
             cuts, spec)
      .value;
}

ConvergenceReport converge_d2(const HalfLineFunction& f,
                              const std::vector<double>& M_schedule,
                              double target_f_at_1, double tol,
                              const D2Options& options) {
  check_schedule(M_schedule);
  std::vector<double> sums = evaluate_all(
      M_schedule.size(), options.threads,
      [&](std::size_t i) { return d2_partial_sum(f, M_schedule[i], options); });
  return make_report(M_schedule, std::move(sums), target_f_at_1, tol);
}

std::pair<double, double> delta_limit_audit(int l, double M) {
  if (l < 0) throw std::invalid_argument("l must be >= 0");
  if (2 * l + 1 > Jet::kMaxOrder)
    throw std::out_of_range("derivative order 2l+1 exceeds the jet depth");
  if (M == 0.0) return {0.0, 0.0};
  const auto d = derivatives_taylor(
      [M](const Jet& x) { return shannon_delta(M, x); }, 0.0, 2 * l + 1);
  return {d[2 * l], d[2 * l + 1]};
}

}  // namespace hyperdirichlet
