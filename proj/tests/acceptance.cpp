// Acceptance checks: one PASS/FAIL line per criterion, exit status = number
// of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hyperdirichlet/cfunction.hpp"
#include "hyperdirichlet/convergence.hpp"
#include "hyperdirichlet/kernel.hpp"
#include "hyperdirichlet/specfun.hpp"
#include "hyperdirichlet/spherical.hpp"
#include "hyperdirichlet/test_functions.hpp"
#include "hyperdirichlet/transform.hpp"

using namespace hyperdirichlet;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

double rel(double x, double y) { return std::abs(x - y) / std::max(std::abs(y), 1e-300); }

unsigned threads() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

Outcome dual_realization() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_leg = 0, worst_ang = 0;
  int points = 0;
  for (int d = 2; d <= 7; ++d)
    for (double l : {0.0, 0.5, 1.0, 5.0, 20.0})
      for (double chi : {0.1, 0.5, 1.0, 2.0, 3.0}) {
        const SpectralParams p(d);
        const double v = phi(p, l, chi);
        worst_leg = std::max(worst_leg, std::abs(v - phi_legendre(p, l, chi)));
        worst_ang = std::max(worst_ang, std::abs(v - phi_angular_oracle(p, l, chi)));
        ++points;
      }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst_leg <= 1e-9 && worst_ang <= 1e-7 && points >= 125 && secs < 30,
          fmt("%.0f points, max |phi-legendre| %.2e, max |phi-angular| %.2e, %.1f s", points, worst_leg,
              worst_ang, secs)};
}

Outcome eigen_equation() {
  double worst = 0;
  for (int d = 2; d <= 7; ++d)
    for (double l : {0.0, 0.5, 1.0, 5.0, 20.0})
      for (double chi : {0.1, 0.5, 1.0, 2.0, 3.0})
        worst = std::max(worst, std::abs(eigen_residual(SpectralParams(d), l, chi, 1e-3)));
  return {worst < 1e-6, fmt("max residual %.2e", worst)};
}

Outcome c_function() {
  double worst = 0, worst_asym = 0;
  for (int d = 2; d <= 8; ++d) {
    const SpectralParams p(d);
    for (double l : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0})
      worst = std::max(worst, rel(c_modulus_sq_gamma(p, l), c_modulus_sq_closed(p, l)));
    const double l = 1e3;
    worst_asym = std::max(worst_asym, rel(inverse_c_modulus_sq(p, l) * std::pow(l, -2 * p.rho()),
                                          inverse_c_asymptotic_constant(p)));
  }
  return {worst <= 1e-10 && worst_asym < 0.01,
          fmt("max rel gamma vs closed %.2e, asymptotic at 1e3 %.2e", worst, worst_asym)};
}

Outcome gamma_identities() {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> kd(0, 6);
  std::uniform_real_distribution<double> ld(0.1, 30.0);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const int k = kd(rng);
    const double l = ld(rng);
    const bool half = i % 2;
    const double oracle = std::exp(2 * complex_log_gamma(Complex(k + (half ? 0.5 : 0.0), l)).real());
    const GammaShift kind = half ? GammaShift::half_integer_shift : GammaShift::integer_shift;
    worst = std::max(worst, rel(gamma_modulus_sq(kind, l, k), oracle));
  }
  return {worst <= 1e-10, fmt("200 samples, max rel %.2e", worst)};
}

Outcome kernel_agreement() {
  double odd = 0, even = 0;
  for (double M : {5.0, 20.0})
    for (double chi : {0.3, 1.0, 2.0}) {
      for (int d : {3, 5}) {
        const KernelParams kp(SpectralParams(d), M);
        const double q = dirichlet_quadrature(kp, chi);
        const double scale = std::max(1.0, std::abs(q));
        odd = std::max(odd, std::abs(dirichlet_closed(kp, chi) - q) / scale);
        odd = std::max(odd, std::abs(dirichlet_recursion(kp, chi) - q) / scale);
      }
      const KernelParams k2(SpectralParams(2), M), k4(SpectralParams(4), M);
      const double q2 = dirichlet_quadrature(k2, chi), q4 = dirichlet_quadrature(k4, chi);
      even = std::max(even, std::abs(dirichlet_d2(k2, std::cosh(chi)) * kD2ConventionFactor - q2) /
                                std::max(1.0, std::abs(q2)));
      even = std::max(even, std::abs(dirichlet_recursion(k4, chi) - q4) / std::max(1.0, std::abs(q4)));
    }
  return {odd <= 1e-7 && even <= 1e-6, fmt("d=3,5 max diff %.2e; d=2,4 max diff %.2e", odd, even)};
}

Outcome origin_value() {
  double closed = 0, extrap = 0, d5 = 0;
  for (double M : {1.0, 5.0, 10.0}) {
    const KernelParams kp(SpectralParams(3), M);
    const double exact = 2 * M * M * M / (3 * kPi);
    closed = std::max(closed, rel(dirichlet_origin_odd(kp), exact));
    std::vector<std::pair<double, double>> s;
    // even in chi, so the fit variable is 1 / chi^2
    for (double c : {1e-3, 5e-4, 2.5e-4}) s.emplace_back(1 / (c * c), dirichlet_closed(kp, c));
    extrap = std::max(extrap, rel(extrapolate_limit(s).limit, exact));
    const KernelParams k5(SpectralParams(5), M);
    d5 = std::max(d5, rel(dirichlet_origin_odd(k5), dirichlet_origin_integral(k5)));
  }
  return {closed <= 1e-10 && extrap <= 1e-8 && d5 <= 1e-8,
          fmt("d=3 rel %.2e, chi->0 extrapolation rel %.2e, d=5 poly vs integral rel %.2e", closed, extrap, d5)};
}

Outcome asymptotics() {
  auto err = [](double M) {
    const KernelParams kp(SpectralParams(3), M);
    const double exact = dirichlet_closed(kp, 1.0);
    return std::abs(dirichlet_asymptotic(kp, 1.0).value - exact) / std::abs(exact);
  };
  const double e200 = err(200), e400 = err(400);
  const double ratio = e200 / e400;
  return {e200 < 0.05 && ratio >= 1.4 && ratio <= 2.6,
          fmt("rel err M=200 %.3e, M=400 %.3e, ratio %.3f", e200, e400, ratio)};
}

Outcome bessel_limit() {
  const std::vector<double> Rs{10, 20, 40};
  bool ok = true;
  std::string detail;
  for (int d : {2, 3}) {
    const auto e = euclidean_limit_error(SpectralParams(d), 1.0, 1.0, Rs);
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      const double ratio = e[i + 1] / e[i];
      if (std::abs(ratio - 0.5) > 0.3 * 0.5) ok = false;
      detail += fmt("d=%.0f R=%.0f->%.0f ratio %.3f; ", d, Rs[i], Rs[i + 1], ratio);
    }
  }
  detail += "expected ratio 0.5 +- 30%";
  return {ok, detail};
}

Outcome density_limit() {
  // d = 3 is exact for every R, so the rate is measured in d = 5
  const SpectralParams p(5);
  const std::vector<double> Rs{10, 20, 40, 80};
  const auto v = density_euclid_limit(p, 1.0, Rs);
  const double L = density_euclid_constant(p);
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double ratio = std::abs(v[i + 1] - L) / std::abs(v[i] - L);
    if (std::abs(ratio - 0.25) > 0.3 * 0.25) ok = false;
    detail += fmt("ratio %.4f; ", ratio);
  }
  const double last = rel(v.back(), L);
  if (last > 1e-3) ok = false;
  const auto exact3 = density_euclid_limit(SpectralParams(3), 1.0, Rs);
  for (double x : exact3)
    if (rel(x, density_euclid_constant(SpectralParams(3))) > 1e-12) ok = false;
  detail += fmt("rel err at R=80 %.2e (d=5); d=3 exact", last);
  return {ok, detail};
}

Outcome convergence_experiments() {
  std::string detail;
  bool ok = true;
  const auto ramp = converge_at_origin(linear_ramp(1.0), SpectralParams(3), {25, 50, 100, 200}, 1.0, 0.05,
                                       HypothesisProfile::endpoint_only, threads());
  const std::size_t n = ramp.partial_sums.size();
  std::vector<double> e;
  for (double s : ramp.partial_sums) e.push_back(std::abs(s - 1.0));
  const bool ramp_ok = e[n - 1] < 0.05 && e[n - 1] < e[n - 2] && e[n - 2] < e[n - 3];
  ok = ok && ramp_ok;
  detail += fmt("ramp |S_200-1| %.2e; ", e[n - 1]);

  const auto pv = converge_at_origin(poly_vanish(1.0), SpectralParams(3), {25, 50, 100, 200}, 0.0, 1e-2,
                                     HypothesisProfile::vanishing_at_origin, threads());
  ok = ok && std::abs(pv.extrapolated_limit) < 1e-2;
  detail += fmt("vanishing limit %.2e; ", pv.extrapolated_limit);

  const SpectralParams p5(5);
  const BoundaryAudit audit = example_d5_boundary_audit(one_jump(1.0), p5, 50.0);
  const double diff = std::abs(audit.total - partial_sum(one_jump(1.0), p5, 50.0));
  ok = ok && diff < 1e-7;
  detail += fmt("audit diff %.2e; ", diff);

  D2Options opt;
  opt.threads = threads();
  const auto d2 = converge_d2(exp_decay(), {10, 20, 40, 80}, 1.0, 2e-2, opt);
  ok = ok && std::abs(d2.extrapolated_limit - 1.0) < 2e-2;
  detail += fmt("d=2 limit %.10f", d2.extrapolated_limit);
  return {ok, detail};
}

Outcome mehler_fock_round_trip() {
  const HalfLineFunction f = exp_decay();
  const RealFunction g = [&](double mu) { return mehler_fock_forward(f, mu); };
  double worst = 0;
  for (double y : {1.1, 2.0, 5.0}) worst = std::max(worst, std::abs(mehler_fock_inverse(g, y, 40.0) - f(y)));
  return {worst < 1e-3, fmt("max abs err %.2e", worst)};
}

Outcome product_formula() {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> xy(1.0, 4.0), mu(0.0, 3.0);
  double worst = 0;
  for (int i = 0; i < 5; ++i) {
    const double x = xy(rng), y = xy(rng), m = mu(rng);
    worst = std::max(worst, product_formula_residual(x, y, m));
  }
  return {worst < 1e-6, fmt("max residual %.2e", worst)};
}

Outcome parseval() {
  const ParsevalNorms n = parseval_check(bump(1.0), SpectralParams(3), 60.0);
  const double r = rel(n.spectral_norm_sq, n.function_norm_sq);
  return {r < 0.01, fmt("function %.10f, spectral %.10f, rel %.2e", n.function_norm_sq, n.spectral_norm_sq, r)};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome cli_determinism() {
  const std::vector<std::string> configs{
      "kernel --d 3 --M 10 --chi 0.1:2:20 --method closed",
      "converge --d 3 --f linear-ramp --schedule 10,20,40",
      "transform --d 3 --mode forward --f bump --lambda 0:20:41 --format json",
  };
  int same = 0;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const std::string path = "acceptance_golden_" + std::to_string(i) + "_" + std::to_string(run);
      const std::string cmd = std::string("\"") + HYPERDIRICHLET_CLI + "\" " + configs[i] + " --output " + path;
      if (std::system(cmd.c_str()) != 0) return {false, "CLI failed: " + configs[i]};
      outputs[run] = slurp(path);
      std::remove(path.c_str());
    }
    if (!outputs[0].empty() && outputs[0] == outputs[1]) ++same;
  }
  return {same == 3, fmt("%.0f of 3 configs byte-identical", same)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 dual realization", dual_realization},
      {"2 eigen equation", eigen_equation},
      {"3 c-function closed forms", c_function},
      {"4 gamma identities", gamma_identities},
      {"5 kernel three-way agreement", kernel_agreement},
      {"6 origin value", origin_value},
      {"7 large-M asymptotics", asymptotics},
      {"8a Bessel limit rate", bessel_limit},
      {"8b density limit", density_limit},
      {"9 convergence experiments", convergence_experiments},
      {"10 Mehler-Fock round trip", mehler_fock_round_trip},
      {"11 product formula", product_formula},
      {"12 Parseval", parseval},
      {"13 CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d failing\n", failures);
  return failures;
}
