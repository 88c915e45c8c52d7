#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hyperdirichlet/cfunction.hpp"
#include "hyperdirichlet/convergence.hpp"
#include "hyperdirichlet/io.hpp"
#include "hyperdirichlet/kernel.hpp"
#include "hyperdirichlet/specfun.hpp"
#include "hyperdirichlet/spherical.hpp"
#include "hyperdirichlet/test_functions.hpp"
#include "hyperdirichlet/transform.hpp"

namespace hyperdirichlet::cli {

namespace {

using Row = std::vector<double>;

struct Table {
  std::vector<std::string> columns;
  std::vector<Row> rows;
};

std::string table_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const Row& r : t.rows) out += csv_row(r);
  return out;
}

std::string json_number(double x) {
  return std::isfinite(x) ? format_double(x) : "null";
}

std::string table_json(const Table& t) {
  std::string out = "{\n  \"columns\": [";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + t.columns[i] + "\"";
  }
  out += "],\n  \"rows\": [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out += r ? ",\n    [" : "\n    [";
    for (std::size_t i = 0; i < t.rows[r].size(); ++i) {
      if (i) out += ", ";
      out += json_number(t.rows[r][i]);
    }
    out += "]";
  }
  out += t.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::vector<double> parse_list(const std::string& spec, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument("trailing text");
    } catch (const std::logic_error&) {
      throw std::invalid_argument(flag + ": not a comma-separated list of numbers ('" +
                                  spec + "')");
    }
  }
  if (out.empty()) throw std::invalid_argument(flag + ": empty list");
  return out;
}

// "start:stop:count", or one number / a comma-separated list.
std::vector<double> parse_grid(const std::string& spec, const std::string& flag) {
  if (spec.find(':') == std::string::npos) return parse_list(spec, flag);
  const auto bad = [&](const std::string& why) {
    return std::invalid_argument(flag + ": " + why + " (got '" + spec + "')");
  };
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw bad("expected start:stop:count");
  double start = 0.0, stop = 0.0;
  long count = 0;
  try {
    std::size_t used0 = 0, used1 = 0, used2 = 0;
    start = std::stod(parts[0], &used0);
    stop = std::stod(parts[1], &used1);
    count = std::stol(parts[2], &used2);
    if (used0 != parts[0].size() || used1 != parts[1].size() || used2 != parts[2].size())
      throw std::invalid_argument("trailing text");
  } catch (const std::logic_error&) {
    throw bad("start and stop must be numbers and count an integer");
  }
  if (count < 1) throw bad("count must be >= 1");
  if (start > stop) throw bad("start must be <= stop");
  std::vector<double> out;
  for (long i = 0; i < count; ++i)
    out.push_back(count == 1 ? start : start + (stop - start) * i / (count - 1));
  return out;
}

unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HYPERDIRICHLET_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
      throw std::invalid_argument("HYPERDIRICHLET_THREADS must be a positive integer");
    n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

// rows[i] = work(i); rows are independent and land at their own index.
std::vector<Row> evaluate_rows(std::size_t n, const std::function<Row(std::size_t)>& work) {
  std::vector<Row> rows(n);
  const unsigned threads = std::min<unsigned>(thread_cap(), static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) rows[i] = work(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          rows[i] = work(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

struct Common {
  int d = 3;
  double R = 1.0;
  std::string format;
  std::string output = "-";
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--d", c.d, "dimension d >= 1")->required();
  sub->add_option("--R", c.R, "curvature radius R > 0")->capture_default_str();
  sub->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", c.output, "output file, - for stdout");
}

std::string render(const Table& t, const std::string& format) {
  return format == "json" ? table_json(t) : table_csv(t);
}

// Dirichlet kernel by the most direct available route for this d.
double kernel_value(const KernelParams& kp, double chi) {
  const int d = kp.d();
  if (d == 1 || d == 3 || d == 5) return dirichlet_closed(kp, chi);
  if (d == 2) return dirichlet_d2(kp, std::cosh(chi)) * kD2ConventionFactor;
  return dirichlet_recursion(kp, chi);
}

struct Options {
  Common common;
  // grids
  std::string lambda = "1", chi = "1", mu = "1", y = "2";
  // kernel
  double M = 10.0;
  std::string method = "closed";
  // transform
  std::string mode = "forward";
  std::string f = "bump";
  double a = 1.0;
  std::string spectrum_path;
  double lambda_max = 200.0, mu_max = 40.0, inverse_tol = 1e-4;
  // converge
  std::string experiment = "partial-sums";
  std::string schedule, profile = "endpoint-only", l_values = "0";
  double tol = 0.05;
  double target = std::nan("");
  // limits
  std::string sweep = "density", R_values = "10,20,40", M_values = "200,400";
  double M_tilde = 3.0, r = 1.0, p_norm = 1.0;
};

std::string run_phi(const Options& o) {
  const SpectralParams p(o.common.d, o.common.R);
  const auto lambdas = parse_grid(o.lambda, "--lambda");
  const auto chis = parse_grid(o.chi, "--chi");
  Table t{{"lambda", "chi", "phi"}, {}};
  t.rows = evaluate_rows(lambdas.size() * chis.size(), [&](std::size_t i) {
    const double l = lambdas[i / chis.size()], c = chis[i % chis.size()];
    return Row{l, c, phi(p, l, c)};
  });
  return render(t, o.common.format);
}

std::string run_cfunc(const Options& o) {
  const SpectralParams p(o.common.d, o.common.R);
  Table t{{"lambda", "inverse_c_modulus_sq", "plancherel_density"}, {}};
  for (double l : parse_grid(o.lambda, "--lambda"))
    t.rows.push_back({l, inverse_c_modulus_sq(p, l), plancherel_density(p, l)});
  return render(t, o.common.format);
}

std::string run_kernel(const Options& o) {
  const KernelParams kp(SpectralParams(o.common.d, o.common.R), o.M);
  const auto chis = parse_grid(o.chi, "--chi");
  std::function<double(double)> method;
  if (o.method == "quadrature") {
    method = [&](double c) { return dirichlet_quadrature(kp, c); };
  } else if (o.method == "closed") {
    method = [&](double c) { return dirichlet_closed(kp, c); };
  } else if (o.method == "recursion") {
    method = [&](double c) {
      return kp.d() == 2 ? dirichlet_d2(kp, std::cosh(c)) * kD2ConventionFactor
                         : dirichlet_recursion(kp, c);
    };
  } else {
    method = [&](double c) { return dirichlet_asymptotic(kp, c).value; };
  }
  Table t{{"chi", "D"}, {}};
  t.rows = evaluate_rows(chis.size(), [&](std::size_t i) {
    return Row{chis[i], method(chis[i])};
  });
  return render(t, o.common.format);
}

std::string run_transform(const Options& o) {
  const SpectralParams p(o.common.d, o.common.R);
  Table t;
  if (o.mode == "forward") {
    const RadialFunction f = radial_by_name(o.f, o.a);
    const auto lambdas = parse_grid(o.lambda, "--lambda");
    t.columns = {"lambda", "fhat"};
    t.rows = evaluate_rows(lambdas.size(), [&](std::size_t i) {
      return Row{lambdas[i], fh_forward(f, p, lambdas[i])};
    });
  } else if (o.mode == "inverse") {
    if (o.spectrum_path.empty())
      throw std::invalid_argument("--spectrum is required for --mode inverse");
    std::ifstream in(o.spectrum_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read spectrum file " + o.spectrum_path);
    const SpectrumTable s = read_spectrum_csv(in, p);
    const auto chis = parse_grid(o.chi, "--chi");
    t.columns = {"chi", "f"};
    t.rows = evaluate_rows(chis.size(), [&](std::size_t i) {
      return Row{chis[i], fh_inverse(s, chis[i], o.lambda_max, o.inverse_tol)};
    });
  } else if (o.mode == "parseval") {
    const ParsevalNorms n = parseval_check(radial_by_name(o.f, o.a), p, o.lambda_max);
    t.columns = {"function_norm_sq", "spectral_norm_sq"};
    t.rows = {{n.function_norm_sq, n.spectral_norm_sq}};
  } else if (o.mode == "mehler-fock") {
    const HalfLineFunction f = half_line_by_name(o.f);
    const auto mus = parse_grid(o.mu, "--mu");
    t.columns = {"mu", "g"};
    t.rows = evaluate_rows(mus.size(), [&](std::size_t i) {
      return Row{mus[i], mehler_fock_forward(f, mus[i])};
    });
  } else {
    const HalfLineFunction f = half_line_by_name(o.f);
    const auto ys = parse_grid(o.y, "--y");
    auto g = [&](double mu) { return mehler_fock_forward(f, mu); };
    t.columns = {"y", "reconstructed", "f"};
    t.rows = evaluate_rows(ys.size(), [&](std::size_t i) {
      return Row{ys[i], mehler_fock_inverse(g, ys[i], o.mu_max), f(ys[i])};
    });
  }
  return render(t, o.common.format);
}

std::string run_converge(const Options& o) {
  const std::string format = o.common.format.empty() ? "json" : o.common.format;
  const SpectralParams p(o.common.d, o.common.R);
  if (o.experiment == "delta-limits") {
    Table t{{"l", "M", "even_limit", "odd_limit"}, {}};
    for (double l : parse_list(o.l_values, "--l")) {
      const auto [even, odd] = delta_limit_audit(static_cast<int>(l), o.M);
      t.rows.push_back({l, o.M, even, odd});
    }
    return render(t, format);
  }
  if (o.experiment == "boundary-audit") {
    const RadialFunction f = radial_by_name(o.f, o.a);
    const BoundaryAudit b = example_d5_boundary_audit(f, p, o.M);
    const double ps = partial_sum(f, p, o.M);
    const std::vector<std::pair<std::string, double>> terms = {
        {"G1", b.G1}, {"G2", b.G2}, {"G3", b.G3}, {"G4", b.G4},
        {"G5", b.G5}, {"G6", b.G6}, {"I1", b.I1}, {"I2", b.I2},
        {"total", b.total}, {"sign_flipped_total", b.sign_flipped_total},
        {"partial_sum", ps}};
    if (format == "json") {
      std::string out = "{\n";
      for (std::size_t i = 0; i < terms.size(); ++i)
        out += "  \"" + terms[i].first + "\": " + json_number(terms[i].second) +
               (i + 1 < terms.size() ? ",\n" : "\n");
      return out + "}\n";
    }
    std::string out = "term,value\n";
    for (const auto& [name, v] : terms) out += name + "," + format_double(v) + "\n";
    return out;
  }
  if (o.experiment != "partial-sums")
    throw std::invalid_argument("unknown experiment " + o.experiment);

  ConvergenceReport r;
  if (p.d() == 2) {
    if (p.R() != 1.0) throw std::invalid_argument("d = 2 experiments assume R = 1");
    const HalfLineFunction f = half_line_by_name(o.f);
    const auto schedule = parse_list(o.schedule.empty() ? "10,20,40,80" : o.schedule, "--schedule");
    const double target = std::isnan(o.target) ? f(1.0) : o.target;
    D2Options opt;
    opt.threads = thread_cap();
    r = converge_d2(f, schedule, target, o.tol, opt);
  } else {
    const RadialFunction f = radial_by_name(o.f, o.a);
    const auto schedule = parse_list(o.schedule.empty() ? "25,50,100,200" : o.schedule, "--schedule");
    const double target = std::isnan(o.target) ? f(0.0) : o.target;
    const HypothesisProfile profile =
        o.profile == "vanishing-at-origin" ? HypothesisProfile::vanishing_at_origin : HypothesisProfile::endpoint_only;
    r = converge_at_origin(f, p, schedule, target, o.tol, profile, thread_cap());
  }
  if (format == "json") return report_to_json(r);
  std::ostringstream out;
  write_report_csv(out, r);
  return out.str();
}

std::string run_limits(const Options& o) {
  const int d = o.common.d;
  const SpectralParams p(d);
  Table t;
  if (o.sweep == "euclid-kernel") {
    const auto Rs = parse_list(o.R_values, "--R-values");
    const double limit = euclidean_dirichlet(d, o.M_tilde, o.r);
    t.columns = {"R", "kernel", "euclidean", "abs_error"};
    t.rows = evaluate_rows(Rs.size(), [&](std::size_t i) {
      const KernelParams kp(SpectralParams(d, Rs[i]), o.M_tilde * Rs[i]);
      const double v = kernel_value(kp, o.r / Rs[i]);
      return Row{Rs[i], v, limit, std::abs(v - limit)};
    });
  } else if (o.sweep == "density") {
    const auto Rs = parse_list(o.R_values, "--R-values");
    const auto values = density_euclid_limit(p, o.p_norm, Rs);
    const double limit = density_euclid_constant(p) * std::pow(o.p_norm, d - 1);
    t.columns = {"R", "density", "limit", "abs_error"};
    for (std::size_t i = 0; i < Rs.size(); ++i)
      t.rows.push_back({Rs[i], values[i], limit, std::abs(values[i] - limit)});
  } else if (o.sweep == "bessel") {
    const auto Rs = parse_list(o.R_values, "--R-values");
    const auto errors = euclidean_limit_error(p, o.p_norm, o.r, Rs);
    t.columns = {"R", "abs_error"};
    for (std::size_t i = 0; i < Rs.size(); ++i) t.rows.push_back({Rs[i], errors[i]});
  } else {
    const auto Ms = parse_list(o.M_values, "--M-values");
    const double chi = parse_grid(o.chi, "--chi").front();
    t.columns = {"M", "kernel", "asymptotic", "rel_error"};
    t.rows = evaluate_rows(Ms.size(), [&](std::size_t i) {
      const KernelParams kp(p, Ms[i]);
      const double v = kernel_value(kp, chi);
      const double a = dirichlet_asymptotic(kp, chi).value;
      return Row{Ms[i], v, a, std::abs(a - v) / std::abs(v)};
    });
  }
  return render(t, o.common.format);
}

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const QuadratureError*>(&e)) return "quadrature_error";
  if (dynamic_cast<const std::domain_error*>(&e)) return "domain_error";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "invalid_argument";
  if (dynamic_cast<const std::out_of_range*>(&e)) return "out_of_range";
  return "runtime_error";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radial Fourier analysis on real hyperbolic space"};
  app.require_subcommand(1);
  Options o;

  auto* phi_cmd = app.add_subcommand("phi", "tabulate the spherical function over (lambda, chi)");
  add_common(phi_cmd, o.common);
  phi_cmd->add_option("--lambda", o.lambda, "grid start:stop:count or a number");
  phi_cmd->add_option("--chi", o.chi, "grid start:stop:count or a number");

  auto* cfunc_cmd = app.add_subcommand("cfunc", "tabulate |c|^-2 and the Plancherel density");
  add_common(cfunc_cmd, o.common);
  cfunc_cmd->add_option("--lambda", o.lambda, "grid");

  auto* kernel_cmd = app.add_subcommand("kernel", "tabulate the Dirichlet kernel");
  add_common(kernel_cmd, o.common);
  kernel_cmd->add_option("--M", o.M, "band limit M = R * M_tilde");
  kernel_cmd->add_option("--chi", o.chi, "grid");
  kernel_cmd->add_option("--method", o.method)
      ->check(CLI::IsMember({"quadrature", "closed", "recursion", "asymptotic"}));

  auto* transform_cmd = app.add_subcommand("transform", "forward/inverse transforms and Parseval");
  add_common(transform_cmd, o.common);
  transform_cmd->add_option("--mode", o.mode)
      ->check(CLI::IsMember({"forward", "inverse", "parseval", "mehler-fock", "mehler-fock-inverse"}));
  transform_cmd->add_option("--f", o.f, "named test function");
  transform_cmd->add_option("--a", o.a, "support bound");
  transform_cmd->add_option("--lambda", o.lambda, "grid");
  transform_cmd->add_option("--chi", o.chi, "grid");
  transform_cmd->add_option("--mu", o.mu, "grid");
  transform_cmd->add_option("--y", o.y, "grid");
  transform_cmd->add_option("--spectrum", o.spectrum_path, "CSV written by --mode forward");
  transform_cmd->add_option("--lambda-max", o.lambda_max);
  transform_cmd->add_option("--mu-max", o.mu_max);
  transform_cmd->add_option("--inverse-tol", o.inverse_tol);

  auto* converge_cmd = app.add_subcommand("converge", "partial-sum convergence experiments at the origin");
  add_common(converge_cmd, o.common);
  converge_cmd->add_option("--experiment", o.experiment)
      ->check(CLI::IsMember({"partial-sums", "boundary-audit", "delta-limits"}));
  converge_cmd->add_option("--f", o.f, "named test function");
  converge_cmd->add_option("--a", o.a, "support bound");
  converge_cmd->add_option("--schedule", o.schedule, "comma-separated M values");
  converge_cmd->add_option("--target", o.target, "defaults to f(0+) (or f(1+) for d = 2)");
  converge_cmd->add_option("--tol", o.tol);
  converge_cmd->add_option("--profile", o.profile)->check(CLI::IsMember({"vanishing-at-origin", "endpoint-only"}));
  converge_cmd->add_option("--M", o.M);
  converge_cmd->add_option("--l", o.l_values, "comma-separated orders");

  auto* limits_cmd = app.add_subcommand("limits", "R -> infinity and large-M sweeps");
  add_common(limits_cmd, o.common);
  limits_cmd->add_option("--sweep", o.sweep)
      ->check(CLI::IsMember({"euclid-kernel", "density", "bessel", "asymptotic"}));
  limits_cmd->add_option("--R-values", o.R_values);
  limits_cmd->add_option("--M-values", o.M_values);
  limits_cmd->add_option("--M-tilde", o.M_tilde);
  limits_cmd->add_option("--r", o.r);
  limits_cmd->add_option("--p", o.p_norm, "Euclidean frequency |p|");
  limits_cmd->add_option("--chi", o.chi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_record("usage", e.what());
    return 2;
  }

  try {
    std::string text;
    if (*phi_cmd) text = run_phi(o);
    else if (*cfunc_cmd) text = run_cfunc(o);
    else if (*kernel_cmd) text = run_kernel(o);
    else if (*transform_cmd) text = run_transform(o);
    else if (*converge_cmd) text = run_converge(o);
    else text = run_limits(o);

    if (o.common.output.empty() || o.common.output == "-") {
      out << text;
    } else {
      std::ofstream file(o.common.output, std::ios::binary | std::ios::trunc);
      if (!file) throw std::runtime_error("cannot write " + o.common.output);
      file << text;
      if (!file) throw std::runtime_error("write failed for " + o.common.output);
    }
    return 0;
  } catch (const std::exception& e) {
    err << error_record(error_type(e), e.what());
    return 1;
  }
}

}  // namespace hyperdirichlet::cli
