#include "hyperdirichlet/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hyperdirichlet/numerics.hpp"

namespace hyperdirichlet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
const Complex kI{0.0, 1.0};

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::floor(z.real());
}

// log(sin(pi z)) without overflow for large |Im z|.
Complex log_sin_pi(Complex z) {
  const double y = z.imag();
  if (std::abs(kPi * y) < 30.0) return std::log(std::sin(kPi * z));
  if (y > 0.0) {
    const Complex e = std::exp(2.0 * kPi * kI * z);
    return -kPi * kI * z + std::log((e - 1.0) / (2.0 * kI));
  }
  const Complex e = std::exp(-2.0 * kPi * kI * z);
  return kPi * kI * z + std::log((1.0 - e) / (2.0 * kI));
}

Complex lanczos_log_gamma(Complex z) {
  // Gamma(z) = Gamma(x + 1), x = z - 1.
  const Complex x = z - 1.0;
  Complex sum = kLanczos[0];
  for (int k = 1; k < 9; ++k) sum += kLanczos[k] / (x + static_cast<double>(k));
  const Complex t = x + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (x + 0.5) * std::log(t) - t +
         std::log(sum);
}

// 1 / Gamma(z), exactly zero at the poles.
Complex reciprocal_gamma(Complex z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-complex_log_gamma(z));
}

struct SeriesSum {
  Complex value;
  double max_term = 0.0;
  int terms = 0;
};

// Plain power series of 2F1 for |z| < 1.
SeriesSum hyp_series(Complex a, Complex b, Complex c, double z,
                     int max_terms = 400000) {
  if (is_nonpositive_integer(c))
    throw std::domain_error("2F1: p3 is a non-positive integer");
  SeriesSum s{1.0, 1.0, 1};
  Complex term = 1.0;
  for (int n = 0; n < max_terms; ++n) {
    const double nn = n;
    const Complex ratio = (a + nn) * (b + nn) / ((c + nn) * (nn + 1.0)) * z;
    term *= ratio;
    s.value += term;
    ++s.terms;
    const double mag = std::abs(term);
    s.max_term = std::max(s.max_term, mag);
    if (mag == 0.0) return s;
    const double r = std::abs(ratio);
    if (r < 1.0 && mag / (1.0 - r) <= 0.25 * kEps * std::abs(s.value))
      return s;
  }
  throw std::runtime_error("2F1 power series did not converge");
}

// A priori peak term magnitude and length of the series; cheap.
struct SeriesForecast {
  double peak = 1.0;
  double terms = 1.0;
};

SeriesForecast forecast_series(Complex a, Complex b, Complex c, double z) {
  SeriesForecast f;
  const double az = std::abs(z);
  if (az == 0.0) return f;
  double mag = 1.0;
  int n = 0;
  for (; n < 100000; ++n) {
    const double r = std::abs(a + double(n)) * std::abs(b + double(n)) /
                     (std::abs(c + double(n)) * (n + 1.0)) * az;
    if (r == 0.0) return {f.peak, double(n + 1)};
    if (r < 1.0 && n > 2) break;
    mag *= r;
    f.peak = std::max(f.peak, mag);
  }
  // Tail decays roughly like |z|^n once past the peak.
  const double tail = az < 1.0 ? std::log(1e-17 / std::max(mag, 1e-300) * f.peak) /
                                     std::log(az)
                               : 1e9;
  f.terms = n + std::max(tail, 0.0);
  return f;
}

struct RouteValue {
  Complex value;
  double error = 0.0;
  HypergeometricRoute route = HypergeometricRoute::direct;
};

constexpr double kMaxTerms = 300000.0;

RouteValue direct_route(Complex a, Complex b, Complex c, double z) {
  SeriesSum s = hyp_series(a, b, c, z);
  return {s.value, kEps * s.max_term * (4.0 + std::sqrt(double(s.terms))),
          HypergeometricRoute::direct};
}

// F(a, b; a + b; w) by its logarithmic expansion around w = 1.
Complex log_connection(Complex a, Complex b, double w, double& max_term,
                       int& terms) {
  const double u = 1.0 - w;
  const double log_u = std::log(u);
  const Complex pref = complex_gamma(a + b) * reciprocal_gamma(a) *
                       reciprocal_gamma(b);
  Complex psi_a = complex_digamma(a);
  Complex psi_b = complex_digamma(b);
  double psi_1 = -0.57721566490153286061;  // psi(1)
  Complex coef = 1.0;                       // (a)_n (b)_n / (n!)^2 u^n
  Complex sum = 0.0;
  max_term = 0.0;
  for (int n = 0; n < 400000; ++n) {
    const Complex term = coef * (2.0 * psi_1 - psi_a - psi_b - log_u);
    sum += term;
    max_term = std::max(max_term, std::abs(term));
    terms = n + 1;
    const double nn = n;
    const Complex ratio = (a + nn) * (b + nn) / ((nn + 1.0) * (nn + 1.0)) * u;
    if (std::abs(term) <= 0.25 * kEps * std::abs(sum) && std::abs(ratio) < 1.0 &&
        n > 2)
      break;
    coef *= ratio;
    psi_a += 1.0 / (a + nn);
    psi_b += 1.0 / (b + nn);
    psi_1 += 1.0 / (nn + 1.0);
  }
  max_term *= std::abs(pref);
  return pref * sum;
}

// F(a, b; c; w) for w in (0, 1) through the 1 - w connection formula.
RouteValue connection(Complex a, Complex b, Complex c, double w) {
  const double u = 1.0 - w;
  const Complex delta = c - a - b;
  RouteValue r;
  r.route = HypergeometricRoute::pfaff_connection;
  if (std::abs(delta) == 0.0) {
    double peak = 0.0;
    int terms = 0;
    r.value = log_connection(a, b, w, peak, terms);
    r.error = kEps * peak * (8.0 + std::sqrt(double(terms)));
    return r;
  }
  if (is_nonpositive_integer(delta) || is_nonpositive_integer(-delta))
    throw std::domain_error("2F1 connection: integer c - a - b");
  const Complex g_c = complex_gamma(c);
  const Complex p1 =
      g_c * complex_gamma(delta) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
  const Complex p2 = g_c * complex_gamma(-delta) * reciprocal_gamma(a) *
                     reciprocal_gamma(b) * std::pow(Complex(u), delta);
  Complex t1 = 0.0, t2 = 0.0;
  double err = 0.0;
  if (p1 != 0.0) {
    SeriesSum s = hyp_series(a, b, 1.0 - delta, u);
    t1 = p1 * s.value;
    err += std::abs(p1) * s.max_term * (8.0 + std::sqrt(double(s.terms)));
  }
  if (p2 != 0.0) {
    SeriesSum s = hyp_series(c - a, c - b, 1.0 + delta, u);
    t2 = p2 * s.value;
    err += std::abs(p2) * s.max_term * (8.0 + std::sqrt(double(s.terms)));
  }
  r.value = t1 + t2;
  r.error = kEps * err;
  return r;
}

// Predicted absolute error of the connection route; +inf if unusable.
double forecast_connection(Complex a, Complex b, Complex c, double w) {
  const double u = 1.0 - w;
  if (u <= 0.0) return kInfinity;
  const Complex delta = c - a - b;
  if (std::abs(delta) == 0.0) {
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) return kInfinity;
    SeriesForecast f = forecast_series(a, b, 1.0, u);
    if (f.terms > kMaxTerms) return kInfinity;
    const double pref = std::exp(std::real(complex_log_gamma(a + b) -
                                           complex_log_gamma(a) -
                                           complex_log_gamma(b)));
    return kEps * pref * f.peak * (10.0 + std::abs(std::log(u))) *
           (8.0 + std::sqrt(f.terms));
  }
  if (is_nonpositive_integer(delta) || is_nonpositive_integer(-delta))
    return kInfinity;
  auto log_mod = [](Complex z) {
    return is_nonpositive_integer(z) ? -kInfinity
                                     : -std::real(complex_log_gamma(z));
  };
  const double lg_c = std::real(complex_log_gamma(c));
  const double m1 = std::exp(lg_c + std::real(complex_log_gamma(delta)) +
                             log_mod(c - a) + log_mod(c - b));
  const double m2 = std::exp(lg_c + std::real(complex_log_gamma(-delta)) +
                             log_mod(a) + log_mod(b) +
                             std::real(delta) * std::log(u));
  SeriesForecast f1 = forecast_series(a, b, 1.0 - delta, u);
  SeriesForecast f2 = forecast_series(c - a, c - b, 1.0 + delta, u);
  if (std::max(f1.terms, f2.terms) > kMaxTerms) return kInfinity;
  return kEps * (m1 * f1.peak * (8.0 + std::sqrt(f1.terms)) +
                 m2 * f2.peak * (8.0 + std::sqrt(f2.terms)));
}

double forecast_direct(Complex a, Complex b, Complex c, double z) {
  if (std::abs(z) >= 1.0) return kInfinity;
  SeriesForecast f = forecast_series(a, b, c, z);
  if (f.terms > kMaxTerms) return kInfinity;
  return kEps * f.peak * (4.0 + std::sqrt(f.terms));
}

// Evaluates 2F1 choosing a route. `preferred` is tried first; when its
// forecast error exceeds `good_enough`, every applicable route is ranked by
// forecast and the best is used.
RouteValue evaluate_2f1(Complex a, Complex b, Complex c, double z,
                        double good_enough) {
  if (is_nonpositive_integer(c))
    throw std::domain_error("2F1: p3 is a non-positive integer");
  if (!(z < 1.0)) throw std::domain_error("2F1: argument must be < 1");
  if (z == 0.0) return {1.0, 0.0, HypergeometricRoute::direct};

  // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)).
  const double w = z / (z - 1.0);
  const Complex pf_b = c - b;
  const Complex pf_scale = std::pow(Complex(1.0 - z), -a);
  const double pf_mag = std::abs(pf_scale);

  struct Candidate {
    HypergeometricRoute route;
    double forecast;
  };
  std::vector<Candidate> candidates;
  auto add = [&](HypergeometricRoute route) {
    double f = kInfinity;
    switch (route) {
      case HypergeometricRoute::direct:
        f = forecast_direct(a, b, c, z);
        break;
      case HypergeometricRoute::pfaff:
        f = z < 0.5 ? pf_mag * forecast_direct(a, pf_b, c, w) : kInfinity;
        break;
      case HypergeometricRoute::pfaff_connection:
        f = z < 0.0   ? pf_mag * forecast_connection(a, pf_b, c, w)
            : z > 0.0 ? forecast_connection(a, b, c, z)
                      : kInfinity;
        break;
      default:
        break;
    }
    candidates.push_back({route, f});
  };

  // Default routing.
  HypergeometricRoute preferred;
  if (z >= 0.0)
    preferred = z <= 0.7 ? HypergeometricRoute::direct
                         : HypergeometricRoute::pfaff_connection;
  else if (z >= -0.7)
    preferred = HypergeometricRoute::direct;
  else
    preferred = w <= 0.7 ? HypergeometricRoute::pfaff
                         : HypergeometricRoute::pfaff_connection;
  add(preferred);
  if (!(candidates[0].forecast <= good_enough)) {
    for (HypergeometricRoute r :
         {HypergeometricRoute::direct, HypergeometricRoute::pfaff,
          HypergeometricRoute::pfaff_connection})
      if (r != preferred) add(r);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& x, const Candidate& y) {
                       return x.forecast < y.forecast;
                     });
  }
  if (!std::isfinite(candidates[0].forecast))
    throw std::runtime_error("2F1: no convergent route for these parameters");

  switch (candidates[0].route) {
    case HypergeometricRoute::direct:
      return direct_route(a, b, c, z);
    case HypergeometricRoute::pfaff: {
      RouteValue r = direct_route(a, pf_b, c, w);
      r.value *= pf_scale;
      r.error *= pf_mag;
      r.route = HypergeometricRoute::pfaff;
      return r;
    }
    default: {
      if (z > 0.0) return connection(a, b, c, z);
      RouteValue r = connection(a, pf_b, c, w);
      r.value *= pf_scale;
      r.error *= pf_mag;
      return r;
    }
  }
}

}  // namespace

Complex complex_log_gamma(Complex z) {
  if (is_nonpositive_integer(z))
    throw std::domain_error("log Gamma: pole at a non-positive integer");
  if (z.real() < 0.5)
    return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
  return lanczos_log_gamma(z);
}

Complex complex_gamma(Complex z) { return std::exp(complex_log_gamma(z)); }

Complex complex_digamma(Complex z) {
  if (is_nonpositive_integer(z))
    throw std::domain_error("digamma: pole at a non-positive integer");
  Complex shift = 0.0;
  if (z.real() < 0.5) {
    // psi(z) = psi(1 - z) - pi cot(pi z)
    Complex cot;
    if (std::abs(z.imag()) > 20.0)
      cot = z.imag() > 0 ? -kI : kI;
    else
      cot = std::cos(kPi * z) / std::sin(kPi * z);
    return complex_digamma(1.0 - z) - kPi * cot;
  }
  while (std::abs(z) < 12.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  const Complex z2 = 1.0 / (z * z);
  // Bernoulli tail: -sum B_{2k} / (2k z^{2k}).
  const Complex tail =
      z2 * (-1.0 / 12.0 +
            z2 * (1.0 / 120.0 +
                  z2 * (-1.0 / 252.0 +
                        z2 * (1.0 / 240.0 +
                              z2 * (-1.0 / 132.0 +
                                    z2 * (691.0 / 32760.0 - z2 / 12.0))))));
  return shift + std::log(z) - 0.5 / z + tail;
}

double gamma_modulus_sq(GammaShift kind, double lambda, int k) {
  if (k < 0) throw std::invalid_argument("gamma shift k must be >= 0");
  const double x = kPi * std::abs(lambda);
  // x / sinh(x) and 1 / cosh(x) without overflow.
  auto x_over_sinh = [](double t) {
    if (t < 1e-8) return 1.0 - t * t / 6.0;
    if (t > 700.0) return 2.0 * t * std::exp(-t);
    return t / std::sinh(t);
  };
  auto sech = [](double t) {
    return t > 700.0 ? 2.0 * std::exp(-t) : 1.0 / std::cosh(t);
  };
  switch (kind) {
    case GammaShift::imaginary:
      if (lambda == 0.0)
        throw std::domain_error("|Gamma(i lambda)|^2 has a pole at lambda = 0");
      return kPi * x_over_sinh(x) / (x * x / kPi);
    case GammaShift::half_shift:
      return kPi * sech(x);
    case GammaShift::integer_shift: {
      if (k == 0) return gamma_modulus_sq(GammaShift::imaginary, lambda);
      // |Gamma(i l)|^2 * l^2 = pi l / sinh(pi l), finite at l = 0.
      double v = x_over_sinh(x);
      for (int l = 1; l < k; ++l) v *= l * l + lambda * lambda;
      return v;
    }
    case GammaShift::half_integer_shift: {
      double v = kPi * sech(x);
      for (int l = 0; l < k; ++l) v *= (l + 0.5) * (l + 0.5) + lambda * lambda;
      return v;
    }
  }
  throw std::invalid_argument("unknown gamma shift kind");
}

Complex gauss_2f1(const HypergeometricParams& p) {
  return evaluate_2f1(p.p1, p.p2, p.p3, p.argument, 1e-13).value;
}

JacobiValue jacobi_hypergeometric(double a, double b, double lambda, double s) {
  if (!(s >= 0.0)) throw std::domain_error("Jacobi function needs sinh^2 >= 0");
  const Complex alpha{0.5 * (a + b + 1.0), 0.5 * lambda};
  RouteValue r = evaluate_2f1(alpha, std::conj(alpha), a + 1.0, -s, 1e-13);
  JacobiValue v;
  v.value = r.value.real();
  v.error_estimate = std::max(r.error, std::abs(r.value.imag()));
  v.route = r.route;
  return v;
}

double conical_integral(double mu, double tau, double chi) {
  if (!(mu > -0.5))
    throw std::domain_error("conical integral needs order mu > -1/2");
  if (!(chi > 0.0)) throw std::domain_error("conical integral needs chi > 0");
  // t = chi (1 - v^2) removes the endpoint singularity at t = chi:
  // integrand = cos(tau chi (1 - v^2)) q^{mu - 1/2} v^{2 mu} 2 chi, with
  // q = (cosh chi - cosh t) / v^2.
  auto sinhc = [](double x) {
    return std::abs(x) < 1e-4 ? 1.0 + x * x / 6.0 : std::sinh(x) / x;
  };
  auto envelope = [&](double v) {
    const double v2 = v * v;
    const double q = chi * std::sinh(0.5 * chi * (2.0 - v2)) * sinhc(0.5 * chi * v2);
    return 2.0 * chi * std::pow(q, mu - 0.5) * (mu == 0.0 ? 1.0 : std::pow(v, 2.0 * mu));
  };
  auto integrand = [&](double v) {
    return std::cos(tau * chi * (1.0 - v * v)) * envelope(v);
  };
  // Zeros of the cosine: tau chi (1 - v^2) = (k + 1/2) pi.
  std::vector<double> cuts{0.0};
  const double phase_max = std::abs(tau) * chi;
  std::vector<double> zeros;
  for (double k = 0.0; (k + 0.5) * kPi < phase_max; k += 1.0)
    zeros.push_back(std::sqrt(1.0 - (k + 0.5) * kPi / phase_max));
  std::sort(zeros.begin(), zeros.end());
  for (double z : zeros)
    if (z > cuts.back() && z < 1.0) cuts.push_back(z);
  cuts.push_back(1.0);
  const double scale =
      std::max({std::abs(envelope(0.5)), std::abs(envelope(1.0)), 1e-300});
  QuadratureSpec spec;
  spec.abs_tol = 1e-13 * scale;
  spec.rel_tol = 1e-13;
  spec.max_subdivisions = 5000;
  const double integral = integrate_panels(integrand, cuts, spec).value;
  const double log_pref = 0.5 * std::log(2.0 / kPi) - mu * std::log(std::sinh(chi)) -
                          std::lgamma(mu + 0.5);
  return std::exp(log_pref) * integral;
}

double conical_p0(double mu, double y) {
  if (!(y >= 1.0)) throw std::domain_error("conical function needs y >= 1");
  if (y == 1.0) return 1.0;
  const double s = (y - 1.0) * (y + 1.0);
  try {
    JacobiValue v = jacobi_hypergeometric(0.0, -0.5, mu, s);
    if (v.error_estimate <= 1e-11) return v.value;
  } catch (const std::runtime_error&) {
  }
  return conical_integral(0.0, mu, std::acosh(y));
}

namespace {

double bessel_series(double nu, double x) {
  // (x/2)^nu / Gamma(nu+1) * sum (-x^2/4)^n / (n! (nu+1)_n)
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int n = 1; n < 500; ++n) {
    term *= -q / (n * (nu + n));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) && n > q) break;
  }
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  return std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0)) * sum;
}

double bessel_asymptotic(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 0.0, q = 0.0;
  double term = 1.0;  // a_k / x^k
  double last = kInfinity;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) term *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (k * 8.0 * x);
    const double mag = std::abs(term);
    if (mag > last && k > 2) break;  // asymptotic series starts to diverge
    last = mag;
    const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
    if (k % 2 == 0)
      p += sign * term;
    else
      q += sign * term;
    if (mag < 1e-17) break;
  }
  const double omega = x - (0.5 * nu + 0.25) * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(omega) - q * std::sin(omega));
}

double bessel_integral(double nu, double x) {
  // Schlaefli: (1/pi) int_0^pi cos(nu t - x sin t) dt
  //           - (sin(nu pi)/pi) int_0^inf exp(-x sinh t - nu t) dt
  QuadratureSpec spec;
  spec.abs_tol = 1e-13;
  spec.rel_tol = 1e-13;
  spec.max_subdivisions = 20000;
  // one panel per half period of cos(x sin t)
  const int panels = static_cast<int>(std::ceil(x));
  std::vector<double> cuts;
  for (int i = 0; i <= panels; ++i) cuts.push_back(kPi * i / panels);
  const double first =
      integrate_panels([&](double t) { return std::cos(nu * t - x * std::sin(t)); },
                       cuts, spec)
          .value /
      kPi;
  const double sin_nu_pi = std::sin(nu * kPi);
  if (sin_nu_pi == 0.0) return first;
  const double upper = std::asinh(60.0 / x) + 1.0;
  const double second =
      integrate([&](double t) { return std::exp(-x * std::sinh(t) - nu * t); },
                0.0, upper, spec)
          .value;
  return first - sin_nu_pi / kPi * second;
}

}  // namespace

double bessel_j(double nu, double x) {
  if (!(nu > -1.0)) throw std::domain_error("bessel_j needs nu > -1");
  if (!(x >= 0.0)) throw std::domain_error("bessel_j needs x >= 0");
  if (x <= 12.0) return bessel_series(nu, x);
  if (x >= 25.0 && x >= 2.0 * nu * nu) return bessel_asymptotic(nu, x);
  return bessel_integral(nu, x);
}

double spherical_bessel(double a, double x) {
  if (!(x >= 0.0)) throw std::domain_error("spherical_bessel needs x >= 0");
  if (a == -0.5) return std::cos(x);
  if (!(a > -1.0)) throw std::domain_error("spherical_bessel needs a > -1");
  if (x <= 12.0) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int n = 1; n < 500; ++n) {
      term *= -q / (n * (a + n));
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum) && n > q) break;
    }
    return sum;
  }
  return std::exp(std::lgamma(a + 1.0) + a * std::log(2.0 / x)) * bessel_j(a, x);
}

}  // namespace hyperdirichlet
