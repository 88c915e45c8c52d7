#include "hyperdirichlet/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

namespace hyperdirichlet {

namespace {

// Kronrod abscissae and weights for the 15-point rule; the even-indexed
// abscissae (1, 3, 5) together with the centre are the 7-point Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  double error = 0.0;
  int depth = 0;
};

struct PanelOrder {
  bool operator()(const Panel& a, const Panel& b) const {
    return a.error < b.error;
  }
};

// QUADPACK qk15.
Panel gauss_kronrod(const RealFunction& f, double lo, double hi, int depth) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(centre - dx);
    fv2[j] = f(centre + dx);
    const double sum = fv1[j] + fv2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double mean = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  const double scale = std::abs(half);
  double err = std::abs((resk - resg) * half);
  resasc *= scale;
  resabs *= scale;
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
    err = std::max(50.0 * kEps * resabs, err);
  if (!std::isfinite(resk)) err = kInfinity;
  return Panel{lo, hi, resk * half, err, depth};
}

IntegralResult adaptive(const RealFunction& f, std::span<const double> cuts,
                        const QuadratureSpec& spec) {
  spec.validate();
  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
  std::vector<Panel> frozen;
  double total = 0.0, total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] == cuts[i]) continue;
    Panel p = gauss_kronrod(f, cuts[i], cuts[i + 1], 0);
    total += p.value;
    total_err += p.error;
    queue.push(p);
  }
  int subdivisions = 0;
  auto finish = [&]() {
    std::vector<Panel> all = std::move(frozen);
    while (!queue.empty()) {
      all.push_back(queue.top());
      queue.pop();
    }
    std::sort(all.begin(), all.end(),
              [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    IntegralResult r;
    for (const Panel& p : all) {
      r.value += p.value;
      r.error_estimate += p.error;
    }
    r.subdivisions_used = subdivisions;
    return r;
  };
  while (!queue.empty() && total_err > spec.target(total)) {
    if (subdivisions >= spec.max_subdivisions) {
      IntegralResult best = finish();
      if (!std::isfinite(best.value))
        throw QuadratureError("integrand is not finite", best);
      throw QuadratureError("integration did not converge within " +
                                std::to_string(spec.max_subdivisions) +
                                " subdivisions",
                            best);
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    // Resolution exhausted: the panel cannot be split meaningfully.
    if (worst.depth > 60 || mid <= worst.lo || mid >= worst.hi ||
        std::abs(worst.hi - worst.lo) <
            8 * kEps * std::max(std::abs(worst.lo), std::abs(worst.hi))) {
      frozen.push_back(worst);
      if (queue.empty()) break;
      continue;
    }
    Panel left = gauss_kronrod(f, worst.lo, mid, worst.depth + 1);
    Panel right = gauss_kronrod(f, mid, worst.hi, worst.depth + 1);
    ++subdivisions;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  IntegralResult r = finish();
  if (!std::isfinite(r.value))
    throw QuadratureError("integrand is not finite", r);
  if (r.error_estimate > spec.target(r.value) * 10.0)
    throw QuadratureError("integration stalled at round-off level", r);
  return r;
}

// Wynn's epsilon algorithm applied to the partial sums seen so far; returns
// the most recent even-column estimate.
class WynnEpsilon {
 public:
  double push(double s) {
    std::vector<double> next{s};
    for (std::size_t k = 0; k < prev_.size(); ++k) {
      const double diff = next[k] - prev_[k];
      const double before = k >= 1 ? prev_[k - 1] : 0.0;
      if (diff == 0.0) break;
      next.push_back(before + 1.0 / diff);
    }
    prev_ = next;
    // Even columns (0, 2, 4, ...) hold estimates of the limit.
    std::size_t col = (next.size() - 1) & ~std::size_t{1};
    return next[col];
  }

 private:
  std::vector<double> prev_;
};

IntegralResult integrate_oscillating_tail(const RealFunction& f, double lo,
                                          const QuadratureSpec& spec) {
  // Panels between consecutive sign changes of f.
  QuadratureSpec panel_spec = spec;
  panel_spec.abs_tol = spec.abs_tol / 100.0;
  double step = 0.25;
  double start = lo;
  double a = lo;
  double fa = f(a);
  double partial = 0.0, err = 0.0;
  WynnEpsilon wynn;
  double last = kInfinity, prev_last = kInfinity;
  int subdivisions = 0;
  const int max_panels = std::max(50, spec.max_subdivisions);
  for (int panel = 0; panel < max_panels; ++panel) {
    // Locate the next sign change by stepping, then bisection.
    double b = a, fb = fa;
    int guard = 0;
    do {
      a = b;
      fa = fb;
      b = a + step;
      fb = f(b);
      if (++guard > 100000)
        throw QuadratureError("no sign change found on infinite range",
                              IntegralResult{partial, err, subdivisions});
    } while (fa * fb > 0.0 || fa == 0.0);
    double left = a, right = b;
    for (int it = 0; it < 200 && right - left > 4 * kEps * std::abs(right);
         ++it) {
      const double mid = 0.5 * (left + right);
      const double fm = f(mid);
      if (fm == 0.0) {
        left = right = mid;
        break;
      }
      if ((fm > 0.0) == (fa > 0.0))
        left = mid;
      else
        right = mid;
    }
    const double zero = 0.5 * (left + right);
    if (panel > 0) step = std::max((zero - start) / 4.0, 1e-6);
    const double cuts[2] = {start, zero};
    IntegralResult piece = adaptive(f, cuts, panel_spec);
    subdivisions += piece.subdivisions_used;
    partial += piece.value;
    err += piece.error_estimate;
    start = zero;
    // Resume the search on the far side of the zero.
    a = std::max(right, std::nextafter(zero, kInfinity));
    fa = f(a);
    const double estimate = wynn.push(partial);
    if (panel >= 8 && std::abs(estimate - last) <= spec.target(estimate) &&
        std::abs(last - prev_last) <= spec.target(estimate)) {
      return IntegralResult{estimate,
                            std::abs(estimate - last) + err,
                            subdivisions};
    }
    prev_last = last;
    last = estimate;
  }
  throw QuadratureError("oscillatory tail extrapolation did not converge",
                        IntegralResult{last, std::abs(last - prev_last),
                                       subdivisions});
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw std::invalid_argument("quadrature tolerances must be positive");
  if (max_subdivisions < 1)
    throw std::invalid_argument("max_subdivisions must be at least 1");
}

double QuadratureSpec::target(double value) const {
  return std::max(abs_tol, rel_tol * std::abs(value));
}

IntegralResult integrate(const RealFunction& f, double lo, double hi,
                         const QuadratureSpec& spec) {
  spec.validate();
  if (std::isnan(lo) || std::isnan(hi))
    throw std::invalid_argument("integration limits must not be NaN");
  if (lo == hi) return {};
  if (hi < lo) {
    IntegralResult r = integrate(f, hi, lo, spec);
    r.value = -r.value;
    return r;
  }
  if (std::isinf(lo)) throw std::invalid_argument("lower limit must be finite");
  if (std::isinf(hi)) {
    if (spec.osc_split) return integrate_oscillating_tail(f, lo, spec);
    RealFunction mapped = [&](double t) {
      const double x = lo + (1.0 - t) / t;
      return f(x) / (t * t);
    };
    const double cuts[2] = {0.0, 1.0};
    return adaptive(mapped, cuts, spec);
  }
  const double cuts[2] = {lo, hi};
  return adaptive(f, cuts, spec);
}

IntegralResult integrate_panels(const RealFunction& f,
                                std::span<const double> breakpoints,
                                const QuadratureSpec& spec) {
  if (breakpoints.size() < 2)
    throw std::invalid_argument("integrate_panels needs at least two points");
  if (!std::is_sorted(breakpoints.begin(), breakpoints.end()))
    throw std::invalid_argument("breakpoints must be sorted");
  return adaptive(f, breakpoints, spec);
}

std::vector<double> oscillation_breakpoints(double lo, double hi,
                                            double frequency, double phase) {
  std::vector<double> cuts{lo};
  if (frequency > 0.0 && hi > lo) {
    const double pi = std::numbers::pi;
    double k = std::floor((frequency * lo + phase) / pi) + 1.0;
    for (;; k += 1.0) {
      const double z = (k * pi - phase) / frequency;
      if (z >= hi) break;
      if (z > cuts.back()) cuts.push_back(z);
    }
  }
  cuts.push_back(hi);
  return cuts;
}

IntegralResult integrate_oscillatory(const RealFunction& envelope,
                                     double frequency, double phase, double lo,
                                     double hi, const QuadratureSpec& spec) {
  if (frequency < 0.0)
    throw std::invalid_argument("oscillator frequency must be non-negative");
  RealFunction integrand = [&](double u) {
    return envelope(u) * std::sin(frequency * u + phase);
  };
  if (frequency == 0.0) return integrate(integrand, lo, hi, spec);
  if (hi < lo) {
    IntegralResult r =
        integrate_oscillatory(envelope, frequency, phase, hi, lo, spec);
    r.value = -r.value;
    return r;
  }
  std::vector<double> cuts = oscillation_breakpoints(lo, hi, frequency, phase);
  return integrate_panels(integrand, cuts, spec);
}

double tail_truncation_point(double lo, const RealFunction& tail_bound,
                             double abs_tol) {
  double width = 1.0;
  for (int i = 0; i < 200; ++i, width *= 2.0) {
    const double y = lo + width;
    if (tail_bound(y) < abs_tol / 10.0) return y;
  }
  throw std::domain_error(
      "declared decay envelope never falls below the tolerance");
}

IntegralResult integrate_with_tail(const RealFunction& f, double lo,
                                   const RealFunction& tail_bound,
                                   const QuadratureSpec& spec, double splits) {
  spec.validate();
  const double y = tail_truncation_point(lo, tail_bound, spec.abs_tol);
  std::vector<double> cuts{lo};
  if (splits > 0.0)
    for (double x = lo + splits; x < y; x += splits) cuts.push_back(x);
  cuts.push_back(y);
  IntegralResult r = integrate_panels(f, cuts, spec);
  r.error_estimate += tail_bound(y);
  return r;
}

std::vector<double> derivatives_taylor(const JetFunction& f, double x,
                                       int order) {
  if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
  if (order > Jet::kMaxOrder)
    throw std::out_of_range("derivative order " + std::to_string(order) +
                            " exceeds the supported jet depth " +
                            std::to_string(Jet::kMaxOrder));
  // A little headroom absorbs orders lost to removable singularities.
  const int working = std::min(order + 4, Jet::kMaxOrder);
  Jet y = f(Jet::variable(x, working));
  if (y.order() < order)
    throw std::out_of_range("jet depth exhausted by removable singularities");
  std::vector<double> out(order + 1);
  for (int i = 0; i <= order; ++i) out[i] = y.derivative(i);
  return out;
}

Extrapolation extrapolate_limit(
    std::span<const std::pair<double, double>> samples) {
  if (samples.size() < 3)
    throw std::invalid_argument("extrapolation needs at least three samples");
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (!(samples[i].first > samples[i - 1].first))
      throw std::invalid_argument(
          "extrapolation parameters must be strictly increasing");
  for (const auto& s : samples)
    if (!(s.first > 0.0))
      throw std::invalid_argument("extrapolation parameters must be positive");
  // Normal equations for value = L + c * (1/p).
  double n = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
  for (const auto& [p, v] : samples) {
    const double x = 1.0 / p;
    n += 1;
    sx += x;
    sxx += x * x;
    sy += v;
    sxy += x * v;
  }
  const double det = n * sxx - sx * sx;
  Extrapolation e;
  if (det == 0.0) {
    e.limit = sy / n;
  } else {
    const double c = (n * sxy - sx * sy) / det;
    e.limit = (sy - c * sx) / n;
    double ss = 0.0;
    for (const auto& [p, v] : samples) {
      const double r = v - (e.limit + c / p);
      ss += r * r;
    }
    e.residual = std::sqrt(ss / n);
  }
  bool constant = true;
  for (const auto& s : samples) constant = constant && s.second == samples[0].second;
  if (constant) e = {samples[0].second, 0.0};
  return e;
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre rule needs n >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace hyperdirichlet
