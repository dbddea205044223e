#include "hilbert_et/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "hilbert_et/constants.hpp"
#include "hilbert_et/errors.hpp"
#include "hilbert_et/parallel.hpp"
#include "hilbert_et/quadrature.hpp"

namespace hilbert_et {
namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;

void require_class_A(const CompactFunction& F) {
  if (!F.class_A()) throw InvalidArgument(F.name() + " is not in class A");
}

double unit_mass(const CompactFunction& F) {
  const double m = F.l1_norm();
  if (!(m > 0.0) || !std::isfinite(m)) throw InvalidArgument(F.name() + " has no positive finite L1 norm");
  return m;
}

Dichotomy classify(double line, double circle) {
  if (std::abs(line - circle) < kDichotomyTie) return Dichotomy::tie;
  return line > circle ? Dichotomy::line_dominant : Dichotomy::circle_dominant;
}

double circle_norm(const CompactFunction& F, double delta, int grid, int K, double* argmax, int* terms) {
  const CircleTransform ct(PeriodizedFunction(F, delta), K);
  const auto g = circle_transform_grid(ct, grid);
  if (argmax) *argmax = g.argmax;
  if (terms) *terms = g.truncation_K;
  return g.sup_norm;
}

// Real series 2 Re sum_k c_k e(k theta), rotation re-anchored every 256 terms.
double real_series(const std::vector<cplx>& c, double theta) {
  const double r = theta - std::floor(theta);
  const cplx step = std::polar(1.0, 2.0 * kPi * r);
  cplx w;
  double sum = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t k = i + 1;
    if (i % 256 == 0) {
      const double phase = static_cast<double>(k) * r;
      w = std::polar(1.0, 2.0 * kPi * (phase - std::floor(phase)));
    }
    sum += (c[i] * w).real();
    w *= step;
  }
  return 2.0 * sum;
}

}  // namespace

const char* to_string(Dichotomy d) {
  switch (d) {
    case Dichotomy::line_dominant: return "line-dominant";
    case Dichotomy::circle_dominant: return "circle-dominant";
    case Dichotomy::tie: return "tie-within-tolerance";
  }
  return "?";
}

ExtremalReport c_functional(const CompactFunction& F, int grid, int K) {
  require_class_A(F);
  ExtremalReport r;
  r.function = F.name();
  r.mass = unit_mass(F);
  const auto line = line_transform_grid(F, grid);
  r.norm_line = line.sup_norm / r.mass;
  r.argmax_line = line.argmax;
  r.norm_circle = circle_norm(F, 1.0, grid, K, &r.argmax_circle, &r.truncation_K) / r.mass;
  r.c_of_F = std::max(r.norm_line, r.norm_circle);
  r.dichotomy = classify(r.norm_line, r.norm_circle);
  r.passes_threshold = r.c_of_F <= standard_constants().c_threshold;
  r.dichotomy_consistent = !(F.radial_decreasing() && r.dichotomy == Dichotomy::circle_dominant);
  return r;
}

std::vector<double> default_sweep_deltas() {
  std::vector<double> d{0.01};
  for (int i = 1; i <= 20; ++i) d.push_back(0.05 * i);
  d.back() = 1.0;
  return d;
}

DeltaSweep delta_sweep(const CompactFunction& F, const std::vector<double>& deltas, int grid, int K) {
  return delta_sweep(F, c_functional(F, grid, K), deltas, grid, K);
}

DeltaSweep delta_sweep(const CompactFunction& F, const ExtremalReport& report, const std::vector<double>& deltas,
                       int grid, int K) {
  require_class_A(F);
  if (deltas.empty()) throw InvalidArgument("delta list is empty");
  for (double d : deltas)
    if (!(d > 0.0 && d <= 1.0)) throw InvalidArgument("deltas must lie in (0, 1]");

  DeltaSweep s;
  s.deltas = deltas;
  s.endpoint_line = report.norm_line;
  s.endpoint_circle = report.norm_circle;
  s.predicted = report.dichotomy;
  const double mass = report.mass;
  for (double d : deltas) {
    const double v = d == 1.0 ? report.norm_circle : d * circle_norm(F, d, grid, K, nullptr, nullptr) / mass;
    s.values.push_back(v);
    if (v > s.sup) {
      s.sup = v;
      s.sup_delta = d;
    }
  }
  for (double d : {0.01, 0.005}) {
    const CircleTransform ct(PeriodizedFunction(F, d), K);
    s.limit_probes.emplace_back(d, d * ct(d * report.argmax_line) / mass);
  }
  return s;
}

double g_delta_bound(const CompactFunction& F, double delta, const CircleInterval& interval, int K, int grid) {
  require_class_A(F);
  if (!(delta > 0.0 && delta <= 1.0)) throw InvalidArgument("delta must lie in (0, 1]");
  if (!(interval.length >= 0.0) || !std::isfinite(interval.start)) throw InvalidArgument("bad interval");
  if (K < 64 || grid < 64) throw InvalidArgument("K and grid must be at least 64");
  if (interval.length + delta >= 1.0) return 0.0;

  const double alpha = interval.start - delta / 2.0;
  const double beta = interval.start + interval.length + delta / 2.0;
  // 2k g_hat(k) = F_hat(delta k) (e(-k alpha) - e(-k beta)) / (pi i)
  const int terms = static_cast<int>(std::ceil(K / delta - 1e-9));
  std::vector<cplx> c(terms);
  for (int k = 1; k <= terms; ++k) {
    const double a = k * alpha - std::floor(k * alpha), b = k * beta - std::floor(k * beta);
    const cplx chi = std::polar(1.0, -2.0 * kPi * a) - std::polar(1.0, -2.0 * kPi * b);
    c[k - 1] = F.fourier(delta * k) * chi / cplx(0.0, kPi);
  }
  std::vector<double> pts;
  for (int j = 0; j < grid; ++j) pts.push_back(-0.5 + static_cast<double>(j) / grid);
  return sup_search(Domain::circle, [&c](double t) { return real_series(c, t); }, std::move(pts)).sup_norm;
}

OptimalDelta optimal_delta(double c, long N, double h) {
  if (N < 1) throw InvalidArgument("N must be at least 1");
  if (!(h >= 0.0) || !(c > 0.0)) throw InvalidArgument("need h >= 0 and c > 0");
  OptimalDelta o;
  if (h == 0.0) {
    o.delta = o.unclamped = std::numeric_limits<double>::epsilon();
    o.degenerate = true;
    return o;
  }
  o.unclamped = std::sqrt(4.0 * c * h / (kPi * static_cast<double>(N)));
  o.clamped = o.unclamped > 1.0 + 1e-12;
  o.delta = std::min(o.unclamped, 1.0);
  return o;
}

OptimalDelta optimal_delta(const CompactFunction& F, long N, double h) {
  return optimal_delta(c_functional(F).c_of_F, N, h);
}

double duality_lower_bound(const CompactFunction& F, double tolerance) {
  if (!F.nonnegative() || !(F.mass() > 0.0)) throw InvalidArgument(F.name() + " is not in class A*");
  const double mass = unit_mass(F);
  constexpr double cut = 0.5 - 1e-4;
  // H(F)(x) - H(F)(-x) folds the negative half onto [0, 1/2].
  auto folded = [&F](double x) {
    if (x == 0.0) return 0.0;
    return hilbert_line(F, x) - hilbert_line(F, -x);
  };
  std::vector<double> cuts;
  for (double b : F.breakpoints()) cuts.push_back(std::abs(b));
  for (double b : F.line_singularities()) cuts.push_back(std::abs(b));

  quad::AdaptiveOptions opts;
  opts.abs_tol = tolerance;
  opts.rel_tol = 0.0;
  opts.max_intervals = 20000;
  const auto head = quad::gauss_kronrod(
      [&](double x) { return folded(x) * 2.0 * x / std::sqrt((1.0 - 2.0 * x) * (1.0 + 2.0 * x)); }, 0.0, cut, cuts,
      opts);

  const double u_cut = std::sqrt((1.0 - 2.0 * cut) * (1.0 + 2.0 * cut));
  quad::TanhSinhOptions ts;
  ts.tol = tolerance;
  ts.max_level = 12;
  const auto tail = quad::tanh_sinh([&](double u) { return 0.5 * folded(0.5 * std::sqrt((1.0 - u) * (1.0 + u))); },
                                    0.0, u_cut, ts);
  if (!std::isfinite(head.value + tail.value) || tail.error > 1e3 * tolerance)
    throw NumericFailure("pairing quadrature did not converge", cut, 0.5, tail.error);
  return (head.value + tail.value) / mass;
}

double tricomi_annihilation_check(int grid, int depth) {
  if (grid < 101) throw InvalidArgument("grid must have at least 101 points");
  if (depth < 1) throw InvalidArgument("depth must be positive");
  const auto w = CompactFunction::chebyshev();
  std::vector<double> values(grid);
  parallel_for(grid, [&](std::size_t j) {
    const double x = -0.45 + 0.9 * static_cast<double>(j) / (grid - 1);
    if (std::abs(x) < 1e-14) return;
    const auto sched = default_pv_schedule(w, x);
    values[j] = std::abs(hilbert_line_pv_estimate(w, x, sched, depth).value);
  });
  return *std::max_element(values.begin(), values.end());
}

double case2_kernel(double t, double b, double x) {
  const double x2 = x * x;
  return 4.0 * t * (t * t - b * b - x2) / (((t - b) * (t - b) - x2) * ((t + b) * (t + b) - x2));
}

double case2_max_slope(int samples) {
  if (samples < 2) throw InvalidArgument("need at least two samples");
  double worst = -std::numeric_limits<double>::infinity();
  constexpr double h = 1e-5;
  for (int i = 1; i < samples; ++i) {
    const double t = -0.5 * i / samples;
    for (int j = 0; j <= samples; ++j) {
      const double b = 0.5 * j / samples;
      for (int m = 0; m <= 4 * samples; ++m) {
        const double x = 1.0 + std::expm1(std::log(50.0) * m / (4.0 * samples));
        const double slope = (case2_kernel(t, b, x + h) - case2_kernel(t, b, std::max(1.0, x - h))) /
                             (x + h - std::max(1.0, x - h));
        worst = std::max(worst, slope);
      }
    }
  }
  return worst;
}

}  // namespace hilbert_et
