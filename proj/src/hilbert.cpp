#include "hilbert_et/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hilbert_et/errors.hpp"
#include "hilbert_et/parallel.hpp"
#include "hilbert_et/quadrature.hpp"
#include "hilbert_et/special.hpp"

namespace hilbert_et {
namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;

// Phi(u) = int_0^u log|v| dv
double phi_log(double u) { return u == 0.0 ? 0.0 : u * std::log(std::abs(u)) - u; }

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

// Exact transform of a polyline: (1/pi) int F'(t) log|x - t| dt plus the
// log terms of jumps at the two ends.
double polyline_line_transform(const std::vector<Knot>& k, double x) {
  const Knot& first = k.front();
  const Knot& last = k.back();
  if ((first.value != 0.0 && x == first.x) || (last.value != 0.0 && x == last.x))
    throw SingularPoint("transform is unbounded at a jump of the polyline", x);
  double s = 0.0;
  for (std::size_t i = 1; i < k.size(); ++i) {
    const double m = (k[i].value - k[i - 1].value) / (k[i].x - k[i - 1].x);
    if (m != 0.0) s += m * (phi_log(x - k[i - 1].x) - phi_log(x - k[i].x));
  }
  if (first.value != 0.0) s += first.value * std::log(std::abs(x - first.x));
  if (last.value != 0.0) s -= last.value * std::log(std::abs(x - last.x));
  return s / kPi;
}

double log_abs_sin(double u) {
  const double r = u - std::round(u);
  if (r == 0.0) throw SingularPoint("periodic transform is unbounded at a jump", u);
  return std::log(std::abs(std::sin(kPi * r)));
}

// Euler-Maclaurin tails sum_{k>K} k^-2 and k^-4.
double zeta2_tail(double K) {
  return 1.0 / K - 0.5 / (K * K) + 1.0 / (6.0 * K * K * K) - 1.0 / (30.0 * std::pow(K, 5));
}
double zeta4_tail(double K) {
  return 1.0 / (3.0 * K * K * K) - 0.5 / std::pow(K, 4) + 1.0 / (3.0 * std::pow(K, 5));
}

double nearest_breakpoint_distance(const CompactFunction& F, double x) {
  double d = std::numeric_limits<double>::infinity();
  for (double b : F.breakpoints()) {
    const double gap = std::abs(x - b);
    if (gap > 1e-12) d = std::min(d, gap);
  }
  return d;
}

}  // namespace

const char* to_string(Domain d) { return d == Domain::line ? "line" : "circle"; }

PeriodizedFunction::PeriodizedFunction(CompactFunction b, double d) : base(std::move(b)), delta(d) {
  if (!(delta > 0.0 && delta <= 1.0)) throw InvalidArgument("delta must lie in (0, 1]");
}

double PeriodizedFunction::operator()(double theta) const {
  const double r = theta - std::round(theta);
  if (std::abs(r) == 0.5) return (base(0.5 / delta) + base(-0.5 / delta)) / delta;
  return base(r / delta) / delta;
}

cplx fourier_transform_hat(const CompactFunction& F, double t, double tolerance) {
  if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
  const double w = 2.0 * kPi * t;
  const auto cuts = quad::make_cuts(-0.5, 0.5, F.breakpoints());
  quad::TanhSinhOptions opts;
  opts.tol = tolerance;
  opts.max_level = 12;
  const auto re = quad::tanh_sinh_pieces([&](double x) { return F(x) * std::cos(w * x); }, cuts, opts);
  const auto im = quad::tanh_sinh_pieces([&](double x) { return -F(x) * std::sin(w * x); }, cuts, opts);
  if (!std::isfinite(re.value) || !std::isfinite(im.value) ||
      re.error + im.error > 100.0 * tolerance * std::max(1.0, std::abs(re.value) + std::abs(im.value)))
    throw NumericFailure("Fourier quadrature did not converge", -0.5, 0.5, re.error + im.error);
  return {re.value, im.value};
}

double hilbert_line(const CompactFunction& F, double x) {
  struct Visitor {
    double x;
    const CompactFunction& F;
    double operator()(const forms::Triangle&) const { return polyline_line_transform(F.knots(), x); }
    double operator()(const forms::PiecewiseLinear& pl) const { return polyline_line_transform(pl.knots, x); }
    double operator()(const forms::MagicF&) const {
      if (std::abs(x) <= 0.5) return sgn(x);
      return 2.0 / kPi * std::asin(1.0 / (2.0 * x));
    }
    double operator()(const forms::MagicG&) const {
      const double a = std::abs(x);
      if (a == 0.5) throw SingularPoint("H(G) is unbounded at |x| = 1/2", x);
      if (a < 0.5) return -1.0;
      return -1.0 + 2.0 * a / std::sqrt(4.0 * x * x - 1.0);
    }
    double operator()(const forms::Chebyshev&) const {
      const double a = std::abs(x);
      if (a == 0.5) throw SingularPoint("transform of the Chebyshev weight is unbounded at |x| = 1/2", x);
      if (a < 0.5) return 0.0;
      return sgn(x) / std::sqrt(4.0 * x * x - 1.0);
    }
    double operator()(const forms::Mollified& m) const {
      const double eps = m.epsilon, s = 1.0 - eps;
      const CompactFunction& base = *m.base;
      const auto integrand = [&](double y) {
        return mollifier::phi(y / eps) / eps * hilbert_line(base, (x - y) / s) / s;
      };
      std::vector<double> interior;
      for (double b : base.breakpoints()) interior.push_back(x - s * b);
      const auto cuts = quad::make_cuts(-0.5 * eps, 0.5 * eps, interior);
      quad::TanhSinhOptions opts;
      opts.tol = 1e-12;
      return quad::tanh_sinh_pieces(integrand, cuts, opts).value;
    }
  };
  return std::visit(Visitor{x, F}, F.form());
}

std::vector<double> default_pv_schedule(const CompactFunction& F, double x) {
  double d = nearest_breakpoint_distance(F, x);
  if (!std::isfinite(d)) d = 0.5;
  std::vector<double> eps;
  double e = std::min(d, 1.0) / 8.0;
  for (int i = 0; i < 5; ++i, e *= 0.5) eps.push_back(e);
  return eps;
}

PvEstimate hilbert_line_pv_estimate(const CompactFunction& F, double x, std::span<const double> schedule, int depth) {
  if (schedule.size() < 3) throw InvalidArgument("epsilon schedule needs at least three entries");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0.0)) throw InvalidArgument("epsilon schedule must be positive");
    if (i > 0 && !(schedule[i] < schedule[i - 1])) throw InvalidArgument("epsilon schedule must decrease");
  }
  const double reach = std::abs(x) + 0.5;
  std::vector<double> interior;
  for (double b : F.breakpoints()) interior.push_back(std::abs(x - b));
  const auto integrand = [&F, x](double t) { return (F(x - t) - F(x + t)) / t; };
  quad::TanhSinhOptions opts;
  opts.tol = 0.0;
  opts.max_level = depth;

  std::vector<double> values;
  for (double eps : schedule) {
    double v = 0.0;
    if (eps < reach) {
      const auto cuts = quad::make_cuts(eps, reach, interior);
      v = quad::tanh_sinh_pieces(integrand, cuts, opts).value / kPi;
    }
    values.push_back(v);
  }
  static constexpr double kPowers[] = {1.0, 3.0, 5.0, 7.0};
  const std::size_t terms = std::min<std::size_t>(4, schedule.size() - 2);
  const auto ex = quad::extrapolate_to_zero(schedule, values, std::span<const double>(kPowers, terms));
  return {ex.value, ex.error};
}

double hilbert_line_pv_quadrature(const CompactFunction& F, double x, std::span<const double> schedule, int depth) {
  const auto ex = hilbert_line_pv_estimate(F, x, schedule, depth);
  if (!std::isfinite(ex.value) || ex.error > 1e-6 * std::max(1.0, std::abs(ex.value)))
    throw NumericFailure("principal-value extrapolation did not settle", schedule.back(), schedule.front(),
                         ex.error);
  return ex.value;
}

MultiplierSeries::MultiplierSeries(const PeriodizedFunction& pf, int K) {
  if (K < 1) throw InvalidArgument("series length must be positive");
  coeffs_.resize(K);
  for (int k = 1; k <= K; ++k) coeffs_[k - 1] = pf.base.fourier(pf.delta * k);
  double window = 0.0;
  for (int k = K / 2 + 1; k <= K; ++k) window = std::max(window, std::abs(coeffs_[k - 1]));
  tail_ = 2.0 * K * window;
}

double MultiplierSeries::operator()(double theta) const {
  const double r = theta - std::floor(theta);
  const cplx step = std::polar(1.0, 2.0 * kPi * r);
  cplx w;
  double sum = 0.0;
  const int K = this->K();
  for (int k = 1; k <= K; ++k) {
    if ((k - 1) % 256 == 0) {
      const double phase = static_cast<double>(k) * r;
      w = std::polar(1.0, 2.0 * kPi * (phase - std::floor(phase)));
    }
    sum += (coeffs_[k - 1] * w).imag();
    w *= step;
  }
  return 2.0 * sum;
}

PeriodicValue hilbert_periodic(const PeriodizedFunction& pf, double theta, int K, double tail_tolerance) {
  if (K < 64) throw InvalidArgument("K must be at least 64");
  const MultiplierSeries series(pf, K);
  PeriodicValue v;
  v.value = series(theta);
  v.tail_bound = series.tail_bound();
  v.truncation_warning = v.tail_bound > tail_tolerance;
  v.K = K;
  return v;
}

double hilbert_periodic_exact(const PeriodizedFunction& pf, double theta) {
  const auto knots = pf.base.knots();
  if (knots.empty()) throw InvalidArgument("exact periodic transform needs a polyline");
  const double d = pf.delta;
  double s = 0.0;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const double a = d * knots[i - 1].x, b = d * knots[i].x;
    const double m = (knots[i].value - knots[i - 1].value) / d / (b - a);
    if (m != 0.0) s += m * (special::log_sine_integral(theta - a) - special::log_sine_integral(theta - b));
  }
  if (knots.front().value != 0.0) s += knots.front().value / d * log_abs_sin(theta - d * knots.front().x);
  if (knots.back().value != 0.0) s -= knots.back().value / d * log_abs_sin(theta - d * knots.back().x);
  return s / kPi;
}

CircleTransform::CircleTransform(const PeriodizedFunction& pf, int K) : pf_(pf) {
  if (K < 64) throw InvalidArgument("K must be at least 64");
  if (!pf.base.piecewise_linear()) {
    const int terms = static_cast<int>(std::ceil(K / pf.delta - 1e-9));
    series_ = std::make_shared<const MultiplierSeries>(pf, terms);
  }
}

double CircleTransform::operator()(double theta) const {
  return series_ ? (*series_)(theta) : hilbert_periodic_exact(pf_, theta);
}

double lemma4_rhs(const CompactFunction& F, double delta, double theta, int K) {
  if (!(delta > 0.0 && delta <= 1.0)) throw InvalidArgument("delta must lie in (0, 1]");
  if (!(theta > -0.5 && theta < 0.5)) throw InvalidArgument("theta must lie in (-1/2, 1/2)");
  if (K < 16) throw InvalidArgument("K must be at least 16");

  const double t2 = theta * theta;
  const auto kernel_sum = [=](double beta) {
    const double a = delta * beta;
    const double a2 = a * a;
    const double dm = (theta - a) * (theta - a), dp = (theta + a) * (theta + a);
    double s = 0.0;
    for (int k = K; k >= 1; --k) {
      const double k2 = static_cast<double>(k) * k;
      s += 4.0 * theta * (t2 - a2 - k2) / ((dm - k2) * (dp - k2));
    }
    return s;
  };
  std::vector<double> cuts;
  for (double b : F.breakpoints())
    if (b > 0.0 && b < 0.5) cuts.push_back(b);
  quad::AdaptiveOptions opts;
  opts.abs_tol = 1e-13;
  opts.rel_tol = 1e-12;
  const double body =
      quad::gauss_kronrod([&](double beta) { return F(beta) * kernel_sum(beta); }, 0.0, 0.5, cuts, opts).value;
  const double m0 = quad::gauss_kronrod([&](double beta) { return F(beta); }, 0.0, 0.5, cuts, opts).value;
  const double m2 =
      delta * delta *
      quad::gauss_kronrod([&](double beta) { return F(beta) * beta * beta; }, 0.0, 0.5, cuts, opts).value;
  const double tail = -4.0 * theta * (m0 * zeta2_tail(K) + (t2 * m0 + 3.0 * m2) * zeta4_tail(K));
  return hilbert_line(F, theta / delta) + delta / kPi * (body + tail);
}

double cot_expansion_check(double alpha, long K) {
  if (!std::isfinite(alpha) || alpha == std::round(alpha)) throw InvalidArgument("alpha must not be an integer");
  if (K < 1) throw InvalidArgument("K must be positive");
  double s = 0.0;
  for (long k = K; k >= 1; --k) {
    const double kk = static_cast<double>(k);
    s += 2.0 * alpha / (alpha * alpha - kk * kk);
  }
  return (1.0 / alpha + s) / kPi;
}

TransformGrid sup_search(Domain domain, const std::function<double(double)>& transform, std::vector<double> points,
                         double x_tol) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<double> values(points.size(), std::numeric_limits<double>::quiet_NaN());
  parallel_for(points.size(), [&](std::size_t i) {
    try {
      values[i] = transform(points[i]);
    } catch (const SingularPoint&) {
    }
  });

  TransformGrid grid;
  grid.domain = domain;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (std::isfinite(values[i])) grid.samples.emplace_back(points[i], values[i]);
  if (grid.samples.empty()) throw NumericFailure("transform has no finite samples");

  const auto& smp = grid.samples;
  const std::size_t n = smp.size();
  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = std::abs(smp[i].second);
    const bool left = i == 0 || v >= std::abs(smp[i - 1].second);
    const bool right = i + 1 == n || v >= std::abs(smp[i + 1].second);
    if (left && right) peaks.push_back(i);
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(smp[a].second) > std::abs(smp[b].second); });
  if (peaks.size() > 5) peaks.resize(5);

  struct Candidate {
    double x, value;
  };
  std::vector<Candidate> cands;
  for (const auto& s : smp) cands.push_back({s.first, s.second});
  const auto magnitude = [&](double x) {
    try {
      const double v = transform(x);
      return std::isfinite(v) ? std::abs(v) : 0.0;
    } catch (const SingularPoint&) {
      return 0.0;
    }
  };
  std::vector<Candidate> refined(peaks.size(), Candidate{0.0, 0.0});
  parallel_for(peaks.size(), [&](std::size_t p) {
    const std::size_t i = peaks[p];
    const double lo = smp[i == 0 ? 0 : i - 1].first;
    const double hi = smp[i + 1 == n ? n - 1 : i + 1].first;
    const auto ext = quad::golden_max(magnitude, lo, hi, x_tol);
    double v = 0.0;
    try {
      v = transform(ext.x);
    } catch (const SingularPoint&) {
    }
    refined[p] = {ext.x, v};
  });
  for (const auto& c : refined) cands.push_back(c);

  const Candidate* best = &cands.front();
  for (const auto& c : cands) {
    const double a = std::abs(c.value), b = std::abs(best->value);
    if (a > b + 1e-12) {
      best = &c;
    } else if (std::abs(a - b) <= 1e-12) {
      // prefer the positive maximum, then the positive abscissa
      const bool better = (c.value > 0.0 && best->value <= 0.0) ||
                          ((c.value > 0.0) == (best->value > 0.0) && c.x > 0.0 && best->x <= 0.0) ||
                          ((c.value > 0.0) == (best->value > 0.0) && (c.x > 0.0) == (best->x > 0.0) && a > b);
      if (better) best = &c;
    }
  }
  grid.sup_norm = std::abs(best->value);
  grid.argmax = best->x;
  return grid;
}

TransformGrid line_transform_grid(const CompactFunction& F, int M, double lo, double hi) {
  if (M < 64) throw InvalidArgument("grid must have at least 64 points");
  if (!(hi > lo)) throw InvalidArgument("empty grid range");
  std::vector<double> pts(M);
  for (int j = 0; j < M; ++j) pts[j] = lo + (hi - lo) * j / (M - 1);
  return sup_search(Domain::line, [&F](double x) { return hilbert_line(F, x); }, std::move(pts));
}

TransformGrid circle_transform_grid(const CircleTransform& transform, int M) {
  if (M < 64) throw InvalidArgument("grid must have at least 64 points");
  const double delta = transform.function().delta;
  std::vector<double> pts;
  for (int j = 0; j < M; ++j) pts.push_back(-0.5 + static_cast<double>(j) / M);
  if (delta < 0.25)
    for (int j = 0; j < M; ++j) pts.push_back(-2.0 * delta + 4.0 * delta * j / (M - 1));
  auto grid = sup_search(Domain::circle, [&transform](double t) { return transform(t); }, std::move(pts));
  grid.truncation_K = transform.truncation_K();
  return grid;
}

}  // namespace hilbert_et
