#include "hilbert_et/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>

#include "hilbert_et/errors.hpp"

namespace hilbert_et::quad {
namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208931474906, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel panel(const Integrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::array<double, 21> fv{};
  const double fc = f(c);
  double kron = fc * kWgk[10];
  double gauss = 0.0;
  for (int j = 0; j < 10; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    fv[2 * j] = f1;
    fv[2 * j + 1] = f2;
    kron += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  const double mean = 0.5 * kron;
  double resasc = kWgk[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j)
    resasc += kWgk[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
  kron *= h;
  gauss *= h;
  resasc *= std::abs(h);
  double err = std::abs(kron - gauss);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (!std::isfinite(kron)) err = std::numeric_limits<double>::infinity();
  return {a, b, kron, err};
}

}  // namespace

double kronrod21(const Integrand& f, double a, double b) { return panel(f, a, b).value; }

std::vector<double> make_cuts(double a, double b, std::span<const double> interior,
                              double min_gap) {
  std::vector<double> cuts{a, b};
  for (double x : interior)
    if (x > a && x < b) cuts.push_back(x);
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> out;
  for (double x : cuts)
    if (out.empty() || x - out.back() > min_gap) out.push_back(x);
  if (out.back() != b) out.back() = b;
  return out;
}

Result gauss_kronrod(const Integrand& f, double a, double b, std::span<const double> breakpoints,
                     const AdaptiveOptions& opts) {
  if (a == b) return {};
  const double sign = a < b ? 1.0 : -1.0;
  if (a > b) std::swap(a, b);
  const auto cuts = make_cuts(a, b, breakpoints);

  std::priority_queue<Panel> heap;
  std::vector<Panel> finished;  // panels too narrow to split further
  double total = 0.0, total_err = 0.0;
  int evals = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Panel p = panel(f, cuts[i], cuts[i + 1]);
    evals += 21;
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }

  auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
  int intervals = static_cast<int>(heap.size());
  while (total_err > target() && !heap.empty()) {
    if (intervals >= opts.max_intervals) break;
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        worst.b - worst.a < 1e-15 * std::max(1.0, std::abs(mid))) {
      finished.push_back(worst);
      continue;
    }
    Panel left = panel(f, worst.a, mid);
    Panel right = panel(f, mid, worst.b);
    evals += 42;
    ++intervals;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Recompute sums from scratch to shed accumulated cancellation.
  double value = 0.0, err = 0.0;
  Panel worst{a, b, 0.0, -1.0};
  auto absorb = [&](const Panel& p) {
    value += p.value;
    err += p.error;
    if (p.error > worst.error) worst = p;
  };
  for (const auto& p : finished) absorb(p);
  while (!heap.empty()) {
    absorb(heap.top());
    heap.pop();
  }
  if (!std::isfinite(value) || err > std::max(opts.abs_tol, opts.rel_tol * std::abs(value))) {
    std::ostringstream msg;
    msg << "adaptive quadrature did not converge on [" << a << ", " << b << "]: error estimate "
        << err << ", worst subinterval [" << worst.a << ", " << worst.b << "]";
    throw NumericFailure(msg.str(), worst.a, worst.b, err);
  }
  return {sign * value, err, evals};
}

Result tanh_sinh(const Integrand& f, double a, double b, const TanhSinhOptions& opts) {
  if (a == b) return {};
  const double c = 0.5 * (a + b);
  const double d = 0.5 * (b - a);
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  constexpr double kTMax = 3.6;
  int evals = 0;

  // Sum of w(t) f(x(t)) over t = j*h for the given j set, symmetric about 0.
  auto node_pair = [&](double t) {
    const double u = kHalfPi * std::sinh(t);
    const double ch = std::cosh(u);
    const double w = d * kHalfPi * std::cosh(t) / (ch * ch);
    // Distance from the endpoint, computed without cancellation.
    const double comp = d * 2.0 / (std::exp(2.0 * u) + 1.0);
    double s = 0.0;
    const double xr = b - comp;
    const double xl = a + comp;
    if (xr > a && xr < b) {
      const double v = f(xr);
      ++evals;
      if (std::isfinite(v)) s += v;
    }
    if (xl > a && xl < b) {
      const double v = f(xl);
      ++evals;
      if (std::isfinite(v)) s += v;
    }
    return w * s;
  };

  double h = 1.0;
  double sum = d * kHalfPi * f(c);
  ++evals;
  for (double t = h; t <= kTMax; t += h) sum += node_pair(t);
  double estimate = h * sum;
  double prev = estimate;
  double err = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= opts.max_level; ++level) {
    h *= 0.5;
    for (double t = h; t <= kTMax; t += 2.0 * h) sum += node_pair(t);
    estimate = h * sum;
    err = std::abs(estimate - prev);
    prev = estimate;
    if (level >= opts.min_level && opts.tol > 0.0 &&
        err <= opts.tol * std::max(1.0, std::abs(estimate)))
      break;
  }
  return {estimate, err, evals};
}

Result tanh_sinh_pieces(const Integrand& f, std::span<const double> cuts,
                        const TanhSinhOptions& opts) {
  Result total;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Result r = tanh_sinh(f, cuts[i], cuts[i + 1], opts);
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
  }
  return total;
}

Extremum golden_max(const Integrand& g, double a, double b, double x_tol) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double g1 = g(x1), g2 = g(x2);
  while (b - a > x_tol) {
    if (g1 < g2) {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + kInvPhi * (b - a);
      g2 = g(x2);
    } else {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - kInvPhi * (b - a);
      g1 = g(x1);
    }
  }
  return g1 > g2 ? Extremum{x1, g1} : Extremum{x2, g2};
}

namespace {

// Intercept of the interpolant through the samples [first, first + m).
double intercept(std::span<const double> eps, std::span<const double> values,
                 std::span<const double> powers, std::size_t first, double scale) {
  const std::size_t m = powers.size() + 1;
  std::vector<std::vector<double>> a(m, std::vector<double>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    const double e = eps[first + r] / scale;
    a[r][0] = 1.0;
    for (std::size_t c = 1; c < m; ++c) a[r][c] = std::pow(e, powers[c - 1]);
    a[r][m] = values[first + r];
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    if (a[col][col] == 0.0) throw NumericFailure("singular extrapolation system");
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return a[0][m] / a[0][0];
}

}  // namespace

Extrapolation extrapolate_to_zero(std::span<const double> eps, std::span<const double> values,
                                  std::span<const double> powers) {
  const std::size_t m = powers.size() + 1;
  if (eps.size() != values.size() || eps.size() < m + 1)
    throw InvalidArgument("extrapolation needs one more sample than model terms");
  const double scale = *std::max_element(eps.begin(), eps.end());
  const std::size_t n = eps.size();
  // samples are ordered by decreasing eps
  const double fine = intercept(eps, values, powers, n - m, scale);
  const double coarse = intercept(eps, values, powers, 0, scale);
  return {fine, std::abs(fine - coarse)};
}

}  // namespace hilbert_et::quad
