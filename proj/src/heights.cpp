#include "hilbert_et/heights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hilbert_et/errors.hpp"
#include "hilbert_et/quadrature.hpp"

namespace hilbert_et {
namespace {

constexpr double kPi = std::numbers::pi;

// log|P(e(theta))| - log sqrt|a0|
auto normalized_log(const ComplexPolynomial& p) {
  const double shift = 0.5 * std::log(std::abs(p.constant_term()));
  return [&p, shift](double theta) { return std::log(std::abs(evaluate_on_circle(p, theta))) - shift; };
}

// Root angles as quadrature breakpoints; a polynomial the root finder
// cannot resolve simply gets none.
std::vector<double> root_angles(const ComplexPolynomial& p) {
  try {
    return find_roots(p, 1e-6).angles();
  } catch (const SolverFailure&) {
    return {};
  }
}

}  // namespace

double height_h(const ComplexPolynomial& p, double tolerance) {
  if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
  const auto g = normalized_log(p);

  std::vector<double> breaks = root_angles(p);

  // Zero crossings of g, located on a grid and refined by bisection.
  const int m = std::max(512, 64 * p.degree());
  double t0 = 0.0, g0 = g(0.0);
  for (int j = 1; j <= m; ++j) {
    const double t1 = static_cast<double>(j) / m;
    const double g1 = g(t1);
    if (std::isfinite(g0) && std::isfinite(g1) && (g0 > 0.0) != (g1 > 0.0)) {
      double lo = t0, hi = t1;
      const bool lo_positive = g0 > 0.0;
      for (int it = 0; it < 60 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        ((g(mid) > 0.0) == lo_positive ? lo : hi) = mid;
      }
      breaks.push_back(0.5 * (lo + hi));
    }
    t0 = t1;
    g0 = g1;
  }

  const auto positive_part = [&g](double theta) {
    const double v = g(theta);
    return v > 0.0 ? v : 0.0;
  };
  quad::AdaptiveOptions opts;
  opts.abs_tol = tolerance;
  opts.rel_tol = 0.0;
  opts.max_intervals = 20000;
  return quad::gauss_kronrod(positive_part, 0.0, 1.0, breaks, opts).value;
}

double height_H(const ComplexPolynomial& p, int grid) {
  if (grid < 256) throw InvalidArgument("grid must be at least 256");
  const auto g = normalized_log(p);
  std::vector<double> v(grid);
  for (int j = 0; j < grid; ++j) v[j] = g(static_cast<double>(j) / grid);

  std::vector<int> peaks;
  for (int j = 0; j < grid; ++j) {
    const double left = v[(j + grid - 1) % grid], right = v[(j + 1) % grid];
    if (v[j] >= left && v[j] >= right) peaks.push_back(j);
  }
  std::sort(peaks.begin(), peaks.end(), [&v](int a, int b) { return v[a] > v[b]; });
  if (peaks.size() > 5) peaks.resize(5);

  double best = *std::max_element(v.begin(), v.end());
  const double h = 1.0 / grid;
  for (int j : peaks) {
    const double centre = j * h;
    best = std::max(best, quad::golden_max(g, centre - h, centre + h, 1e-13).value);
  }
  return best;
}

double height_logM(const RootSet& roots) {
  double s = 0.0;
  for (const auto& r : roots.roots) {
    if (!(r.modulus > 0.0)) throw InvalidArgument("root modulus must be positive");
    s += std::abs(std::log(r.modulus));
  }
  return s;
}

double jensen_integral(const RootSet& roots) {
  double s = 0.0;
  for (const auto& r : roots.roots) s += std::max(std::log(r.modulus), 0.0);
  return s;
}

HeightReport height_report(const ComplexPolynomial& p, double tolerance, int grid) {
  const RootSet roots = p.factored() ? *p.factored() : find_roots(p, 1e-10);
  HeightReport r;
  r.h = height_h(p, tolerance);
  r.H_log = height_H(p, grid);
  r.logM = height_logM(roots);
  r.jensen = jensen_integral(roots);
  return r;
}

double psi_fourier(long k) { return k == 0 ? 0.0 : -0.5 / std::abs(static_cast<double>(k)); }

double psi_fourier_quadrature(long k, double tolerance) {
  // psi and cos(2 pi k theta) are both symmetric about 1/2; the sine part vanishes.
  const double kk = static_cast<double>(k);
  const auto f = [kk](double theta) {
    return std::log(2.0 * std::sin(kPi * theta)) * std::cos(2.0 * kPi * kk * theta);
  };
  quad::TanhSinhOptions opts;
  opts.tol = tolerance;
  opts.max_level = 10;
  return 2.0 * quad::tanh_sinh(f, 0.0, 0.5, opts).value;
}

}  // namespace hilbert_et
