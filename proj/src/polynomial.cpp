#include "hilbert_et/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "hilbert_et/errors.hpp"

namespace hilbert_et {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

cplx unit(double theta) { return std::polar(1.0, kTwoPi * theta); }

struct Evaluation {
  cplx value;
  cplx ratio;  // P / P'
};

// Full coefficient list c_0..c_N with c_N = 1.
std::vector<cplx> monic(const std::vector<cplx>& a) {
  std::vector<cplx> c(a);
  c.emplace_back(1.0, 0.0);
  return c;
}

// P(z) and the Newton correction P/P'. For |z| > 1 the reversed polynomial
// R(w) = w^N P(1/w) is evaluated instead so that Horner stays bounded.
Evaluation newton_ratio(const std::vector<cplx>& c, cplx z) {
  const int n = static_cast<int>(c.size()) - 1;
  if (std::abs(z) <= 1.0) {
    cplx p = c[n], dp = 0.0;
    for (int k = n - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + c[k];
    }
    return {p, dp == 0.0 ? cplx(0.0) : p / dp};
  }
  const cplx w = 1.0 / z;
  cplx r = c[0], dr = 0.0;
  for (int k = 1; k <= n; ++k) {
    dr = dr * w + r;
    r = r * w + c[k];
  }
  // P(z) = z^N R(w), P/P' = z / (N - w R'(w)/R(w))
  const cplx value = std::pow(z, n) * r;
  if (r == 0.0) return {value, 0.0};
  const cplx denom = static_cast<double>(n) - w * dr / r;
  return {value, denom == 0.0 ? cplx(0.0) : z / denom};
}

double scale_of(const std::vector<cplx>& c, double r) {
  double s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * r + std::abs(*it);
  return s;
}

double backward_error(const std::vector<cplx>& c, cplx z) {
  const double scale = scale_of(c, std::abs(z));
  const cplx v = newton_ratio(c, z).value;
  return scale > 0.0 ? std::abs(v) / scale : std::abs(v);
}

// Newton iteration on P^(m-1), for which an m-fold root of P is simple.
cplx polish_multiple(const std::vector<cplx>& c, cplx z, int m) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<cplx> d(c.begin() + (m - 1), c.end());
  for (int j = 0; j < static_cast<int>(d.size()); ++j) {
    double f = 1.0;
    for (int q = j + 1; q <= j + m - 1; ++q) f *= q;
    d[j] *= f;
  }
  for (int it = 0; it < 30 && n - m + 1 >= 1; ++it) {
    cplx p = d.back(), dp = 0.0;
    for (int k = static_cast<int>(d.size()) - 2; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + d[k];
    }
    if (dp == 0.0) break;
    const cplx step = p / dp;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    const cplx next = z - step;
    if (backward_error(c, next) > backward_error(c, z) && it > 0) break;
    z = next;
    if (std::abs(step) <= 2.0 * kEps * std::abs(z)) break;
  }
  return z;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

double normalize_angle(double theta) {
  double t = theta - std::floor(theta);
  if (t >= 1.0) t = 0.0;
  return t;
}

cplx Root::value() const { return modulus * unit(angle); }

std::vector<double> RootSet::angles() const {
  std::vector<double> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.angle);
  return out;
}

std::vector<double> RootSet::moduli() const {
  std::vector<double> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.modulus);
  return out;
}

RootSet RootSet::from_polar(const std::vector<std::pair<double, double>>& polar) {
  if (polar.empty()) throw InvalidArgument("root set must be non-empty");
  RootSet set;
  for (const auto& [rho, theta] : polar) {
    if (!(rho > 0.0) || !std::isfinite(rho)) throw InvalidArgument("root modulus must be positive");
    if (!std::isfinite(theta)) throw InvalidArgument("root angle must be finite");
    set.roots.push_back({rho, normalize_angle(theta), 1});
  }
  return set;
}

ComplexPolynomial::ComplexPolynomial(std::vector<cplx> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw InvalidArgument("polynomial degree must be at least 1");
  for (const auto& a : coeffs_)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw InvalidArgument("coefficients must be finite");
  if (coeffs_.front() == 0.0) throw InvalidArgument("constant term must be nonzero");
}

ComplexPolynomial::ComplexPolynomial(std::vector<cplx> coefficients, RootSet roots)
    : ComplexPolynomial(std::move(coefficients)) {
  if (roots.degree() != degree()) throw InvalidArgument("root count does not match degree");
  roots_ = std::move(roots);
}

bool ComplexPolynomial::real_coefficients(double tol) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [tol](const cplx& a) { return std::abs(a.imag()) <= tol; });
}

cplx ComplexPolynomial::evaluate(cplx z) const {
  if (roots_) {
    cplx p = 1.0;
    for (const auto& r : roots_->roots) p *= z - r.value();
    return p;
  }
  cplx p = 1.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) p = p * z + *it;
  return p;
}

double ComplexPolynomial::absolute_scale(double r) const { return scale_of(monic(coeffs_), r); }

cplx evaluate_on_circle(const ComplexPolynomial& p, double theta) { return p.evaluate(unit(theta)); }

RootSet find_roots(const ComplexPolynomial& p, double tolerance, const RootFinderOptions& opts) {
  if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
  if (p.factored()) return *p.factored();

  const auto c = monic(p.coefficients());
  const int n = p.degree();

  // Fujiwara bound on the root moduli.
  double bound = 0.0;
  for (int k = 1; k <= n; ++k) bound = std::max(bound, std::pow(std::abs(c[n - k]), 1.0 / k));
  const double radius = std::max(1.0, 2.0 * bound);

  std::vector<cplx> z(n);
  for (int i = 0; i < n; ++i) z[i] = radius * unit((i + 0.25) / n);

  std::vector<bool> done(n, false);
  int iterations = 0;
  for (; iterations < opts.max_iterations; ++iterations) {
    bool all_done = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      const auto ev = newton_ratio(c, z[i]);
      if (ev.value == 0.0) {
        done[i] = true;
        continue;
      }
      cplx sum = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const cplx step = ev.ratio / (1.0 - ev.ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        z[i] *= cplx(1.0 + 1e-3, 1e-3);  // nudge off a coincidence
        all_done = false;
        continue;
      }
      z[i] -= step;
      if (std::abs(step) <= 4.0 * kEps * std::abs(z[i]) || backward_error(c, z[i]) <= 4.0 * kEps)
        done[i] = true;
      else
        all_done = false;
    }
    if (all_done) break;
  }

  // Cluster by overlapping inclusion discs.
  std::vector<double> disc(n);
  for (int i = 0; i < n; ++i) {
    const double r = std::abs(z[i]);
    const double noise = std::abs(newton_ratio(c, z[i]).value) + 4.0 * n * kEps * scale_of(c, r);
    double prod = 1.0;
    for (int j = 0; j < n; ++j)
      if (j != i) prod *= std::abs(z[i] - z[j]);
    disc[i] = prod > 0.0 ? n * noise / prod : std::numeric_limits<double>::infinity();
  }
  DisjointSets sets(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = std::abs(z[i] - z[j]);
      if (d <= disc[i] + disc[j] || d <= opts.merge_distance) sets.unite(i, j);
    }

  const bool real_input = p.real_coefficients();
  std::vector<double> residuals;
  RootSet out;
  std::vector<bool> emitted(n, false);
  for (int i = 0; i < n; ++i) {
    const int root = sets.find(i);
    if (emitted[root]) continue;
    emitted[root] = true;
    cplx centroid = 0.0;
    int m = 0;
    double spread = 0.0;
    for (int j = 0; j < n; ++j)
      if (sets.find(j) == root) {
        centroid += z[j];
        ++m;
      }
    centroid /= static_cast<double>(m);
    if (m > 1) centroid = polish_multiple(c, centroid, m);
    for (int j = 0; j < n; ++j)
      if (sets.find(j) == root) spread = std::max(spread, std::abs(z[j] - centroid) + disc[j]);
    if (real_input && std::abs(centroid.imag()) <= std::max(spread, 8.0 * kEps * std::abs(centroid)))
      centroid = cplx(centroid.real(), 0.0);
    const double residual = backward_error(c, centroid);
    residuals.push_back(residual);
    const double rho = std::abs(centroid);
    const double angle = normalize_angle(std::atan2(centroid.imag(), centroid.real()) / kTwoPi);
    for (int k = 0; k < m; ++k) out.roots.push_back({rho, angle, m});
  }

  const double worst = *std::max_element(residuals.begin(), residuals.end());
  if (!(worst < tolerance))
    throw SolverFailure(iterations >= opts.max_iterations ? "root finder hit the iteration limit"
                                                          : "root finder did not reach the requested residual",
                        residuals);
  std::sort(out.roots.begin(), out.roots.end(),
            [](const Root& a, const Root& b) { return a.angle < b.angle || (a.angle == b.angle && a.modulus < b.modulus); });
  return out;
}

RootSet schur_project(const RootSet& roots) {
  RootSet out = roots;
  for (auto& r : out.roots) r.modulus = 1.0;
  return out;
}

ComplexPolynomial expand_from_roots(const RootSet& roots) {
  if (roots.roots.empty()) throw InvalidArgument("root set must be non-empty");
  // c holds the coefficients of prod (z - alpha_j), ascending, with the leading 1.
  std::vector<cplx> c{1.0};
  for (const auto& r : roots.roots) {
    const cplx alpha = r.value();
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - alpha * c[k];
    c[0] = -alpha * c[0];
  }
  c.pop_back();
  return ComplexPolynomial(std::move(c), roots);
}

}  // namespace hilbert_et
