#include "hilbert_et/compact_function.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "hilbert_et/errors.hpp"
#include "hilbert_et/quadrature.hpp"
#include "hilbert_et/special.hpp"

namespace hilbert_et {
namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double lerp_knots(const std::vector<Knot>& k, double x) {
  if (x < k.front().x || x > k.back().x) return 0.0;
  const auto it = std::upper_bound(k.begin(), k.end(), x, [](double v, const Knot& n) { return v < n.x; });
  if (it == k.end()) return k.back().value;
  if (it == k.begin()) return k.front().value;
  const Knot& b = *it;
  const Knot& a = *(it - 1);
  const double w = (x - a.x) / (b.x - a.x);
  return a.value + w * (b.value - a.value);
}

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end(), [](double a, double b) { return std::abs(a - b) < 1e-15; }), v.end());
  return v;
}

double bessel_j(int order, double x) {
  const double v = std::cyl_bessel_j(static_cast<double>(order), std::abs(x));
  return (order % 2 == 1 && x < 0) ? -v : v;
}

const std::vector<Knot>& triangle_knots() {
  static const std::vector<Knot> k{{-0.5, 0.0}, {0.0, 2.0}, {0.5, 0.0}};
  return k;
}

}  // namespace

const char* to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    default: return "none";
  }
}

CompactFunction::CompactFunction(Form form) : form_(std::move(form)) { classify(); }

CompactFunction CompactFunction::triangle() { return CompactFunction(forms::Triangle{}); }
CompactFunction CompactFunction::magic_f() { return CompactFunction(forms::MagicF{}); }
CompactFunction CompactFunction::magic_g() { return CompactFunction(forms::MagicG{}); }
CompactFunction CompactFunction::chebyshev() { return CompactFunction(forms::Chebyshev{}); }

CompactFunction CompactFunction::polyline(std::vector<Knot> knots) {
  if (knots.size() < 2) throw InvalidArgument("a polyline needs at least two knots");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const auto& k = knots[i];
    if (!std::isfinite(k.x) || !std::isfinite(k.value)) throw InvalidArgument("knots must be finite");
    if (k.x < -0.5 || k.x > 0.5) throw InvalidArgument("knots must lie in [-1/2, 1/2]");
    if (i > 0 && !(k.x > knots[i - 1].x)) throw InvalidArgument("knot abscissae must increase strictly");
  }
  return CompactFunction(forms::PiecewiseLinear{std::move(knots)});
}

CompactFunction CompactFunction::outlier() {
  return polyline({{-0.5, 0.0}, {-5.0 / 16, 4.0}, {-0.25, 0.0}, {0.25, 0.0}, {5.0 / 16, 4.0}, {0.5, 0.0}});
}

CompactFunction CompactFunction::mollified(const CompactFunction& base, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidArgument("epsilon must lie in (0, 1)");
  return CompactFunction(forms::Mollified{std::make_shared<const CompactFunction>(base), epsilon});
}

void CompactFunction::classify() {
  std::visit(overloaded{
                 [this](const forms::Triangle&) {
                   parity_ = Parity::even;
                   continuous_ = nonnegative_ = radial_decreasing_ = true;
                   mass_ = 1.0;
                 },
                 [this](const forms::MagicF&) {
                   parity_ = Parity::even;
                   continuous_ = false;
                   nonnegative_ = radial_decreasing_ = true;
                   mass_ = 1.0;
                 },
                 [this](const forms::MagicG&) {
                   parity_ = Parity::odd;
                   continuous_ = nonnegative_ = radial_decreasing_ = false;
                   mass_ = 0.0;
                 },
                 [this](const forms::Chebyshev&) {
                   parity_ = Parity::even;
                   continuous_ = radial_decreasing_ = false;
                   nonnegative_ = true;
                   mass_ = kPi / 2.0;
                 },
                 [this](const forms::PiecewiseLinear& pl) {
                   const auto& k = pl.knots;
                   double scale = 0.0, mass = 0.0;
                   nonnegative_ = true;
                   for (std::size_t i = 0; i < k.size(); ++i) {
                     scale = std::max(scale, std::abs(k[i].value));
                     if (k[i].value < 0.0) nonnegative_ = false;
                     if (i > 0) mass += 0.5 * (k[i].value + k[i - 1].value) * (k[i].x - k[i - 1].x);
                   }
                   mass_ = mass;
                   const double tol = 1e-12 * std::max(scale, 1.0);
                   continuous_ = std::abs(k.front().value) <= tol && std::abs(k.back().value) <= tol;
                   bool even = true, odd = true;
                   for (const auto& n : k) {
                     const double mirror = lerp_knots(k, -n.x);
                     if (std::abs(mirror - n.value) > tol) even = false;
                     if (std::abs(mirror + n.value) > tol) odd = false;
                   }
                   parity_ = even ? Parity::even : (odd ? Parity::odd : Parity::none);
                   radial_decreasing_ = even && nonnegative_;
                   double prev = lerp_knots(k, 0.0);
                   for (const auto& n : k) {
                     if (n.x <= 0.0) continue;
                     if (n.value > prev + tol) radial_decreasing_ = false;
                     prev = n.value;
                   }
                 },
                 [this](const forms::Mollified& m) {
                   parity_ = m.base->parity();
                   continuous_ = true;
                   nonnegative_ = m.base->nonnegative();
                   radial_decreasing_ = m.base->radial_decreasing();
                   mass_ = m.base->mass();
                 },
             },
             form_);
}

std::string CompactFunction::name() const {
  return std::visit(overloaded{
                        [](const forms::Triangle&) -> std::string { return "triangle"; },
                        [](const forms::MagicF&) -> std::string { return "magicF"; },
                        [](const forms::MagicG&) -> std::string { return "magicG"; },
                        [](const forms::Chebyshev&) -> std::string { return "chebyshev"; },
                        [](const forms::PiecewiseLinear&) -> std::string { return "polyline"; },
                        [](const forms::Mollified& m) -> std::string {
                          char buf[64];
                          std::snprintf(buf, sizeof buf, "mollified(%s,%.6g)", m.base->name().c_str(), m.epsilon);
                          return buf;
                        },
                    },
                    form_);
}

double CompactFunction::operator()(double x) const {
  if (std::abs(x) > 0.5) return 0.0;
  return std::visit(
      overloaded{
          [x](const forms::Triangle&) { return 2.0 - 4.0 * std::abs(x); },
          [x](const forms::MagicF&) {
            if (x == 0.0) return std::numeric_limits<double>::infinity();
            const double a = std::abs(x);
            const double u = std::sqrt(std::max(0.0, (1.0 - 2.0 * a) * (1.0 + 2.0 * a)));
            return 2.0 / kPi * std::log((1.0 + u) / (2.0 * std::abs(x)));
          },
          [x](const forms::MagicG&) {
            const double a = std::abs(x);
            if (a == 0.5) return 0.0;
            return 2.0 * x / std::sqrt((1.0 - 2.0 * a) * (1.0 + 2.0 * a));
          },
          [x](const forms::Chebyshev&) {
            const double a = std::abs(x);
            if (a == 0.5) return 0.0;
            return 1.0 / std::sqrt((1.0 - 2.0 * a) * (1.0 + 2.0 * a));
          },
          [x](const forms::PiecewiseLinear& pl) { return lerp_knots(pl.knots, x); },
          [x](const forms::Mollified& m) {
            const double eps = m.epsilon, s = 1.0 - eps;
            const CompactFunction& base = *m.base;
            const auto integrand = [&](double y) {
              return mollifier::phi(y / eps) / eps * base((x - y) / s) / s;
            };
            std::vector<double> interior;
            for (double b : base.breakpoints()) interior.push_back(x - s * b);
            const auto cuts = quad::make_cuts(-0.5 * eps, 0.5 * eps, interior);
            quad::TanhSinhOptions opts;
            opts.tol = 1e-11;
            return quad::tanh_sinh_pieces(integrand, cuts, opts).value;
          },
      },
      form_);
}

double CompactFunction::l1_norm() const {
  return std::visit(overloaded{
                        [](const forms::MagicG&) { return 1.0; },
                        [](const forms::PiecewiseLinear& pl) {
                          double s = 0.0;
                          for (std::size_t i = 1; i < pl.knots.size(); ++i) {
                            const double a = pl.knots[i - 1].value, b = pl.knots[i].value;
                            const double w = pl.knots[i].x - pl.knots[i - 1].x;
                            if (a * b >= 0.0)
                              s += 0.5 * std::abs(a + b) * w;
                            else
                              s += 0.5 * (a * a + b * b) / (std::abs(a) + std::abs(b)) * w;
                          }
                          return s;
                        },
                        [this](const auto&) {
                          if (nonnegative_) return mass_;
                          const auto cuts = quad::make_cuts(-0.5, 0.5, breakpoints());
                          return quad::tanh_sinh_pieces([this](double x) { return std::abs((*this)(x)); }, cuts)
                              .value;
                        },
                    },
                    form_);
}

std::vector<double> CompactFunction::breakpoints() const {
  return std::visit(overloaded{
                        [](const forms::Triangle&) { return std::vector<double>{-0.5, 0.0, 0.5}; },
                        [](const forms::MagicF&) { return std::vector<double>{-0.5, 0.0, 0.5}; },
                        [](const forms::MagicG&) { return std::vector<double>{-0.5, 0.5}; },
                        [](const forms::Chebyshev&) { return std::vector<double>{-0.5, 0.5}; },
                        [](const forms::PiecewiseLinear& pl) {
                          std::vector<double> v;
                          for (const auto& k : pl.knots) v.push_back(k.x);
                          return v;
                        },
                        [](const forms::Mollified& m) {
                          std::vector<double> v{-0.5, 0.5};
                          const double s = 1.0 - m.epsilon, h = 0.5 * m.epsilon;
                          for (double b : m.base->breakpoints())
                            for (double c : {s * b - h, s * b + h})
                              if (c > -0.5 && c < 0.5) v.push_back(c);
                          return sorted_unique(v);
                        },
                    },
                    form_);
}

std::vector<double> CompactFunction::line_singularities() const {
  return std::visit(overloaded{
                        [](const forms::MagicG&) { return std::vector<double>{-0.5, 0.5}; },
                        [](const forms::Chebyshev&) { return std::vector<double>{-0.5, 0.5}; },
                        [](const forms::PiecewiseLinear& pl) {
                          std::vector<double> v;
                          if (pl.knots.front().value != 0.0) v.push_back(pl.knots.front().x);
                          if (pl.knots.back().value != 0.0) v.push_back(pl.knots.back().x);
                          return v;
                        },
                        [](const auto&) { return std::vector<double>{}; },
                    },
                    form_);
}

std::vector<Knot> CompactFunction::knots() const {
  if (std::holds_alternative<forms::Triangle>(form_)) return triangle_knots();
  if (const auto* pl = std::get_if<forms::PiecewiseLinear>(&form_)) return pl->knots;
  return {};
}

std::complex<double> CompactFunction::fourier(double t) const {
  using cplx = std::complex<double>;
  const auto polyline_hat = [t](const std::vector<Knot>& k) {
    const double w = 2.0 * kPi * t;
    cplx sum = 0.0;
    for (std::size_t i = 1; i < k.size(); ++i) {
      const double c = 0.5 * (k[i].x + k[i - 1].x), h = 0.5 * (k[i].x - k[i - 1].x);
      const double mean = 0.5 * (k[i].value + k[i - 1].value);
      const double slope = (k[i].value - k[i - 1].value) / (2.0 * h);
      const double z = w * h;
      const cplx inner(mean * 2.0 * h * special::sinc(z), -slope * 2.0 * w * h * h * h * special::sinc_moment(z));
      sum += std::polar(1.0, -w * c) * inner;
    }
    return sum;
  };
  return std::visit(overloaded{
                        [t](const forms::Triangle&) {
                          const double s = special::sinc(kPi * t / 2.0);
                          return cplx(s * s, 0.0);
                        },
                        [t](const forms::MagicF&) {
                          const double a = kPi * std::abs(t);
                          return cplx(a == 0.0 ? 1.0 : special::bessel_j0_integral(a) / a, 0.0);
                        },
                        [t](const forms::MagicG&) { return cplx(0.0, -0.5 * kPi * bessel_j(1, kPi * t)); },
                        [t](const forms::Chebyshev&) { return cplx(0.5 * kPi * bessel_j(0, kPi * t), 0.0); },
                        [&](const forms::PiecewiseLinear& pl) { return polyline_hat(pl.knots); },
                        [t](const forms::Mollified& m) {
                          return m.base->fourier((1.0 - m.epsilon) * t) * mollifier::phi_hat(m.epsilon * t);
                        },
                    },
                    form_);
}

namespace mollifier {
namespace {

double raw_bump(double s) {
  const double q = 1.0 - 16.0 * s * s;
  return q > 0.0 ? std::exp(-1.0 / q) : 0.0;
}

struct Tables {
  static constexpr int kIntervals = 4096;
  static constexpr int kBumpNodes = 1024;  // trapezoid nodes on (0, 1/4]
  double psi_scale = 0.0;
  std::array<double, kIntervals + 1> phi{};
  std::array<double, kBumpNodes + 1> bump{};

  Tables() {
    quad::AdaptiveOptions opts;
    opts.abs_tol = 1e-15;
    opts.rel_tol = 1e-14;
    const double z = quad::gauss_kronrod(raw_bump, -0.25, 0.25, {}, opts).value;
    psi_scale = 1.0 / z;
    for (int j = 0; j <= kBumpNodes; ++j) bump[j] = raw_bump(0.25 * j / kBumpNodes);
    for (int j = 0; j <= kIntervals / 2; ++j) {
      const double x = -0.5 + static_cast<double>(j) / kIntervals;
      const double lo = std::max(-0.25, x - 0.25), hi = std::min(0.25, x + 0.25);
      double v = 0.0;
      if (hi > lo)
        v = quad::gauss_kronrod([x](double y) { return raw_bump(y) * raw_bump(x - y); }, lo, hi, {}, opts).value;
      phi[j] = phi[kIntervals - j] = v * psi_scale * psi_scale;
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

double psi(double s) { return tables().psi_scale * raw_bump(s); }

double phi(double x) {
  if (std::abs(x) >= 0.5) return 0.0;
  const auto& t = tables();
  constexpr int n = Tables::kIntervals;
  const double u = (x + 0.5) * n;
  int i = std::clamp(static_cast<int>(std::floor(u)) - 1, 0, n - 3);
  // cubic through nodes i .. i+3
  const double s = u - i;
  const double* p = &t.phi[i];
  const double l0 = -(s - 1) * (s - 2) * (s - 3) / 6.0;
  const double l1 = s * (s - 2) * (s - 3) / 2.0;
  const double l2 = -s * (s - 1) * (s - 3) / 2.0;
  const double l3 = s * (s - 1) * (s - 2) / 6.0;
  return std::max(0.0, l0 * p[0] + l1 * p[1] + l2 * p[2] + l3 * p[3]);
}

// psi is smooth with compact support, so the trapezoid rule converges
// spectrally; its aliasing error is psi_hat at 4 kBumpNodes - |t|.
double phi_hat(double t) {
  const double a = std::abs(t);
  if (a > 1500.0) return 0.0;  // psi_hat^2 is far below double precision here
  const auto& tb = tables();
  constexpr int n = Tables::kBumpNodes;
  const double h = 0.25 / n;
  const double w = 2.0 * kPi * a * h;
  double v = 0.5 * tb.bump[0];
  for (int j = 1; j < n; ++j) v += tb.bump[j] * std::cos(w * j);
  const double psi_hat = 2.0 * h * tb.psi_scale * v;
  return psi_hat * psi_hat;
}

}  // namespace mollifier

}  // namespace hilbert_et
