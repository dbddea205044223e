#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hilbert_et/constants.hpp"
#include "hilbert_et/families.hpp"
#include "hilbert_et/heights.hpp"
#include "hilbert_et/quadrature.hpp"

using namespace hilbert_et;
constexpr double pi = std::numbers::pi;

namespace {

// int_0^1 log|P(e(t))| dt for well-separated unit-circle roots: a window of
// half-width w around each root angle carries log|t - t_j| exactly, the
// smooth remainder goes to Gauss-Kronrod.
double jensen_window_oracle(const ComplexPolynomial& p, const std::vector<double>& unit_angles, double w) {
  auto logp = [&p](double t) { return std::log(std::abs(evaluate_on_circle(p, t))); };
  std::vector<double> cuts;
  for (double a : unit_angles)
    for (double s : {-w, w}) cuts.push_back(a + s - std::floor(a + s));
  quad::AdaptiveOptions o;
  o.abs_tol = 1e-12;
  o.rel_tol = 0.0;
  double total = 0.0;
  // outside the windows
  auto outside = [&](double t) {
    for (double a : unit_angles) {
      double d = std::abs(t - a);
      d = std::min(d, 1.0 - d);
      if (d < w) return 0.0;
    }
    return logp(t);
  };
  total += quad::gauss_kronrod(outside, 0.0, 1.0, cuts, o).value;
  for (double a : unit_angles) {
    auto smooth = [&](double u) { return u == 0.0 ? 0.0 : logp(a + u) - std::log(std::abs(u)); };
    const double zero[] = {0.0};
    total += quad::gauss_kronrod(smooth, -w, w, zero, o).value + 2.0 * w * (std::log(w) - 1.0);
  }
  return total;
}

}  // namespace

TEST_CASE("h of (z-1)^N is N times the smyth value") {
  const double s = standard_constants().smyth;
  for (int N : {1, 3, 10, 50, 100}) {
    const auto p = generate_family(FamilyKind::power_of_linear, N, 0);
    CHECK(height_h(p, 1e-10) / N == doctest::Approx(s).epsilon(1e-9));
  }
}

TEST_CASE("h of z^N - 1 does not depend on N") {
  const double s = standard_constants().smyth;
  for (int N : {1, 2, 5}) CHECK(height_h(generate_family(FamilyKind::cyclotomic, N, 0), 1e-10) == doctest::Approx(s).epsilon(1e-9));
}

TEST_CASE("H of z - 1 and its powers") {
  CHECK(height_H(ComplexPolynomial({-1.0}), 1024) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(height_H(generate_family(FamilyKind::power_of_linear, 7, 0), 1024) ==
        doctest::Approx(7 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("logM and Jensen closed forms") {
  CHECK(height_logM(RootSet::from_polar({{1, 0.1}, {1, 0.4}})) == 0.0);
  CHECK(height_logM(RootSet::from_polar({{2, 0.1}, {0.5, 0.4}})) == doctest::Approx(2 * std::log(2.0)));
  CHECK(jensen_integral(RootSet::from_polar({{3, 0.2}})) == doctest::Approx(std::log(3.0)));
  CHECK(jensen_integral(RootSet::from_polar({{1, 0.2}, {1, 0.6}})) == 0.0);
}

TEST_CASE("Jensen formula against windowed quadrature on unit roots") {
  const auto p = expand_from_roots(RootSet::from_polar({{1, 0.05}, {1, 0.3}, {1, 0.62}, {1, 0.8}}));
  CHECK(std::abs(jensen_window_oracle(p, {0.05, 0.3, 0.62, 0.8}, 1e-2)) < 1e-9);
}

TEST_CASE("Jensen formula for roots off the circle") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::pair<double, double>> polar;
    for (int j = 0; j < 8; ++j) {
      const double off = 1e-3 + 0.3 * u(rng);
      polar.emplace_back(u(rng) < 0.5 ? 1.0 + off : 1.0 / (1.0 + off), u(rng));
    }
    const auto roots = RootSet::from_polar(polar);
    const auto p = expand_from_roots(roots);
    quad::AdaptiveOptions o;
    o.abs_tol = 1e-10;
    o.rel_tol = 0.0;
    o.max_intervals = 20000;
    const auto angles = roots.angles();
    const double direct = quad::gauss_kronrod(
        [&p](double t) { return std::log(std::abs(evaluate_on_circle(p, t))); }, 0.0, 1.0, angles, o).value;
    CHECK(std::abs(direct - jensen_integral(roots)) < 1e-6);
  }
}

TEST_CASE("psi Fourier coefficients") {
  CHECK(psi_fourier(0) == 0.0);
  CHECK(psi_fourier(3) == doctest::Approx(-1.0 / 6.0));
  CHECK(psi_fourier(-4) == doctest::Approx(-1.0 / 8.0));
  for (long k : {1L, 2L, 7L}) CHECK(std::abs(psi_fourier_quadrature(k) - psi_fourier(k)) < 1e-6);
}

TEST_CASE("height inequalities on random polynomials") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int N = 1 + static_cast<int>(seed % 12);
    const auto p = generate_family(FamilyKind::random_disk, N, seed);
    const auto r = height_report(p, 1e-9);
    CHECK(r.h >= 0.0);
    CHECK(r.h <= r.H_log + 1e-9);
    CHECK(r.H_log >= -1e-12);
    CHECK(r.logM <= 2.0 * r.h + 1e-6);
    const auto q = expand_from_roots(schur_project(*p.factored()));
    CHECK(height_h(q, 1e-9) <= r.h + 1e-8);
  }
}
