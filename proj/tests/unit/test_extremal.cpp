#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hilbert_et/constants.hpp"
#include "hilbert_et/errors.hpp"
#include "hilbert_et/extremal.hpp"

using namespace hilbert_et;
constexpr double pi = std::numbers::pi;

TEST_CASE("triangle report") {
  const auto r = c_functional(CompactFunction::triangle());
  CHECK(r.c_of_F == doctest::Approx(1.12219970467836).epsilon(1e-9));
  CHECK(std::abs(r.argmax_line - 1 / (2 * std::sqrt(2.0))) < 1e-6);
  CHECK(r.dichotomy == Dichotomy::line_dominant);
  CHECK(r.passes_threshold);
  CHECK(r.dichotomy_consistent);
}

TEST_CASE("outlier is circle-dominant") {
  const auto r = c_functional(CompactFunction::outlier());
  CHECK(r.dichotomy == Dichotomy::circle_dominant);
  CHECK(r.c_of_F == r.norm_circle);
}

TEST_CASE("class A is required") {
  CHECK_THROWS_AS(c_functional(CompactFunction::magic_f()), InvalidArgument);
  CHECK_THROWS_AS(c_functional(CompactFunction::magic_g()), InvalidArgument);
}

TEST_CASE("mass normalization") {
  const auto half = CompactFunction::polyline({{-0.5, 0.0}, {0.0, 1.0}, {0.5, 0.0}});
  const auto a = c_functional(half), b = c_functional(CompactFunction::triangle());
  CHECK(a.c_of_F == doctest::Approx(b.c_of_F).epsilon(1e-12));
}

TEST_CASE("functional floor and radial dichotomy on random polylines") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const double x1 = 0.05 + 0.4 * u(rng);
    const double v0 = 0.1 + u(rng), v1 = u(rng) * (trial % 2 ? v0 : 3.0);
    const auto F = CompactFunction::polyline({{-0.5, 0}, {-x1, v1}, {0, v0}, {x1, v1}, {0.5, 0}});
    const auto r = c_functional(F, 1024);
    CHECK(r.c_of_F >= 1.0 - 1e-4);
    if (F.radial_decreasing()) CHECK(r.dichotomy != Dichotomy::circle_dominant);
    CHECK(r.dichotomy_consistent);
  }
}

TEST_CASE("delta sweep endpoints") {
  const auto T = CompactFunction::triangle();
  const auto r = c_functional(T);
  const auto s = delta_sweep(T, r, default_sweep_deltas());
  CHECK(s.values.back() == r.norm_circle);
  CHECK(s.sup <= r.c_of_F + 1e-3);
  CHECK(std::abs(s.limit_probes.back().second - r.norm_line) < 1e-3);
  CHECK(s.sup <= std::max(s.endpoint_line, s.endpoint_circle) + 1e-3);

  const auto P = CompactFunction::outlier();
  const auto so = delta_sweep(P, default_sweep_deltas());
  CHECK(so.sup_delta == 1.0);
  CHECK_THROWS_AS(delta_sweep(T, std::vector<double>{}), InvalidArgument);
  CHECK_THROWS_AS(delta_sweep(T, std::vector<double>{0.0, 0.5}), InvalidArgument);
}

TEST_CASE("G_delta bound") {
  const auto T = CompactFunction::triangle();
  CHECK(g_delta_bound(T, 0.5, {0.2, 0.6}) == 0.0);
  const double norm = circle_transform_grid(CircleTransform(PeriodizedFunction(T, 0.5))).sup_norm;
  CHECK(g_delta_bound(T, 0.5, {0.0, 0.25}) <= 2 / pi * norm + 1e-6);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double best = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double g = g_delta_bound(T, 0.5, {u(rng), 0.5 * u(rng)}, 1024);
    CHECK(g <= 2 / pi * norm + 1e-6);
    best = std::max(best, g);
  }
  CHECK(best >= 2 / pi * norm - 1e-2);
}

TEST_CASE("optimal delta") {
  const auto z = optimal_delta(1.0, 10, 0.0);
  CHECK(z.degenerate);
  CHECK(z.delta > 0.0);
  const auto& k = standard_constants();
  const auto t = optimal_delta(k.c_triangle, 100, 100 * 0.32307);
  CHECK(t.delta == doctest::Approx(std::sqrt(4 * 1.12219 * 0.32307 / pi)).epsilon(1e-4));
  CHECK_FALSE(t.clamped);
  const auto edge = optimal_delta(k.c_threshold, 100, 100 * k.smyth);
  CHECK(edge.delta == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(edge.clamped);
  const auto big = optimal_delta(k.c_threshold, 10, 10.0);
  CHECK(big.clamped);
  CHECK(big.delta == 1.0);
  CHECK(optimal_delta(CompactFunction::triangle(), 100, 100 * k.smyth).delta == doctest::Approx(t.delta).epsilon(1e-4));
  CHECK_THROWS_AS(optimal_delta(1.0, 0, 1.0), InvalidArgument);
}

TEST_CASE("duality pairing") {
  const auto T = CompactFunction::triangle();
  const double d = duality_lower_bound(T);
  CHECK(std::abs(d - 1.0) < 1e-5);
  CHECK(c_functional(T).norm_line >= d);
  CHECK(std::abs(duality_lower_bound(CompactFunction::magic_f()) - 1.0) < 1e-5);
  const auto m = CompactFunction::mollified(CompactFunction::magic_f(), 0.05);
  CHECK(std::abs(duality_lower_bound(m) - 1.0) < 1e-5);
  CHECK(c_functional(m).norm_line == doctest::Approx(1 / 0.95).epsilon(1e-4));
  CHECK_THROWS_AS(duality_lower_bound(CompactFunction::magic_g()), InvalidArgument);
}

TEST_CASE("Tricomi annihilation") {
  const double d8 = tricomi_annihilation_check(101, 8);
  CHECK(d8 <= 1e-3);
  CHECK(tricomi_annihilation_check(101, 4) > d8);
  CHECK_THROWS_AS(tricomi_annihilation_check(50), InvalidArgument);
}

TEST_CASE("case 2 kernel decreases beyond 1") {
  CHECK(case2_max_slope() < 0.0);
  CHECK(case2_kernel(-0.3, 0.2, 1.0) > 0.0);
  CHECK(case2_kernel(0.0, 0.2, 2.0) == 0.0);
}
