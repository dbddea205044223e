#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hilbert_et/errors.hpp"
#include "hilbert_et/hilbert.hpp"
#include "hilbert_et/quadrature.hpp"

using namespace hilbert_et;
constexpr double pi = std::numbers::pi;

namespace {

// p.v. int_{-1/2}^{1/2} f(theta - a) cot(pi a) da folded onto (0, 1/2):
// int_0^{1/2} (f(theta - a) - f(theta + a)) cot(pi a) da.
double cot_kernel_oracle(const PeriodizedFunction& pf, double theta) {
  std::vector<double> cuts;
  for (double b : pf.base.breakpoints())
    for (double s : {-1.0, 1.0}) {
      double a = s * (theta - pf.delta * b);
      a -= std::floor(a);
      if (a > 0.0 && a < 0.5) cuts.push_back(a);
      if (1.0 - a > 0.0 && 1.0 - a < 0.5) cuts.push_back(1.0 - a);
    }
  quad::AdaptiveOptions o;
  o.abs_tol = 1e-9;
  o.rel_tol = 0.0;
  o.max_intervals = 20000;
  return quad::gauss_kronrod(
             [&](double a) {
               if (a == 0.0) return 0.0;
               return (pf(theta - a) - pf(theta + a)) / std::tan(pi * a);
             },
             0.0, 0.5, cuts, o)
      .value;
}

}  // namespace

TEST_CASE("closed forms of the magic functions") {
  const auto G = CompactFunction::magic_g(), F = CompactFunction::magic_f();
  for (double x : {-0.4, -0.1, 0.2, 0.45}) {
    CHECK(hilbert_line(G, x) == doctest::Approx(-1.0));
    CHECK(hilbert_line(F, x) == doctest::Approx(x > 0 ? 1.0 : -1.0));
  }
  for (double x : {0.6, 1.5, -0.8}) {
    CHECK(hilbert_line(G, x) == doctest::Approx(-1.0 + 2 * std::abs(x) / std::sqrt(4 * x * x - 1)));
    CHECK(hilbert_line(F, x) == doctest::Approx(2 / pi * std::asin(1 / (2 * x))));
  }
  CHECK_THROWS_AS(hilbert_line(G, 0.5), SingularPoint);
  CHECK_THROWS_AS(hilbert_line(CompactFunction::chebyshev(), -0.5), SingularPoint);
}

TEST_CASE("triangle transform") {
  const auto T = CompactFunction::triangle();
  CHECK(hilbert_line(T, 1 / (2 * std::sqrt(2.0))) == doctest::Approx(4 / pi * std::log(1 + std::sqrt(2.0))).epsilon(1e-14));
  for (double x : {0.1, 0.37, 0.5, 0.9, 3.0}) CHECK(hilbert_line(T, -x) == doctest::Approx(-hilbert_line(T, x)).epsilon(1e-10));
  CHECK(std::abs(hilbert_line(T, 100.0)) < 1e-2);
  CHECK(std::abs(hilbert_line(T, -100.0)) < 1e-2);
}

TEST_CASE("principal-value oracle against closed forms") {
  const auto T = CompactFunction::triangle();
  CHECK(hilbert_line_pv_quadrature(T, 0.25, default_pv_schedule(T, 0.25)) ==
        doctest::Approx(hilbert_line(T, 0.25)).epsilon(1e-5));
  const auto G = CompactFunction::magic_g();
  CHECK(std::abs(hilbert_line_pv_quadrature(G, 0.2, default_pv_schedule(G, 0.2)) + 1.0) < 1e-4);
  const auto C = CompactFunction::chebyshev();
  CHECK(std::abs(hilbert_line_pv_quadrature(C, 0.3, default_pv_schedule(C, 0.3))) < 1e-4);
  const auto P = CompactFunction::outlier();
  for (double x : {-0.7, -0.3, 0.05, 0.28, 0.4})
    CHECK(hilbert_line_pv_quadrature(P, x, default_pv_schedule(P, x)) == doctest::Approx(hilbert_line(P, x)).epsilon(1e-6));
}

TEST_CASE("PV schedule must decrease") {
  const auto T = CompactFunction::triangle();
  const std::vector<double> bad{0.01, 0.02, 0.03, 0.04, 0.05};
  CHECK_THROWS_AS(hilbert_line_pv_quadrature(T, 0.2, bad), InvalidArgument);
}

TEST_CASE("negativity left of the support") {
  for (const auto& F : {CompactFunction::triangle(), CompactFunction::outlier(),
                        CompactFunction::mollified(CompactFunction::magic_f(), 0.1)})
    for (double x : {-0.5, -0.7, -2.0, -10.0}) CHECK(hilbert_line(F, x) <= 1e-12);
}

TEST_CASE("periodic transform basics") {
  const PeriodizedFunction pf(CompactFunction::triangle(), 0.5);
  CHECK(std::abs(hilbert_periodic(pf, 0.0, 4096).value) < 1e-12);
  CHECK(std::abs(hilbert_periodic(pf, 0.5, 4096).value) < 1e-12);
  for (double th = -0.5; th <= -0.25; th += 0.05) CHECK(hilbert_periodic(pf, th, 4096).value <= 1e-4);
  CHECK_THROWS_AS(hilbert_periodic(pf, 0.1, 10), InvalidArgument);
  CHECK(hilbert_periodic(pf, 0.1, 64).truncation_warning);
  CHECK_THROWS_AS(PeriodizedFunction(CompactFunction::triangle(), 0.0), InvalidArgument);
}

TEST_CASE("multiplier series against the cotangent kernel") {
  const PeriodizedFunction tri(CompactFunction::triangle(), 1.0);
  CHECK(hilbert_periodic(tri, 0.2, 4096).value == doctest::Approx(cot_kernel_oracle(tri, 0.2)).epsilon(1e-4));
  for (double delta : {0.25, 0.5, 1.0}) {
    const PeriodizedFunction pf(CompactFunction::triangle(), delta);
    const CircleTransform ct(pf);
    double worst = 0.0, worst_series = 0.0;
    for (int j = 0; j <= 100; ++j) {
      const double th = -0.5 + j / 100.0;
      const double oracle = cot_kernel_oracle(pf, th);
      worst = std::max(worst, std::abs(ct(th) - oracle));
      worst_series = std::max(worst_series, std::abs(hilbert_periodic(pf, th, 4096).value - oracle));
    }
    CHECK(worst < 1e-6);
    CHECK(worst_series < 1e-4);
  }
}

TEST_CASE("mollified periodic transform against the cotangent kernel") {
  const auto m = CompactFunction::mollified(CompactFunction::magic_f(), 0.2);
  for (double delta : {0.25, 0.5, 1.0}) {
    const PeriodizedFunction pf(m, delta);
    const CircleTransform ct(pf);
    double worst = 0.0;
    for (int j = 0; j <= 20; ++j) {
      const double th = -0.5 + j / 20.0;
      worst = std::max(worst, std::abs(ct(th) - cot_kernel_oracle(pf, th)));
    }
    CHECK(worst < 1e-4);
  }
}

TEST_CASE("rescaling identity") {
  const auto T = CompactFunction::triangle();
  const CircleTransform one(PeriodizedFunction(T, 1.0));
  CHECK(lemma4_rhs(T, 1.0, 0.3) == doctest::Approx(one(0.3)).epsilon(1e-4));
  const CircleTransform quarter(PeriodizedFunction(T, 0.25));
  CHECK(lemma4_rhs(T, 0.25, 0.1) == doctest::Approx(0.25 * quarter(0.1)).epsilon(1e-4));
  CHECK(std::abs(lemma4_rhs(T, 0.5, 0.0)) < 1e-15);
  CHECK_THROWS_AS(lemma4_rhs(T, 0.5, 0.5), InvalidArgument);
  CHECK_THROWS_AS(lemma4_rhs(T, 1.5, 0.1), InvalidArgument);
  const auto m = CompactFunction::mollified(CompactFunction::magic_f(), 0.2);
  const CircleTransform mh(PeriodizedFunction(m, 0.5));
  CHECK(lemma4_rhs(m, 0.5, -0.2) == doctest::Approx(0.5 * mh(-0.2)).epsilon(1e-6));
}

TEST_CASE("cotangent partial fractions") {
  CHECK(cot_expansion_check(0.25, 10000) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(std::abs(cot_expansion_check(0.5, 10000)) < 1e-4);
  const double e1 = std::abs(cot_expansion_check(0.1, 1000) - 1 / std::tan(pi * 0.1));
  const double e2 = std::abs(cot_expansion_check(0.1, 2000) - 1 / std::tan(pi * 0.1));
  CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.01));
  CHECK_THROWS_AS(cot_expansion_check(2.0, 10), InvalidArgument);
}

TEST_CASE("transform grids") {
  const auto g = line_transform_grid(CompactFunction::triangle());
  CHECK(g.sup_norm == doctest::Approx(4 / pi * std::log(1 + std::sqrt(2.0))).epsilon(1e-12));
  CHECK(std::abs(g.argmax - 1 / (2 * std::sqrt(2.0))) < 1e-6);
  double sample_max = 0.0;
  for (const auto& [x, v] : g.samples) sample_max = std::max(sample_max, std::abs(v));
  CHECK(g.sup_norm >= sample_max);

  const auto c = circle_transform_grid(CircleTransform(PeriodizedFunction(CompactFunction::triangle(), 0.5)));
  CHECK(c.truncation_K == 0);
  const auto s = circle_transform_grid(
      CircleTransform(PeriodizedFunction(CompactFunction::mollified(CompactFunction::magic_f(), 0.2), 0.5), 1024));
  CHECK(s.truncation_K == 2048);
  for (const auto& [x, v] : s.samples)
    if (x == 0.0 || x == -0.5) CHECK(std::abs(v) < 1e-10);
}
