#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hilbert_et/errors.hpp"
#include "hilbert_et/quadrature.hpp"

using namespace hilbert_et;

TEST_CASE("Gauss-Kronrod on smooth and kinked integrands") {
  const auto r = quad::gauss_kronrod([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
  const double bp[] = {0.3};
  const auto k = quad::gauss_kronrod([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, bp);
  CHECK(k.value == doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-14));
}

TEST_CASE("Gauss-Kronrod reports failure") {
  quad::AdaptiveOptions o;
  o.abs_tol = 1e-15;
  o.rel_tol = 0.0;
  o.max_intervals = 3;
  CHECK_THROWS_AS(quad::gauss_kronrod([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {}, o), NumericFailure);
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
  const auto r = quad::tanh_sinh([](double x) { return std::log(x); }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(-1.0).epsilon(1e-12));
  const auto s = quad::tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-12));
  // arcsine density on [-1, 1]; rounding of 1 - x near the ends caps the accuracy
  const auto a = quad::tanh_sinh([](double x) { return 1.0 / std::sqrt(1.0 - x * x); }, -1.0, 1.0);
  CHECK(a.value == doctest::Approx(std::numbers::pi).epsilon(1e-7));
}

TEST_CASE("golden section locates a maximum") {
  const auto m = quad::golden_max([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0, 1e-12);
  CHECK(m.x == doctest::Approx(0.3).epsilon(1e-6));
}

TEST_CASE("extrapolation to zero recovers a polynomial limit") {
  std::vector<double> eps, vals;
  for (double e = 0.1; e > 0.002; e /= 2) {
    eps.push_back(e);
    vals.push_back(2.0 + 3.0 * e - e * e * e);
  }
  const double powers[] = {1.0, 3.0};
  const auto ex = quad::extrapolate_to_zero(eps, vals, powers);
  CHECK(ex.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(ex.error < 1e-10);
}
