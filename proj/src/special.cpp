#include "hilbert_et/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "hilbert_et/quadrature.hpp"

namespace hilbert_et::special {
namespace {

constexpr double kPi = std::numbers::pi;

// 2 zeta(2k) / (2k (2k+1)) for the small-argument Clausen expansion.
const std::array<double, 40>& clausen_coefficients() {
  static const std::array<double, 40> table = [] {
    std::array<double, 40> c{};
    for (int k = 1; k <= 40; ++k)
      c[k - 1] = 2.0 * std::riemann_zeta(2.0 * k) / (2.0 * k * (2.0 * k + 1.0));
    return c;
  }();
  return table;
}

// Asymptotic H_nu(z) - Y_nu(z) for nu in {0, 1}, z large.
double struve_minus_neumann(int nu, double z) {
  // (1/pi) sum_k Gamma(k+1/2) (z/2)^(nu-2k-1) / Gamma(nu+1/2-k)
  double coef = std::tgamma(0.5) / std::tgamma(nu + 0.5);
  const double inv = 4.0 / (z * z);
  double power = std::pow(z / 2.0, nu - 1);
  double sum = 0.0;
  double last = std::abs(coef * power);
  for (int k = 0; k < 60; ++k) {
    const double term = coef * power;
    if (k > 0 && std::abs(term) > last) break;  // asymptotic series starts to diverge
    sum += term;
    last = std::abs(term);
    if (last < 1e-18 * std::abs(sum)) break;
    coef *= (k + 0.5) * (nu - 0.5 - k);
    power *= inv;
  }
  return sum / kPi;
}

}  // namespace

double clausen_cl2(double x) {
  // Reduce to (-pi, pi].
  double r = std::remainder(x, 2.0 * kPi);
  if (r == 0.0) return 0.0;
  const double sign = r < 0 ? -1.0 : 1.0;
  r = std::abs(r);
  const auto& c = clausen_coefficients();
  const double q = (r / (2.0 * kPi)) * (r / (2.0 * kPi));
  double power = q;
  double series = 0.0;
  for (double ck : c) {
    const double term = ck * power;
    series += term;
    if (term < 1e-18) break;
    power *= q;
  }
  return sign * (r - r * std::log(r) + r * series);
}

double log_sine_integral(double u) {
  return -clausen_cl2(2.0 * kPi * u) / (2.0 * kPi) - u * std::numbers::ln2;
}

double bessel_j0_integral(double a) {
  if (a < 0) return -bessel_j0_integral(-a);
  if (a <= 8.0) {
    // sum (-1)^m (a/2)^{2m} a / ((2m+1) (m!)^2)
    const double q = a * a / 4.0;
    double term = a;
    double sum = 0.0;
    for (int m = 0; m < 80; ++m) {
      sum += term / (2 * m + 1);
      term *= -q / ((m + 1.0) * (m + 1.0));
      if (std::abs(term) < 1e-19 * std::abs(sum)) break;
    }
    return sum;
  }
  if (a < 25.0) {
    double acc = bessel_j0_integral(8.0);
    const auto j0 = [](double s) { return std::cyl_bessel_j(0.0, s); };
    const int pieces = static_cast<int>(std::ceil((a - 8.0) / 1.0));
    const double h = (a - 8.0) / pieces;
    for (int i = 0; i < pieces; ++i) acc += quad::kronrod21(j0, 8.0 + i * h, 8.0 + (i + 1) * h);
    return acc;
  }
  // 1 + a J0 + (pi a / 2) (J1 (H0 - Y0) - J0 (H1 - Y1)), using the Wronskian J1 Y0 - J0 Y1 = 2/(pi a).
  const double j0 = std::cyl_bessel_j(0.0, a);
  const double j1 = std::cyl_bessel_j(1.0, a);
  const double s0 = struve_minus_neumann(0, a);
  const double s1 = struve_minus_neumann(1, a);
  return 1.0 + a * j0 + 0.5 * kPi * a * (j1 * s0 - j0 * s1);
}

double sinc(double z) {
  if (std::abs(z) < 1e-4) {
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

double sinc_moment(double z) {
  const double az = std::abs(z);
  if (az < 0.1) {
    // 1/3 - z^2/30 + z^4/840 - z^6/45360 + z^8/3991680
    const double z2 = z * z;
    return 1.0 / 3.0 + z2 * (-1.0 / 30.0 + z2 * (1.0 / 840.0 + z2 * (-1.0 / 45360.0 + z2 / 3991680.0)));
  }
  return (std::sin(z) - z * std::cos(z)) / (z * z * z);
}

}  // namespace hilbert_et::special
