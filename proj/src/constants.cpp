#include "hilbert_et/constants.hpp"

#include <cmath>
#include <numbers>

#include "hilbert_et/errors.hpp"

namespace hilbert_et {
namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double tolerance) {
  if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
  if (tolerance < 1e-16) throw NumericFailure("tolerance below double roundoff", 0.0, 0.0, tolerance);
}

// Averaged partial sum M_n = S_n + (-1)^n a_n / 2, summed from the small end.
double averaged_catalan_sum(long n) {
  double s = 0.0;
  for (long k = n - 1; k >= 0; --k) {
    const double d = 2.0 * k + 1.0;
    s += (k % 2 == 0 ? 1.0 : -1.0) / (d * d);
  }
  const double dn = 2.0 * n + 1.0;
  return s + (n % 2 == 0 ? 0.5 : -0.5) / (dn * dn);
}

}  // namespace

double compute_catalan(double tolerance) {
  require_positive(tolerance);
  long n = 16;
  double prev = averaged_catalan_sum(n);
  for (; n <= (1L << 26); n *= 2) {
    const double next = averaged_catalan_sum(2 * n);
    const double correction = (next - prev) / 7.0;
    if (std::abs(correction) < tolerance) return next + correction;
    prev = next;
  }
  throw NumericFailure("Catalan summation cannot reach the requested tolerance");
}

double compute_l2_chi3(double tolerance) {
  require_positive(tolerance);
  auto block = [](double m) {
    const double a = 3.0 * m + 1.0, b = 3.0 * m + 2.0;
    return 1.0 / (a * a) - 1.0 / (b * b);
  };
  for (long blocks = 64; blocks <= (1L << 26); blocks *= 2) {
    const double m = static_cast<double>(blocks);
    const double half_width = 0.5 * block(m);
    if (half_width >= tolerance) continue;
    double s = 0.0;
    for (long k = blocks - 1; k >= 0; --k) s += block(static_cast<double>(k));
    // tail in [I, I + b(M)] with I = int_M^inf b(x) dx
    const double integral = 1.0 / (3.0 * (3.0 * m + 1.0) * (3.0 * m + 2.0));
    return s + integral + half_width;
  }
  throw NumericFailure("L(2, chi_3) summation cannot reach the requested tolerance");
}

ConstantTable table(double tolerance) {
  ConstantTable t;
  t.catalan = compute_catalan(tolerance);
  t.l2_chi3 = compute_l2_chi3(tolerance);
  const double sqrt3 = std::sqrt(3.0);
  const double smyth_numerator = 3.0 * sqrt3 * t.l2_chi3;
  t.smyth = smyth_numerator / (4.0 * kPi);
  t.c_ganelius = std::sqrt(2.0 * kPi / t.catalan);
  t.c_sound = 8.0 / kPi;
  t.c_new = 4.0 / std::sqrt(kPi);
  t.c_lower = std::sqrt(4.0 * kPi / smyth_numerator);
  t.c_threshold = kPi * kPi / smyth_numerator;
  const double log_silver = std::log(1.0 + std::numbers::sqrt2);
  t.c_triangle = 4.0 / kPi * log_silver;
  t.c_triangle_discrepancy = 8.0 / kPi * std::sqrt(log_silver);
  return t;
}

const ConstantTable& standard_constants() {
  static const ConstantTable cached = table(1e-13);
  return cached;
}

std::vector<std::pair<std::string, double>> ConstantTable::entries() const {
  return {{"catalan", catalan},
          {"l2_chi3", l2_chi3},
          {"smyth", smyth},
          {"c_erdos_turan", c_erdos_turan},
          {"c_ganelius", c_ganelius},
          {"c_sound", c_sound},
          {"c_new", c_new},
          {"c_lower", c_lower},
          {"c_threshold", c_threshold},
          {"c_triangle", c_triangle},
          {"c_triangle_discrepancy", c_triangle_discrepancy}};
}

bool ConstantTable::ladder_ordered() const {
  return c_lower < c_new && c_new < c_triangle_discrepancy && c_triangle_discrepancy < c_sound &&
         c_sound < c_ganelius && c_ganelius < c_erdos_turan && c_threshold > c_triangle;
}

}  // namespace hilbert_et
