#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hilbert_et {

/// Every named constant of the discrepancy ladder, derived from two series.
struct ConstantTable {
  double catalan = 0.0;
  double l2_chi3 = 0.0;  // L(2, chi_3)
  double smyth = 0.0;    // 3 sqrt(3) L(2, chi_3) / (4 pi) = int_0^1 log+|e(theta) - 1|
  double c_erdos_turan = 16.0;
  double c_ganelius = 0.0;  // sqrt(2 pi / catalan)
  double c_sound = 0.0;     // 8 / pi
  double c_new = 0.0;       // 4 / sqrt(pi)
  double c_lower = 0.0;     // sqrt(4 pi / (3 sqrt(3) L(2, chi_3)))
  double c_threshold = 0.0; // pi^2 / (3 sqrt(3) L(2, chi_3))
  double c_triangle = 0.0;  // (4 / pi) log(1 + sqrt(2))
  double c_triangle_discrepancy = 0.0;  // (8 / pi) sqrt(log(1 + sqrt(2)))

  /// (name, value) pairs in declaration order, for reporting.
  std::vector<std::pair<std::string, double>> entries() const;

  /// c_lower < c_new < c_triangle_discrepancy < c_sound < c_ganelius < 16.
  bool ladder_ordered() const;
};

/// Catalan's constant from the alternating series sum (-1)^n / (2n+1)^2.
///
/// Partial sums are averaged pairwise (error O(n^-3) with fixed sign for
/// even n), and one Richardson step over n-doubling both improves the
/// estimate and supplies the tail bound used for the stopping test.
double compute_catalan(double tolerance);

/// L(2, chi_3) = 1 - 1/2^2 + 1/4^2 - 1/5^2 + ..., summed in positive
/// decreasing blocks 1/(3m+1)^2 - 1/(3m+2)^2; the tail is bracketed by
/// integral comparison.
double compute_l2_chi3(double tolerance);

ConstantTable table(double tolerance);

/// Table computed once at tolerance 1e-13 and shared thereafter.
const ConstantTable& standard_constants();

}  // namespace hilbert_et
