#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hilbert_et/compact_function.hpp"
#include "hilbert_et/discrepancy.hpp"
#include "hilbert_et/hilbert.hpp"

namespace hilbert_et {

enum class Dichotomy { line_dominant, circle_dominant, tie };

const char* to_string(Dichotomy d);

/// Norms below are divided by the mass of F.
struct ExtremalReport {
  std::string function;
  double mass = 0.0;
  double norm_line = 0.0;
  double norm_circle = 0.0;
  double c_of_F = 0.0;
  double argmax_line = 0.0;
  double argmax_circle = 0.0;
  Dichotomy dichotomy = Dichotomy::tie;
  bool passes_threshold = false;
  /// false only for a radial-decreasing F that came out circle-dominant
  bool dichotomy_consistent = true;
  int truncation_K = 0;
};

/// Norms closer than this are reported as a tie.
inline constexpr double kDichotomyTie = 1e-6;

/// max(||H(F)||_R, ||H(f_F)||_T) / ||F||_1 for F in class A.
ExtremalReport c_functional(const CompactFunction& F, int grid = 2048, int K = 4096);

struct DeltaSweep {
  std::vector<double> deltas;
  std::vector<double> values;  // delta ||H(f_delta)|| / mass
  double sup = 0.0;
  double sup_delta = 0.0;
  double endpoint_line = 0.0;
  double endpoint_circle = 0.0;
  /// (delta, delta H(f_delta)(delta x0) / mass) at delta = 0.01, 0.005 with
  /// x0 the argmax of H(F) on the line
  std::vector<std::pair<double, double>> limit_probes;
  Dichotomy predicted = Dichotomy::tie;
};

/// {0.01, 0.05, 0.1, 0.15, ..., 1}
std::vector<double> default_sweep_deltas();

DeltaSweep delta_sweep(const CompactFunction& F, const std::vector<double>& deltas, int grid = 2048, int K = 4096);

/// Same, reusing a report already computed for F with the same grid and K.
DeltaSweep delta_sweep(const CompactFunction& F, const ExtremalReport& report, const std::vector<double>& deltas,
                       int grid = 2048, int K = 4096);

/// max over theta of |sum_{k != 0} 2|k| g_hat(k) e(k theta)| for the majorant
/// g = chi_{I_delta} * f_delta, where I_delta widens I by delta/2 at both
/// ends. The series is summed to ceil(K / delta) terms. Zero when I_delta
/// covers the circle, since g is then constant.
double g_delta_bound(const CompactFunction& F, double delta, const CircleInterval& interval, int K = 4096,
                     int grid = 2048);

struct OptimalDelta {
  double delta = 0.0;
  double unclamped = 0.0;
  bool clamped = false;     // unclamped value exceeded 1
  bool degenerate = false;  // h = 0
};

/// delta = sqrt(4 c h / (pi N)), clamped to (0, 1].
OptimalDelta optimal_delta(double c, long N, double h);
OptimalDelta optimal_delta(const CompactFunction& F, long N, double h);

/// int_{-1/2}^{1/2} H(F) G / ||F||_1 with G(x) = 2x / sqrt(1 - 4x^2).
/// [0, 1/2 - 1e-4] goes to adaptive Gauss-Kronrod; the rest is taken in
/// u = sqrt(1 - 4x^2), where G dx = -du / 2.
double duality_lower_bound(const CompactFunction& F, double tolerance = 1e-11);

/// max |H((1 - 4x^2)^(-1/2))(x)| over `grid` equispaced points of
/// [-0.45, 0.45], each from the principal-value quadrature at `depth`.
double tricomi_annihilation_check(int grid = 101, int depth = 8);

/// 4t(t^2 - b^2 - x^2) / (((t - b)^2 - x^2)((t + b)^2 - x^2))
double case2_kernel(double theta, double beta, double x);

/// Largest central-difference slope of case2_kernel over x in [1, 50] on a
/// grid of theta in (-1/2, 0) and beta in [0, 1/2]; negative when the kernel
/// is decreasing there.
double case2_max_slope(int samples = 40);

}  // namespace hilbert_et
