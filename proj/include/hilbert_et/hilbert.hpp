#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "hilbert_et/compact_function.hpp"

namespace hilbert_et {

/// f_delta(theta) = sum_k F_delta(theta + k), F_delta(x) = F(x / delta) / delta.
struct PeriodizedFunction {
  CompactFunction base;
  double delta = 1.0;

  PeriodizedFunction(CompactFunction base, double delta);
  double operator()(double theta) const;
};

/// int F(x) e^{-2 pi i t x} dx by quadrature, split at the breakpoints of F.
std::complex<double> fourier_transform_hat(const CompactFunction& F, double t, double tolerance);

/// H(F)(x) = p.v. (1/pi) int F(x - t) / t dt.
///
/// Polylines use the exact log-kernel antiderivative; the closed-form tags
/// return their known transforms; mollified functions convolve the rescaled
/// transform of the base with phi_eps. Throws SingularPoint where the
/// transform is unbounded.
double hilbert_line(const CompactFunction& F, double x);

struct PvEstimate {
  double value = 0.0;
  double error = 0.0;  // disagreement between coarse and fine extrapolations
};

/// (1/pi) int_{eps <= |t|} F(x - t) / t dt for each eps of a decreasing
/// schedule (tanh-sinh at `depth` levels, split where x -+ t meets a
/// breakpoint), extrapolated to eps = 0 in powers eps, eps^3, eps^5, ...
PvEstimate hilbert_line_pv_estimate(const CompactFunction& F, double x, std::span<const double> epsilon_schedule,
                                    int depth = 8);

/// The same estimate as an independent oracle for hilbert_line; throws
/// NumericFailure when the extrapolation has not settled to 1e-6.
double hilbert_line_pv_quadrature(const CompactFunction& F, double x, std::span<const double> epsilon_schedule,
                                  int depth = 8);

/// Five halvings starting at an eighth of the distance from x to the nearest
/// breakpoint of F.
std::vector<double> default_pv_schedule(const CompactFunction& F, double x);

struct PeriodicValue {
  double value = 0.0;
  double tail_bound = 0.0;
  bool truncation_warning = false;
  int K = 0;
};

/// Truncated multiplier series 2 sum_{k=1}^{K} Im(F_hat(delta k) e(k theta)).
class MultiplierSeries {
 public:
  MultiplierSeries(const PeriodizedFunction& pf, int K);

  double operator()(double theta) const;
  int K() const { return static_cast<int>(coeffs_.size()); }
  /// 2 K max_{K/2 < k <= K} |F_hat(delta k)|
  double tail_bound() const { return tail_; }

 private:
  std::vector<std::complex<double>> coeffs_;
  double tail_ = 0.0;
};

PeriodicValue hilbert_periodic(const PeriodizedFunction& pf, double theta, int K,
                               double tail_tolerance = 1e-4);

/// Exact periodic transform of a periodized polyline via the Clausen
/// function; throws InvalidArgument for other forms.
double hilbert_periodic_exact(const PeriodizedFunction& pf, double theta);

/// H(f_delta) by the most accurate available route: exact for polylines,
/// otherwise the multiplier series with ceil(K / delta) terms.
class CircleTransform {
 public:
  explicit CircleTransform(const PeriodizedFunction& pf, int K = 4096);

  double operator()(double theta) const;
  bool exact() const { return !series_; }
  int truncation_K() const { return series_ ? series_->K() : 0; }
  double tail_bound() const { return series_ ? series_->tail_bound() : 0.0; }
  const PeriodizedFunction& function() const { return pf_; }

 private:
  PeriodizedFunction pf_;
  std::shared_ptr<const MultiplierSeries> series_;
};

/// H(F)(theta/delta) + (delta/pi) sum_{k=1}^{K} int_0^{delta/2} f_delta(a)
/// 4 theta (theta^2 - a^2 - k^2) / (((theta - a)^2 - k^2)((theta + a)^2 - k^2)) da,
/// plus the k^-2 and k^-4 terms of the tail beyond K.
double lemma4_rhs(const CompactFunction& F, double delta, double theta, int K = 256);

/// (1/pi)(1/a + sum_{k<=K} 2a / (a^2 - k^2)), which tends to cot(pi a).
double cot_expansion_check(double alpha, long K);

enum class Domain { line, circle };

const char* to_string(Domain d);

struct TransformGrid {
  Domain domain = Domain::line;
  std::vector<std::pair<double, double>> samples;
  double sup_norm = 0.0;
  double argmax = 0.0;
  int truncation_K = 0;
};

/// Samples of `transform` on the given points, then golden-section
/// refinement of |transform| in the five best brackets.
TransformGrid sup_search(Domain domain, const std::function<double(double)>& transform, std::vector<double> points,
                         double x_tol = 1e-10);

/// H(F) on [lo, hi] with M points.
TransformGrid line_transform_grid(const CompactFunction& F, int M = 2048, double lo = -2.0, double hi = 2.0);

/// H(f_delta) on [-1/2, 1/2) with M points, plus M more on [-2 delta, 2 delta]
/// when delta is small.
TransformGrid circle_transform_grid(const CircleTransform& transform, int M = 2048);

}  // namespace hilbert_et
