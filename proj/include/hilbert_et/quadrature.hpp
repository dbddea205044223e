#pragma once

#include <functional>
#include <span>
#include <vector>

namespace hilbert_et::quad {

using Integrand = std::function<double(double)>;

struct Result {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

struct AdaptiveOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_intervals = 4000;
};

/// Globally adaptive 21-point Gauss-Kronrod over [a, b], split first at
/// `breakpoints` (points outside (a, b) are ignored). Throws NumericFailure
/// carrying the worst subinterval if the tolerance is not reached.
Result gauss_kronrod(const Integrand& f, double a, double b,
                     std::span<const double> breakpoints = {},
                     const AdaptiveOptions& opts = {});

/// Single 21-point Kronrod panel, no adaptivity.
double kronrod21(const Integrand& f, double a, double b);

struct TanhSinhOptions {
  double tol = 1e-12;
  int max_level = 8;
  // Level at which refinement may stop; with tol = 0 the rule runs to max_level.
  int min_level = 3;
};

/// Double-exponential rule on [a, b]; tolerates integrable endpoint
/// singularities (log, inverse square root). Nodes that round onto an
/// endpoint are skipped.
Result tanh_sinh(const Integrand& f, double a, double b, const TanhSinhOptions& opts = {});

/// Same rule applied piecewise between consecutive sorted cut points.
Result tanh_sinh_pieces(const Integrand& f, std::span<const double> cuts,
                        const TanhSinhOptions& opts = {});

/// Golden-section search for a local maximum of g on [a, b].
struct Extremum {
  double x = 0.0;
  double value = 0.0;
};
Extremum golden_max(const Integrand& g, double a, double b, double x_tol = 1e-10);

/// Limit at eps -> 0 of samples I(eps) modelled as I0 + sum_j c_j eps^{p_j}.
/// The model is fitted through the smallest-eps samples and again through
/// the largest; the gap between the two intercepts is the error estimate.
struct Extrapolation {
  double value = 0.0;
  double error = 0.0;
};
Extrapolation extrapolate_to_zero(std::span<const double> eps, std::span<const double> values,
                                  std::span<const double> powers);

/// Sorted, de-duplicated cut list {a, interior points..., b}.
std::vector<double> make_cuts(double a, double b, std::span<const double> interior,
                              double min_gap = 1e-14);

}  // namespace hilbert_et::quad
