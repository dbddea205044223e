#pragma once

#include <map>
#include <string>
#include <vector>

#include "hilbert_et/polynomial.hpp"

namespace hilbert_et {

/// Arc [start, start + length] on R/Z, wrapping past 1.
struct CircleInterval {
  double start = 0.0;
  double length = 0.0;
};

enum class DiscrepancySide { excess, deficit };

const char* to_string(DiscrepancySide side);

struct DiscrepancyResult {
  double value = 0.0;
  CircleInterval witness;
  DiscrepancySide side = DiscrepancySide::excess;
  double excess_sup = 0.0;   // sup over closed arcs of N(I) - |I| N
  double deficit_sup = 0.0;  // sup over open arcs of |I| N - N(I)
};

/// sup_I |N(I) - |I| N| over arcs of R/Z, exact, by an O(N^2) scan of the
/// sorted angles. The excess side is evaluated on closed arcs between data
/// points, the deficit side on open ones, so both suprema are attained.
DiscrepancyResult discrepancy_exact(const std::vector<double>& angles);

/// Brute-force lower bound for the discrepancy: closed arcs whose endpoints
/// run over the uniform grid of `resolution` points and every data angle
/// shifted by +-1e-12.
double discrepancy_grid_oracle(const std::vector<double>& angles, int resolution);

struct BoundsReport {
  double discrepancy = 0.0;
  int N = 0;
  double h = 0.0;
  double H_log = 0.0;
  std::map<std::string, double> rhs_per_constant;
  double ratio = 0.0;  // D / sqrt(N h)
  std::map<std::string, bool> satisfied;
};

/// Roots, exact discrepancy and heights of p compared against every
/// historical constant. The Erdos-Turan constant 16 is paired with
/// sqrt(N log H(P)); the others with sqrt(N h(P)).
BoundsReport bounds_report(const ComplexPolynomial& p, double tolerance = 1e-10);

struct RealRootBound {
  int count = 0;   // roots with angle 0 or 1/2
  double bound = 0.0;  // 2 D(P)
  bool holds = true;
};

RealRootBound real_root_bound(const RootSet& roots, const DiscrepancyResult& disc);

}  // namespace hilbert_et
