#include "hilbert_et/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hilbert_et/constants.hpp"
#include "hilbert_et/errors.hpp"
#include "hilbert_et/heights.hpp"

namespace hilbert_et {
namespace {

std::vector<double> sorted_angles(const std::vector<double>& angles) {
  if (angles.empty()) throw InvalidArgument("angle list must be non-empty");
  std::vector<double> t;
  t.reserve(angles.size());
  for (double a : angles) {
    if (!std::isfinite(a)) throw InvalidArgument("angles must be finite");
    t.push_back(normalize_angle(a));
  }
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

const char* to_string(DiscrepancySide side) {
  return side == DiscrepancySide::excess ? "excess" : "deficit";
}

DiscrepancyResult discrepancy_exact(const std::vector<double>& angles) {
  const auto t = sorted_angles(angles);
  const int n = static_cast<int>(t.size());
  const double dn = n;

  double best_excess = -std::numeric_limits<double>::infinity();
  CircleInterval excess_arc;
  double best_deficit = -std::numeric_limits<double>::infinity();
  CircleInterval deficit_arc;

  for (int i = 0; i < n; ++i) {
    // closed [t_i, t_{i+m}] holds at least m+1 points
    for (int m = 0; m < n; ++m) {
      const int j = i + m;
      const double len = j < n ? t[j] - t[i] : t[j - n] + 1.0 - t[i];
      const double e = (m + 1) - dn * len;
      if (e > best_excess) {
        best_excess = e;
        excess_arc = {t[i], len};
      }
    }
    // open (t_i, t_{i+m}) holds at most m-1 points
    for (int m = 1; m <= n; ++m) {
      const int j = i + m;
      const double len = j < n ? t[j] - t[i] : t[j - n] + 1.0 - t[i];
      const double d = dn * len - (m - 1);
      if (d > best_deficit) {
        best_deficit = d;
        deficit_arc = {t[i], len};
      }
    }
  }

  DiscrepancyResult r;
  r.excess_sup = best_excess;
  r.deficit_sup = best_deficit;
  bool use_deficit = best_deficit > best_excess + 1e-12;
  if (std::abs(best_deficit - best_excess) <= 1e-12) use_deficit = deficit_arc.start < excess_arc.start;
  if (use_deficit) {
    r.value = best_deficit;
    r.witness = deficit_arc;
    r.side = DiscrepancySide::deficit;
  } else {
    r.value = best_excess;
    r.witness = excess_arc;
    r.side = DiscrepancySide::excess;
  }
  return r;
}

double discrepancy_grid_oracle(const std::vector<double>& angles, int resolution) {
  if (resolution < 1000) throw InvalidArgument("resolution must be at least 1000");
  const auto t = sorted_angles(angles);
  const int n = static_cast<int>(t.size());

  std::vector<double> cand;
  cand.reserve(resolution + 2 * n);
  for (int j = 0; j < resolution; ++j) cand.push_back(static_cast<double>(j) / resolution);
  for (double a : t) {
    cand.push_back(normalize_angle(a - 1e-12));
    cand.push_back(normalize_angle(a + 1e-12));
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  const int c = static_cast<int>(cand.size());

  // le[k] = #{t <= cand[k]}, lt[k] = #{t < cand[k]}
  std::vector<int> le(c), lt(c);
  for (int k = 0; k < c; ++k) {
    le[k] = static_cast<int>(std::upper_bound(t.begin(), t.end(), cand[k]) - t.begin());
    lt[k] = static_cast<int>(std::lower_bound(t.begin(), t.end(), cand[k]) - t.begin());
  }

  // For a fixed start the count depends on the end only through le[], so the
  // maximum of |count - N len| over a run of equal le[] sits at one of the
  // run's two ends.
  std::vector<int> ends;
  for (int k = 0; k < c; ++k)
    if (k == 0 || k == c - 1 || le[k] != le[k - 1] || le[k] != le[k + 1]) ends.push_back(k);

  const double dn = n;
  double best = 0.0;
  auto consider = [&](int a, int b) {
    int count;
    double len;
    if (b >= a) {
      count = le[b] - lt[a];
      len = cand[b] - cand[a];
    } else {
      count = n - lt[a] + le[b];
      len = 1.0 - cand[a] + cand[b];
    }
    best = std::max(best, std::abs(count - dn * len));
  };
  for (int a = 0; a < c; ++a) {
    for (int b : ends) consider(a, b);
    consider(a, a);
    consider(a, (a + c - 1) % c);
  }
  return best;
}

BoundsReport bounds_report(const ComplexPolynomial& p, double tolerance) {
  const RootSet roots = find_roots(p, tolerance);
  const auto disc = discrepancy_exact(roots.angles());
  const auto& k = standard_constants();

  BoundsReport r;
  r.discrepancy = disc.value;
  r.N = p.degree();
  r.h = height_h(p, tolerance);
  r.H_log = height_H(p, 2048);
  const double nh = std::sqrt(r.N * r.h);
  r.ratio = nh > 0.0 ? r.discrepancy / nh : std::numeric_limits<double>::infinity();

  const std::pair<const char*, double> constants[] = {{"c_ganelius", k.c_ganelius},
                                                      {"c_sound", k.c_sound},
                                                      {"c_triangle_discrepancy", k.c_triangle_discrepancy},
                                                      {"c_new", k.c_new},
                                                      {"c_lower", k.c_lower}};
  const auto record = [&r](const std::string& name, double rhs) {
    r.rhs_per_constant[name] = rhs;
    r.satisfied[name] = r.discrepancy <= rhs * (1.0 + 1e-9) + 1e-12;
  };
  record("c_erdos_turan", k.c_erdos_turan * std::sqrt(r.N * r.H_log));
  for (const auto& [name, c] : constants) record(name, c * nh);
  return r;
}

RealRootBound real_root_bound(const RootSet& roots, const DiscrepancyResult& disc) {
  RealRootBound r;
  for (const auto& root : roots.roots) {
    const double a = root.angle;
    if (a <= 1e-9 || a >= 1.0 - 1e-9 || std::abs(a - 0.5) <= 1e-9) ++r.count;
  }
  r.bound = 2.0 * disc.value;
  r.holds = r.count <= r.bound;
  return r;
}

}  // namespace hilbert_et
