#include "hilbert_et/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>

#include "hilbert_et/constants.hpp"
#include "hilbert_et/discrepancy.hpp"
#include "hilbert_et/errors.hpp"
#include "hilbert_et/extremal.hpp"
#include "hilbert_et/families.hpp"
#include "hilbert_et/heights.hpp"
#include "hilbert_et/hilbert.hpp"

namespace hilbert_et {
namespace {

constexpr double kPi = std::numbers::pi;

Check make(int criterion, std::string name, double expected, double computed, double tolerance, bool pass,
           std::string detail = {}) {
  return Check{criterion, std::move(name), expected, computed, tolerance, pass, std::move(detail)};
}

// |computed - expected| <= tolerance
Check near(int criterion, std::string name, double expected, double computed, double tolerance) {
  const bool ok = std::isfinite(computed) && std::abs(computed - expected) <= tolerance;
  return make(criterion, std::move(name), expected, computed, tolerance, ok);
}

// computed <= bound + tolerance
Check at_most(int criterion, std::string name, double bound, double computed, double tolerance) {
  const bool ok = std::isfinite(computed) && computed <= bound + tolerance;
  return make(criterion, std::move(name), bound, computed, tolerance, ok);
}

// Printed decimals are truncations: the computed value must share them.
Check same_decimals(int criterion, std::string name, double printed, double computed, int places) {
  const double scale = std::pow(10.0, places);
  const double lo = std::floor(printed * scale + 1e-6) / scale;
  const bool ok = computed >= lo - 1e-12 && computed < lo + 1.0 / scale;
  return make(criterion, std::move(name), printed, computed, 1.0 / scale, ok);
}

CompactFunction random_unit_polyline(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> count(1, 4);
  std::vector<double> xs;
  const int m = count(rng);
  while (static_cast<int>(xs.size()) < m) {
    const double x = 0.02 + 0.46 * u(rng);
    if (std::all_of(xs.begin(), xs.end(), [x](double y) { return std::abs(x - y) > 1e-3; })) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<Knot> half{{0.0, 0.05 + u(rng)}};
  for (double x : xs) half.push_back({x, u(rng)});
  half.push_back({0.5, 0.0});
  std::vector<Knot> knots;
  for (auto it = half.rbegin(); it != half.rend(); ++it)
    if (it->x > 0.0) knots.push_back({-it->x, it->value});
  knots.insert(knots.end(), half.begin(), half.end());
  double mass = 0.0;
  for (std::size_t i = 1; i < knots.size(); ++i)
    mass += 0.5 * (knots[i].value + knots[i - 1].value) * (knots[i].x - knots[i - 1].x);
  for (auto& k : knots) k.value /= mass;
  return CompactFunction::polyline(std::move(knots));
}

std::vector<Check> constants_ladder(const RunConfig& cfg) {
  const auto t = table(cfg.tolerance);
  const std::pair<const char*, std::pair<double, double>> rows[] = {
      {"catalan", {0.9159, t.catalan}},
      {"c_ganelius", {2.5619, t.c_ganelius}},
      {"c_sound", {2.5464, t.c_sound}},
      {"c_new", {2.2567, t.c_new}},
      {"c_lower", {1.75936, t.c_lower}},
      {"c_threshold", {2.43107, t.c_threshold}},
      {"c_triangle", {1.12219, t.c_triangle}},
      {"c_triangle_discrepancy", {2.3906, t.c_triangle_discrepancy}},
  };
  std::vector<Check> out;
  for (const auto& [name, v] : rows) out.push_back(same_decimals(1, name, v.first, v.second, 4));
  return out;
}

std::vector<Check> triangle_certificate(const RunConfig& cfg) {
  const auto g = line_transform_grid(CompactFunction::triangle(), cfg.grid);
  return {near(2, "triangle sup norm", 4.0 / kPi * std::log(1.0 + std::numbers::sqrt2), g.sup_norm, 1e-6),
          near(2, "triangle argmax", 1.0 / (2.0 * std::numbers::sqrt2), g.argmax, 1e-6)};
}

std::vector<Check> magic_closed_forms(const RunConfig&) {
  std::vector<double> xs;
  for (int j = 0; j < 50; ++j) xs.push_back(-0.49 + 0.98 * (j + 0.5) / 50.0);
  for (int j = 0; j < 10; ++j) {
    xs.push_back(0.6 + 0.1 * j);
    xs.push_back(-0.6 - 0.1 * j);
  }
  std::vector<Check> out;
  for (const auto& F : {CompactFunction::magic_g(), CompactFunction::magic_f()}) {
    double worst = 0.0;
    for (double x : xs) {
      const double pv = hilbert_line_pv_quadrature(F, x, default_pv_schedule(F, x));
      worst = std::max(worst, std::abs(pv - hilbert_line(F, x)));
    }
    out.push_back(at_most(3, "H(" + F.name() + ") closed form vs PV, max error", 0.0, worst, 1e-4));
  }
  return out;
}

std::vector<Check> mollified_family(const RunConfig& cfg) {
  std::vector<Check> out;
  double prev = INFINITY;
  bool decreasing = true;
  for (double eps : {0.2, 0.1, 0.05}) {
    const auto r = c_functional(CompactFunction::mollified(CompactFunction::magic_f(), eps), cfg.grid, cfg.series_K);
    char name[64];
    std::snprintf(name, sizeof name, "c(F_eps), eps = %g", eps);
    out.push_back(near(4, name, 1.0 / (1.0 - eps), r.c_of_F, 1e-3));
    decreasing = decreasing && r.c_of_F < prev && r.c_of_F > 1.0;
    prev = r.c_of_F;
  }
  out.push_back(make(4, "c(F_eps) decreasing toward 1", 1.0, prev, 0.0, decreasing));
  return out;
}

std::vector<Check> duality_floor(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  double worst = 0.0, floor_gap = -INFINITY;
  for (int i = 0; i < 20; ++i) {
    const auto F = random_unit_polyline(rng);
    worst = std::max(worst, std::abs(duality_lower_bound(F) - 1.0));
    const double norm = line_transform_grid(F, cfg.grid).sup_norm / F.l1_norm();
    floor_gap = std::max(floor_gap, 1.0 - norm);
  }
  return {at_most(5, "pairing with G minus 1, worst of 20 polylines", 0.0, worst, 1e-4),
          at_most(5, "1 - ||H(F)||, worst of 20 polylines", 0.0, floor_gap, 1e-4)};
}

std::vector<Check> endpoint_law(const RunConfig& cfg) {
  std::vector<Check> out;
  const auto deltas = default_sweep_deltas();
  for (const auto& F : {CompactFunction::triangle(), CompactFunction::outlier()}) {
    const auto r = c_functional(F, cfg.grid, cfg.series_K);
    const auto s = delta_sweep(F, r, deltas, cfg.grid, cfg.series_K);
    out.push_back(at_most(6, F.name() + ": sweep sup <= c(F)", r.c_of_F, s.sup, 1e-3));
    if (r.dichotomy == Dichotomy::circle_dominant) {
      out.push_back(near(6, F.name() + ": attained at delta = 1", r.c_of_F, s.values.back(), 1e-3));
    } else {
      const double limit = s.limit_probes.back().second;
      out.push_back(near(6, F.name() + ": attained as delta -> 0", r.c_of_F, limit, 1e-3));
    }
  }
  return out;
}

std::vector<Check> rescaling_identity(const RunConfig&) {
  const auto F = CompactFunction::triangle();
  double worst = 0.0;
  for (int i = 1; i <= 10; ++i) {
    const double delta = 0.1 * i;
    const CircleTransform ct(PeriodizedFunction(F, delta));
    for (int j = -9; j <= 9; ++j) {
      const double theta = 0.05 * j;
      worst = std::max(worst, std::abs(delta * ct(theta) - lemma4_rhs(F, delta, theta)));
    }
  }
  return {at_most(7, "rescaling identity, max error on 10 x 19 grid", 0.0, worst, 1e-3)};
}

std::vector<Check> power_of_linear(const RunConfig& cfg) {
  const auto& k = standard_constants();
  std::vector<Check> out;
  for (int N : {5, 20, 100}) {
    const auto p = generate_family(FamilyKind::power_of_linear, N, 0);
    const auto roots = find_roots(p, 1e-10);
    const double D = discrepancy_exact(roots.angles()).value;
    const double h = height_h(p, cfg.tolerance);
    const std::string tag = "(z-1)^" + std::to_string(N);
    out.push_back(near(8, tag + ": D", N, D, 0.0));
    out.push_back(near(8, tag + ": h / N", k.smyth, h / N, 1e-8));
    out.push_back(near(8, tag + ": D / sqrt(N h)", 1.75936, D / std::sqrt(N * h), 1e-4));
  }
  return out;
}

std::vector<Check> property_suite(const RunConfig& cfg) {
  const auto& k = standard_constants();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> degree(1, 50);
  double disc_gap = -INFINITY, mahler_gap = -INFINITY, real_gap = -INFINITY;
  for (int i = 0; i < 200; ++i) {
    const auto p = generate_family(FamilyKind::random_unit, degree(rng), rng());
    const double D = discrepancy_exact(p.factored()->angles()).value;
    disc_gap = std::max(disc_gap, D - k.c_new * std::sqrt(p.degree() * height_h(p, cfg.tolerance)));
  }
  for (int i = 0; i < 200; ++i) {
    const auto p = generate_family(FamilyKind::random_disk, degree(rng), rng());
    mahler_gap = std::max(mahler_gap, height_logM(*p.factored()) - 2.0 * height_h(p, cfg.tolerance));
  }
  for (int i = 0; i < 200; ++i) {
    const auto p = generate_family(FamilyKind::random_real, degree(rng), rng());
    const auto disc = discrepancy_exact(p.factored()->angles());
    const auto r = real_root_bound(*p.factored(), disc);
    real_gap = std::max(real_gap, r.count - r.bound);
  }
  return {at_most(9, "D - (4/sqrt(pi)) sqrt(N h), worst of 200 unit-root samples", 0.0, disc_gap, 1e-9),
          at_most(9, "log M - 2h, worst of 200 disk samples", 0.0, mahler_gap, 1e-7),
          at_most(9, "R - 2D, worst of 200 real samples", 0.0, real_gap, 0.0)};
}

std::vector<Check> oracle_sandwich(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x5eedULL);
  std::uniform_int_distribution<int> size(1, 200);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  constexpr int resolution = 10000;
  double below = -INFINITY, above = -INFINITY;
  for (int i = 0; i < 50; ++i) {
    std::vector<double> a(size(rng));
    for (auto& x : a) x = u(rng);
    const double exact = discrepancy_exact(a).value;
    const double oracle = discrepancy_grid_oracle(a, resolution);
    below = std::max(below, oracle - exact);
    above = std::max(above, exact - oracle - static_cast<double>(a.size()) / resolution);
  }
  return {at_most(10, "oracle - exact, worst of 50 sets", 0.0, below, 1e-9),
          at_most(10, "exact - oracle - N/resolution, worst of 50 sets", 0.0, above, 1e-9)};
}

std::vector<Check> tricomi(const RunConfig&) {
  return {at_most(11, "max |H(chebyshev weight)| on |x| <= 0.45", 0.0, tricomi_annihilation_check(101), 1e-3)};
}

using Runner = std::vector<Check> (*)(const RunConfig&);

constexpr Runner kRunners[] = {constants_ladder, triangle_certificate, magic_closed_forms, mollified_family,
                               duality_floor,    endpoint_law,         rescaling_identity,    power_of_linear,
                               property_suite,   oracle_sandwich,      tricomi};

const char* const kTitles[] = {"constants ladder",      "triangle certificate", "magic closed forms",
                               "mollified family",      "duality floor",        "endpoint law",
                               "rescaling identity",    "power of linear",      "property suite",
                               "discrepancy oracle",    "Tricomi annihilation"};

std::vector<Check> guarded(int criterion, const std::function<std::vector<Check>()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {make(criterion, kTitles[criterion - 1], NAN, NAN, NAN, false, e.what())};
  }
}

VerificationSuiteResult collect(const std::vector<std::function<std::vector<Check>()>>& parts,
                                const std::vector<int>& ids, std::ostream* table) {
  VerificationSuiteResult res;
  res.overall = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (auto& c : guarded(ids[i], parts[i])) {
      if (table) print_check(*table, c);
      res.overall = res.overall && c.pass;
      res.checks.push_back(std::move(c));
    }
  }
  return res;
}

}  // namespace

void RunConfig::validate() const {
  if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
  if (grid < 64) throw InvalidArgument("grid must be at least 64");
  if (series_K < 64) throw InvalidArgument("K must be at least 64");
}

std::vector<Check> run_criterion(int criterion, const RunConfig& config) {
  if (criterion < 1 || criterion > 11) throw InvalidArgument("criteria are numbered 1 to 11");
  config.validate();
  return guarded(criterion, [&] { return kRunners[criterion - 1](config); });
}

VerificationSuiteResult run_verify_paper(const RunConfig& config, std::ostream* table) {
  config.validate();
  std::vector<std::function<std::vector<Check>()>> parts;
  std::vector<int> ids;
  for (int i = 1; i <= 11; ++i) {
    parts.emplace_back([&config, i] { return kRunners[i - 1](config); });
    ids.push_back(i);
  }
  return collect(parts, ids, table);
}

VerificationSuiteResult run_certificate(const RunConfig& config, std::ostream* table) {
  config.validate();
  std::vector<std::function<std::vector<Check>()>> parts;
  parts.emplace_back([] {
    std::vector<Check> out;
    const auto magic = CompactFunction::magic_f();
    std::vector<CompactFunction> fs{CompactFunction::triangle(), magic};
    for (double eps : {0.2, 0.1, 0.05}) fs.push_back(CompactFunction::mollified(magic, eps));
    for (const auto& F : fs) out.push_back(near(5, "pairing with G, " + F.name(), 1.0, duality_lower_bound(F), 1e-5));
    return out;
  });
  parts.emplace_back([&config] { return mollified_family(config); });
  return collect(parts, {5, 4}, table);
}

void print_check(std::ostream& os, const Check& c) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "[%s] %2d  %-58s expected %-16.10g computed %-16.10g tol %.1e", c.pass ? "PASS" : "FAIL",
                c.criterion, c.name.c_str(), c.expected, c.computed, c.tolerance);
  os << buf;
  if (!c.detail.empty()) os << "  (" << c.detail << ")";
  os << "\n";
}

}  // namespace hilbert_et
