// One PASS/FAIL line per acceptance criterion.
//   acceptance [--criterion N]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hilbert_et/constants.hpp"
#include "hilbert_et/discrepancy.hpp"
#include "hilbert_et/extremal.hpp"
#include "hilbert_et/families.hpp"
#include "hilbert_et/heights.hpp"
#include "hilbert_et/hilbert.hpp"

using namespace hilbert_et;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// The printed decimals are truncated, so the value has to start with them.
bool starts_with_decimals(double value, double printed, int places) {
  const double s = std::pow(10.0, places);
  return std::floor(value * s + 1e-9) == std::floor(printed * s + 1e-6);
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto t = table(1e-12);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::pair<const char*, std::pair<double, double>> rows[] = {
      {"Catalan", {t.catalan, 0.9159}},         {"Ganelius", {t.c_ganelius, 2.5619}},
      {"8/pi", {t.c_sound, 2.5464}},            {"4/sqrt(pi)", {t.c_new, 2.2567}},
      {"lower", {t.c_lower, 1.75936}},          {"threshold", {t.c_threshold, 2.43107}},
      {"triangle", {t.c_triangle, 1.12219}},    {"triangle discrepancy", {t.c_triangle_discrepancy, 2.3906}},
  };
  for (const auto& [name, v] : rows)
    o.require(starts_with_decimals(v.first, v.second, 4),
              std::string(name) + fmt(" = %.8f, printed %.5f", v.first, v.second));
  o.require(secs < 1.0, fmt("took %.2f s", secs));
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto g = line_transform_grid(CompactFunction::triangle());
  const double want = 4.0 / pi * std::log(1.0 + std::sqrt(2.0));
  o.require(std::abs(g.sup_norm - want) <= 1e-6, fmt("sup %.10f vs %.10f", g.sup_norm, want));
  o.require(std::abs(g.argmax - 1.0 / std::sqrt(8.0)) <= 1e-6, fmt("argmax %.10f", g.argmax));
  return o;
}

// Closed forms written out here, independent of the library's own.
double magic_g_transform(double x) {
  if (std::abs(x) < 0.5) return -1.0;
  return -1.0 + std::abs(2.0 * x) / std::sqrt(4.0 * x * x - 1.0);
}

double magic_f_transform(double x) {
  if (std::abs(x) < 0.5) return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0);
  const double s = x > 0 ? 1.0 : -1.0;
  return s * (2.0 / pi) * std::atan(1.0 / std::sqrt(4.0 * x * x - 1.0));
}

Outcome criterion3() {
  Outcome o;
  std::vector<double> xs;
  for (int j = 0; j < 50; ++j) xs.push_back(-0.49 + 0.98 * (j + 0.5) / 50);
  for (int j = 0; j < 10; ++j) {
    xs.push_back(0.55 + 0.15 * j);
    xs.push_back(-0.55 - 0.15 * j);
  }
  const auto G = CompactFunction::magic_g(), F = CompactFunction::magic_f();
  double eg = 0.0, ef = 0.0;
  for (double x : xs) {
    eg = std::max(eg, std::abs(hilbert_line_pv_quadrature(G, x, default_pv_schedule(G, x)) - magic_g_transform(x)));
    ef = std::max(ef, std::abs(hilbert_line_pv_quadrature(F, x, default_pv_schedule(F, x)) - magic_f_transform(x)));
  }
  o.require(eg <= 1e-4, fmt("H(G) error %.2e", eg));
  o.require(ef <= 1e-4, fmt("H(F) error %.2e", ef));
  return o;
}

Outcome criterion4() {
  Outcome o;
  double prev = INFINITY;
  for (double eps : {0.2, 0.1, 0.05}) {
    const double c = c_functional(CompactFunction::mollified(CompactFunction::magic_f(), eps)).c_of_F;
    o.require(std::abs(c - 1.0 / (1.0 - eps)) <= 1e-3, fmt("eps %.2f: c = %.6f", eps, c));
    o.require(c < prev && c > 1.0, fmt("not monotone at eps %.2f", eps));
    prev = c;
  }
  return o;
}

CompactFunction random_polyline(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int m = 1 + static_cast<int>(u(rng) * 4);
  std::vector<double> xs;
  for (int i = 0; i < m; ++i) xs.push_back(0.03 + 0.44 * (i + u(rng)) / m);
  std::vector<Knot> knots{{-0.5, 0.0}};
  std::vector<double> vals;
  for (int i = 0; i < m; ++i) vals.push_back(u(rng));
  for (int i = m - 1; i >= 0; --i) knots.push_back({-xs[i], vals[i]});
  knots.push_back({0.0, 0.1 + u(rng)});
  for (int i = 0; i < m; ++i) knots.push_back({xs[i], vals[i]});
  knots.push_back({0.5, 0.0});
  double mass = 0.0;
  for (std::size_t i = 1; i < knots.size(); ++i)
    mass += 0.5 * (knots[i].value + knots[i - 1].value) * (knots[i].x - knots[i - 1].x);
  for (auto& k : knots) k.value /= mass;
  return CompactFunction::polyline(std::move(knots));
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto F = random_polyline(rng);
    const double pairing = duality_lower_bound(F);
    const double norm = line_transform_grid(F).sup_norm / F.l1_norm();
    o.require(std::abs(pairing - 1.0) <= 1e-4, fmt("pairing %.8f", pairing));
    o.require(norm >= 1.0 - 1e-4, fmt("norm %.8f", norm));
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<double> deltas{0.01};
  for (int i = 1; i <= 20; ++i) deltas.push_back(i == 20 ? 1.0 : 0.05 * i);
  {
    const auto T = CompactFunction::triangle();
    const auto r = c_functional(T);
    const auto s = delta_sweep(T, r, deltas);
    o.require(r.dichotomy == Dichotomy::line_dominant, "triangle not line-dominant");
    o.require(s.sup <= r.c_of_F + 1e-3, fmt("triangle sweep sup %.6f vs %.6f", s.sup, r.c_of_F));
    o.require(std::abs(s.limit_probes.back().second - r.c_of_F) <= 1e-3,
              fmt("triangle small-delta value %.6f", s.limit_probes.back().second));
  }
  {
    const auto P = CompactFunction::outlier();
    const auto r = c_functional(P);
    const auto s = delta_sweep(P, r, deltas);
    o.require(r.dichotomy == Dichotomy::circle_dominant, "outlier not circle-dominant");
    o.require(s.sup <= r.c_of_F + 1e-3, fmt("outlier sweep sup %.6f vs %.6f", s.sup, r.c_of_F));
    o.require(std::abs(s.values.back() - r.c_of_F) <= 1e-3, fmt("outlier value at 1: %.6f", s.values.back()));
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto T = CompactFunction::triangle();
  double worst = 0.0;
  for (int i = 1; i <= 10; ++i) {
    const double delta = 0.1 * i;
    const CircleTransform ct(PeriodizedFunction(T, delta));
    for (int j = -9; j <= 9; ++j) {
      const double th = 0.05 * j;
      worst = std::max(worst, std::abs(delta * ct(th) - lemma4_rhs(T, delta, th)));
    }
  }
  o.require(worst <= 1e-3, fmt("max error %.2e", worst));
  return o;
}

Outcome criterion8() {
  Outcome o;
  // 3 sqrt(3) L(2, chi_3) / (4 pi), L(2, chi_3) summed here by pairs
  double L = 0.0;
  for (long n = 0; n < 2000000; ++n) {
    const double a = 3.0 * n + 1, b = 3.0 * n + 2;
    L += 1.0 / (a * a) - 1.0 / (b * b);
  }
  const double smyth = 3.0 * std::sqrt(3.0) * L / (4.0 * pi);
  for (int N : {5, 20, 100}) {
    const auto p = generate_family(FamilyKind::power_of_linear, N, 0);
    const double D = discrepancy_exact(find_roots(p, 1e-10).angles()).value;
    const double h = height_h(p, 1e-10);
    o.require(D == N, fmt("N = %g: D = %.12g", N, D));
    o.require(std::abs(h / N - smyth) <= 1e-8, fmt("N = %g: h/N = %.12f", N, h / N));
    o.require(std::abs(D / std::sqrt(N * h) - 1.75936) <= 1e-4, fmt("N = %g: ratio %.8f", N, D / std::sqrt(N * h)));
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> degree(1, 50);
  const double c = 4.0 / std::sqrt(pi);
  int bad_d = 0, bad_m = 0, bad_r = 0;
  for (int i = 0; i < 200; ++i) {
    const auto p = generate_family(FamilyKind::random_unit, degree(rng), rng());
    const double D = discrepancy_exact(p.factored()->angles()).value;
    if (D > c * std::sqrt(p.degree() * height_h(p, 1e-10)) + 1e-9) ++bad_d;
  }
  for (int i = 0; i < 200; ++i) {
    const auto p = generate_family(FamilyKind::random_disk, degree(rng), rng());
    double logM = 0.0;
    for (const auto& r : p.factored()->roots) logM += std::abs(std::log(r.modulus));
    if (logM > 2.0 * height_h(p, 1e-10) + 1e-7) ++bad_m;
  }
  for (int i = 0; i < 200; ++i) {
    const auto p = generate_family(FamilyKind::random_real, degree(rng), rng());
    const auto disc = discrepancy_exact(p.factored()->angles());
    int real = 0;
    for (const auto& r : p.factored()->roots) {
      const double f = r.angle;
      if (f == 0.0 || f == 0.5) ++real;
    }
    if (real > 2.0 * disc.value) ++bad_r;
  }
  o.require(bad_d == 0, fmt("%g discrepancy violations", bad_d));
  o.require(bad_m == 0, fmt("%g Mahler violations", bad_m));
  o.require(bad_r == 0, fmt("%g real-root violations", bad_r));
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> size(1, 200);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    std::vector<double> a(size(rng));
    for (auto& x : a) x = u(rng);
    const double exact = discrepancy_exact(a).value;
    const double oracle = discrepancy_grid_oracle(a, 10000);
    o.require(oracle <= exact + 1e-9, fmt("oracle %.6f above exact %.6f", oracle, exact));
    o.require(exact <= oracle + a.size() / 1e4 + 1e-9, fmt("exact %.6f beyond oracle %.6f", exact, oracle));
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  const double m = tricomi_annihilation_check(101);
  o.require(m <= 1e-3, fmt("max %.2e", m));
  return o;
}

struct Criterion {
  const char* title;
  Outcome (*run)();
  double budget_s;
};

const Criterion kCriteria[] = {
    {"constants ladder", criterion1, 1},       {"triangle certificate", criterion2, 1},
    {"magic closed forms", criterion3, 30},    {"mollified family", criterion4, 120},
    {"duality floor", criterion5, 60},         {"endpoint law", criterion6, 120},
    {"rescaling identity", criterion7, 120},   {"power of linear", criterion8, 30},
    {"property suite", criterion9, 300},       {"discrepancy oracle", criterion10, 60},
    {"Tricomi annihilation", criterion11, 30},
};

bool run(int n) {
  const auto& c = kCriteria[n - 1];
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < c.budget_s, fmt("over the %g s budget", c.budget_s));
  std::printf("%s criterion %2d %-22s %7.2fs%s%s\n", o.pass ? "PASS" : "FAIL", n, c.title, secs,
              o.note.empty() ? "" : "  ", o.note.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      which.push_back(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
      return 2;
    }
  }
  if (which.empty())
    for (int n = 1; n <= 11; ++n) which.push_back(n);
  bool all = true;
  for (int n : which) {
    if (n < 1 || n > 11) {
      std::fprintf(stderr, "no criterion %d\n", n);
      return 2;
    }
    all = run(n) && all;
  }
  return all ? 0 : 1;
}
