#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hilbert_et/constants.hpp"
#include "hilbert_et/discrepancy.hpp"
#include "hilbert_et/errors.hpp"
#include "hilbert_et/extremal.hpp"
#include "hilbert_et/families.hpp"
#include "hilbert_et/heights.hpp"
#include "hilbert_et/hilbert.hpp"
#include "hilbert_et/io.hpp"
#include "hilbert_et/verify.hpp"

using namespace hilbert_et;
using io::json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kNumeric = 3 };

struct Options {
  std::string input;
  std::string out;
  std::string format = "json";
  double tol = 1e-8;
  int grid = 2048;
  int K = 4096;
  std::uint64_t seed = 20210304;

  // polynomial source when no --input is given
  std::string family;
  int degree = 0;

  std::string function = "triangle";
  std::string domain = "line";
  double delta = 1.0;
  std::string report;
  std::string sweep;
};

RunConfig config_of(const Options& o) {
  RunConfig c;
  c.tolerance = o.tol;
  c.grid = o.grid;
  c.series_K = o.K;
  c.seed = o.seed;
  c.output_format = o.format == "csv" ? OutputFormat::csv : OutputFormat::json;
  c.validate();
  return c;
}

// `--out csv` and `--out json` pick the format; anything else is a path.
void resolve_out(Options& o) {
  if (o.out == "csv" || o.out == "json") {
    o.format = o.out;
    o.out.clear();
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InvalidArgument("cannot write '" + o.out + "'");
  f << text;
}

void emit_json(const Options& o, const json& body) { emit(o, io::dump(io::with_schema(body))); }

ComplexPolynomial load_polynomial(const Options& o) {
  if (!o.input.empty()) return io::read_polynomial(o.input);
  if (!o.family.empty()) {
    if (o.degree < 1) throw InvalidArgument("--family needs --degree N >= 1");
    return generate_family(parse_family_kind(o.family), o.degree, o.seed);
  }
  throw InvalidArgument("give --input FILE or --family KIND --degree N");
}

int cmd_constants(const Options& o) {
  emit_json(o, json{{"constants", io::to_json(table(config_of(o).tolerance))}});
  return kOk;
}

int cmd_heights(const Options& o) {
  const auto cfg = config_of(o);
  const auto p = load_polynomial(o);
  emit_json(o, json{{"degree", p.degree()}, {"heights", io::to_json(height_report(p, cfg.tolerance, cfg.grid))}});
  return kOk;
}

int cmd_discrepancy(const Options& o) {
  const auto cfg = config_of(o);
  const auto p = load_polynomial(o);
  if (o.report == "bounds") {
    emit_json(o, json{{"bounds", io::to_json(bounds_report(p, std::max(cfg.tolerance, 1e-12)))}});
    return kOk;
  }
  if (!o.report.empty()) throw InvalidArgument("--report takes 'bounds'");
  const auto roots = find_roots(p, 1e-10);
  const auto d = discrepancy_exact(roots.angles());
  const auto r = real_root_bound(roots, d);
  emit_json(o, json{{"degree", p.degree()},
                    {"discrepancy", io::to_json(d)},
                    {"real_roots", {{"count", r.count}, {"bound", r.bound}, {"holds", r.holds}}}});
  return kOk;
}

int cmd_hilbert(const Options& o) {
  const auto cfg = config_of(o);
  const auto F = io::parse_function(o.function);
  TransformGrid g;
  if (o.domain == "line") {
    g = line_transform_grid(F, cfg.grid);
  } else if (o.domain == "circle") {
    g = circle_transform_grid(CircleTransform(PeriodizedFunction(F, o.delta), cfg.series_K), cfg.grid);
  } else {
    throw InvalidArgument("--domain takes line or circle");
  }
  if (cfg.output_format == OutputFormat::csv) {
    std::ostringstream os;
    io::write_csv(os, g.samples);
    emit(o, os.str());
  } else {
    emit_json(o, json{{"function", F.name()}, {"delta", o.delta}, {"transform", io::to_json(g)}});
  }
  return kOk;
}

int cmd_extremal(const Options& o) {
  const auto cfg = config_of(o);
  const auto F = io::parse_function(o.function);
  const auto r = c_functional(F, cfg.grid, cfg.series_K);
  json body{{"report", io::to_json(r)}};
  if (o.sweep == "delta") {
    body["sweep"] = io::to_json(delta_sweep(F, r, default_sweep_deltas(), cfg.grid, cfg.series_K));
  } else if (!o.sweep.empty()) {
    throw InvalidArgument("--sweep takes 'delta'");
  }
  emit_json(o, body);
  return kOk;
}

json checks_json(const VerificationSuiteResult& r) {
  json a = json::array();
  for (const auto& c : r.checks) {
    json e{{"criterion", c.criterion}, {"name", c.name},         {"expected", c.expected},
           {"computed", c.computed},   {"tolerance", c.tolerance}, {"pass", c.pass}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    a.push_back(e);
  }
  return json{{"checks", a}, {"overall", r.overall}};
}

int report_suite(const Options& o, const VerificationSuiteResult& r) {
  if (!o.out.empty()) emit_json(o, checks_json(r));
  std::cout << (r.overall ? "overall: PASS\n" : "overall: FAIL\n");
  return r.overall ? kOk : kCheckFailed;
}

int cmd_certify(const Options& o) { return report_suite(o, run_certificate(config_of(o), &std::cout)); }

int cmd_verify(const Options& o) { return report_suite(o, run_verify_paper(config_of(o), &std::cout)); }

int cmd_generate(const Options& o) {
  if (o.family.empty()) throw InvalidArgument("generate needs --family");
  if (o.degree < 1) throw InvalidArgument("generate needs --degree N >= 1");
  const auto p = generate_family(parse_family_kind(o.family), o.degree, o.seed);
  emit_json(o, json{{"family", o.family}, {"seed", o.seed}, {"polynomial", io::to_json(p)}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrepancy of polynomial roots and Hilbert-transform extremal constants"};
  app.require_subcommand(1);
  Options o;

  app.add_option("--input", o.input, "polynomial JSON file");
  app.add_option("--out", o.out, "output file, or csv/json to choose the format");
  app.add_option("--tol", o.tol, "numerical tolerance")->check(CLI::PositiveNumber);
  app.add_option("--grid", o.grid, "sample grid size")->check(CLI::Range(64, 1 << 22));
  app.add_option("--K", o.K, "multiplier series length")->check(CLI::Range(64, 1 << 24));
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.fallthrough();

  auto add_poly_source = [&o](CLI::App* sub) {
    sub->add_option("--family", o.family, "cyclotomic | power-of-linear | random-unit | random-disk | random-real");
    sub->add_option("--degree,-N", o.degree, "degree for --family");
  };
  auto add_function = [&o](CLI::App* sub) {
    sub->add_option("--function", o.function,
                    "triangle | magicF | magicG | chebyshev | outlier | mollified:EPS | polyline:FILE");
  };

  auto* constants = app.add_subcommand("constants", "table of constants");
  auto* heights = app.add_subcommand("heights", "heights h, log H, log M of a polynomial");
  add_poly_source(heights);
  auto* discrepancy = app.add_subcommand("discrepancy", "angular discrepancy of the roots");
  add_poly_source(discrepancy);
  discrepancy->add_option("--report", o.report, "'bounds' compares against every constant");
  auto* hilbert = app.add_subcommand("hilbert", "samples of a Hilbert transform");
  add_function(hilbert);
  hilbert->add_option("--domain", o.domain, "line or circle");
  hilbert->add_option("--delta", o.delta, "dilation for the circle")->check(CLI::Range(1e-6, 1.0));
  auto* extremal = app.add_subcommand("extremal", "C(F) report and delta sweep");
  add_function(extremal);
  extremal->add_option("--sweep", o.sweep, "'delta' adds the delta sweep");
  auto* certify = extremal->add_subcommand("certify", "duality and mollified-family certificate");
  auto* verify = app.add_subcommand("verify-paper", "run the acceptance checks");
  auto* generate = app.add_subcommand("generate", "polynomial from a family");
  add_poly_source(generate);

  CLI11_PARSE(app, argc, argv);
  resolve_out(o);

  try {
    if (*constants) return cmd_constants(o);
    if (*heights) return cmd_heights(o);
    if (*discrepancy) return cmd_discrepancy(o);
    if (*hilbert) return cmd_hilbert(o);
    if (*certify) return cmd_certify(o);
    if (*extremal) return cmd_extremal(o);
    if (*verify) return cmd_verify(o);
    if (*generate) return cmd_generate(o);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumeric;
  }
  return kUsage;
}
