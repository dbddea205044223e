#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hilbert_et/constants.hpp"
#include "hilbert_et/discrepancy.hpp"
#include "hilbert_et/errors.hpp"
#include "hilbert_et/extremal.hpp"
#include "hilbert_et/families.hpp"
#include "hilbert_et/heights.hpp"
#include "hilbert_et/hilbert.hpp"
#include "hilbert_et/io.hpp"
#include "hilbert_et/polynomial.hpp"
#include "hilbert_et/verify.hpp"

namespace py = pybind11;
using namespace hilbert_et;

namespace {

CompactFunction function_of(const py::object& f) {
  if (py::isinstance<py::str>(f)) return io::parse_function(f.cast<std::string>());
  return f.cast<CompactFunction>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Root discrepancy bounds and Hilbert-transform extremal constants";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<NumericFailure>(m, "NumericFailure", PyExc_ArithmeticError);

  m.def("constants", [](double tol) {
    py::dict d;
    for (const auto& [k, v] : table(tol).entries()) d[py::str(k)] = v;
    return d;
  }, py::arg("tol") = 1e-12);

  py::class_<Root>(m, "Root")
      .def_readonly("modulus", &Root::modulus)
      .def_readonly("angle", &Root::angle)
      .def_readonly("multiplicity", &Root::multiplicity)
      .def("__repr__", [](const Root& r) {
        std::ostringstream os;
        os << "Root(modulus=" << r.modulus << ", angle=" << r.angle << ")";
        return os.str();
      });

  py::class_<RootSet>(m, "RootSet")
      .def_readonly("roots", &RootSet::roots)
      .def("angles", &RootSet::angles)
      .def("moduli", &RootSet::moduli)
      .def("__len__", &RootSet::degree);

  py::class_<ComplexPolynomial>(m, "Polynomial", "monic, coefficients a_0 .. a_{N-1} ascending")
      .def(py::init<std::vector<cplx>>(), py::arg("coefficients"))
      .def_property_readonly("degree", &ComplexPolynomial::degree)
      .def_property_readonly("coefficients", &ComplexPolynomial::coefficients)
      .def_property_readonly("roots", [](const ComplexPolynomial& p) -> py::object {
        if (p.factored()) return py::cast(*p.factored());
        return py::none();
      })
      .def("__call__", &ComplexPolynomial::evaluate);

  m.def("from_roots", [](const std::vector<std::pair<double, double>>& polar) {
    return expand_from_roots(RootSet::from_polar(polar));
  }, py::arg("polar"), "polynomial with roots rho e(theta), given as (rho, theta) pairs");
  m.def("find_roots", [](const ComplexPolynomial& p, double tol) { return find_roots(p, tol); }, py::arg("p"),
        py::arg("tol") = 1e-10);
  m.def("generate_family", [](const std::string& kind, int N, std::uint64_t seed) {
    return generate_family(parse_family_kind(kind), N, seed);
  }, py::arg("kind"), py::arg("N"), py::arg("seed") = 0);

  py::class_<HeightReport>(m, "HeightReport")
      .def_readonly("h", &HeightReport::h)
      .def_readonly("H_log", &HeightReport::H_log)
      .def_readonly("logM", &HeightReport::logM)
      .def_readonly("jensen", &HeightReport::jensen);
  m.def("height_h", &height_h, py::arg("p"), py::arg("tol") = 1e-10);
  m.def("heights", &height_report, py::arg("p"), py::arg("tol") = 1e-10, py::arg("grid") = 2048);

  py::class_<DiscrepancyResult>(m, "Discrepancy")
      .def_readonly("value", &DiscrepancyResult::value)
      .def_property_readonly("witness", [](const DiscrepancyResult& d) {
        return std::make_pair(d.witness.start, d.witness.length);
      })
      .def_property_readonly("side", [](const DiscrepancyResult& d) { return std::string(to_string(d.side)); })
      .def_readonly("excess_sup", &DiscrepancyResult::excess_sup)
      .def_readonly("deficit_sup", &DiscrepancyResult::deficit_sup);
  m.def("discrepancy", &discrepancy_exact, py::arg("angles"));
  m.def("discrepancy_grid_oracle", &discrepancy_grid_oracle, py::arg("angles"), py::arg("resolution") = 10000);

  py::class_<BoundsReport>(m, "BoundsReport")
      .def_readonly("discrepancy", &BoundsReport::discrepancy)
      .def_readonly("N", &BoundsReport::N)
      .def_readonly("h", &BoundsReport::h)
      .def_readonly("H_log", &BoundsReport::H_log)
      .def_readonly("rhs", &BoundsReport::rhs_per_constant)
      .def_readonly("ratio", &BoundsReport::ratio)
      .def_readonly("satisfied", &BoundsReport::satisfied);
  m.def("bounds_report", &bounds_report, py::arg("p"), py::arg("tol") = 1e-10);

  py::class_<CompactFunction>(m, "Function")
      .def_static("parse", &io::parse_function, py::arg("spec"),
                  "triangle, magicF, magicG, chebyshev, outlier, mollified:EPS or polyline:FILE")
      .def_static("polyline", [](const std::vector<std::pair<double, double>>& pts) {
        std::vector<Knot> k;
        for (const auto& [x, v] : pts) k.push_back({x, v});
        return CompactFunction::polyline(std::move(k));
      })
      .def_property_readonly("name", &CompactFunction::name)
      .def_property_readonly("class_A", &CompactFunction::class_A)
      .def_property_readonly("l1_norm", &CompactFunction::l1_norm)
      .def("__call__", &CompactFunction::operator());

  m.def("hilbert_line", [](const py::object& f, double x) { return hilbert_line(function_of(f), x); },
        py::arg("F"), py::arg("x"));
  m.def("hilbert_line_pv", [](const py::object& f, double x) {
    const auto F = function_of(f);
    return hilbert_line_pv_quadrature(F, x, default_pv_schedule(F, x));
  }, py::arg("F"), py::arg("x"));
  m.def("hilbert_circle", [](const py::object& f, double delta, double theta, int K) {
    return CircleTransform(PeriodizedFunction(function_of(f), delta), K)(theta);
  }, py::arg("F"), py::arg("delta"), py::arg("theta"), py::arg("K") = 4096);
  m.def("lemma4_rhs", [](const py::object& f, double delta, double theta) {
    return lemma4_rhs(function_of(f), delta, theta);
  }, py::arg("F"), py::arg("delta"), py::arg("theta"));

  py::class_<ExtremalReport>(m, "ExtremalReport")
      .def_readonly("function", &ExtremalReport::function)
      .def_readonly("mass", &ExtremalReport::mass)
      .def_readonly("norm_line", &ExtremalReport::norm_line)
      .def_readonly("norm_circle", &ExtremalReport::norm_circle)
      .def_readonly("c_of_F", &ExtremalReport::c_of_F)
      .def_readonly("argmax_line", &ExtremalReport::argmax_line)
      .def_readonly("argmax_circle", &ExtremalReport::argmax_circle)
      .def_property_readonly("dichotomy", [](const ExtremalReport& r) { return std::string(to_string(r.dichotomy)); })
      .def_readonly("passes_threshold", &ExtremalReport::passes_threshold);
  m.def("c_functional", [](const py::object& f, int grid, int K) { return c_functional(function_of(f), grid, K); },
        py::arg("F"), py::arg("grid") = 2048, py::arg("K") = 4096);

  m.def("delta_sweep", [](const py::object& f, std::vector<double> deltas, int grid, int K) {
    if (deltas.empty()) deltas = default_sweep_deltas();
    const auto s = delta_sweep(function_of(f), deltas, grid, K);
    py::dict d;
    d["deltas"] = s.deltas;
    d["values"] = s.values;
    d["sup"] = s.sup;
    d["sup_delta"] = s.sup_delta;
    d["predicted"] = std::string(to_string(s.predicted));
    return d;
  }, py::arg("F"), py::arg("deltas") = std::vector<double>{}, py::arg("grid") = 2048, py::arg("K") = 4096);

  m.def("optimal_delta", [](double c, long N, double h) { return optimal_delta(c, N, h).delta; }, py::arg("c"),
        py::arg("N"), py::arg("h"));
  m.def("duality_pairing", [](const py::object& f) { return duality_lower_bound(function_of(f)); }, py::arg("F"));
  m.def("tricomi_check", &tricomi_annihilation_check, py::arg("grid") = 101, py::arg("depth") = 8);

  m.def("verify", [](int criterion, std::uint64_t seed) {
    RunConfig cfg;
    cfg.seed = seed;
    py::list out;
    for (const auto& c : run_criterion(criterion, cfg)) {
      py::dict d;
      d["name"] = c.name;
      d["expected"] = c.expected;
      d["computed"] = c.computed;
      d["tolerance"] = c.tolerance;
      d["pass"] = c.pass;
      d["detail"] = c.detail;
      out.append(d);
    }
    return out;
  }, py::arg("criterion"), py::arg("seed") = 20210304);
}
