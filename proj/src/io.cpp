#include "hilbert_et/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hilbert_et/errors.hpp"

namespace hilbert_et::io {
namespace {

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
  }
}

std::string fmt15(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void dump_into(const json& j, std::ostringstream& os, int indent) {
  const std::string pad(indent + 2, ' '), close(indent, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        break;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << json(it.key()).dump() << ": ";
        dump_into(it.value(), os, indent + 2);
      }
      os << "\n" << close << "}";
      break;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        break;
      }
      bool scalar = true;
      for (const auto& e : j) scalar = scalar && !e.is_structured();
      if (scalar) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          dump_into(j[i], os, indent);
        }
        os << "]";
        break;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        dump_into(j[i], os, indent + 2);
      }
      os << "\n" << close << "]";
      break;
    }
    case json::value_t::number_float:
      os << fmt15(j.get<double>());
      break;
    default:
      os << j.dump();
  }
}

json pair_list(const std::vector<std::pair<double, double>>& v) {
  json a = json::array();
  for (const auto& [x, y] : v) a.push_back({x, y});
  return a;
}

}  // namespace

ComplexPolynomial polynomial_from_json(const json& j) {
  // output of `generate` nests the polynomial
  if (j.is_object() && j.contains("polynomial")) return polynomial_from_json(j.at("polynomial"));
  try {
    if (j.contains("coefficients")) {
      std::vector<cplx> c;
      for (const auto& e : j.at("coefficients")) {
        if (e.is_number()) {
          c.emplace_back(e.get<double>(), 0.0);
        } else {
          if (e.size() != 2) throw InvalidArgument("each coefficient must be [re, im]");
          c.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
      }
      return ComplexPolynomial(std::move(c));
    }
    if (j.contains("roots")) {
      std::vector<std::pair<double, double>> polar;
      for (const auto& r : j.at("roots")) polar.emplace_back(r.at("rho").get<double>(), r.at("theta").get<double>());
      return expand_from_roots(RootSet::from_polar(polar));
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad polynomial description: ") + e.what());
  }
  throw InvalidArgument("polynomial needs a \"coefficients\" or \"roots\" key");
}

ComplexPolynomial read_polynomial(const std::string& path) { return polynomial_from_json(read_file(path)); }

CompactFunction polyline_from_json(const json& j) {
  std::vector<Knot> knots;
  try {
    for (const auto& e : j.at("breakpoints")) {
      if (e.size() != 2) throw InvalidArgument("each breakpoint must be [x, value]");
      knots.push_back({e[0].get<double>(), e[1].get<double>()});
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad polyline description: ") + e.what());
  }
  return CompactFunction::polyline(std::move(knots));
}

CompactFunction read_polyline(const std::string& path) { return polyline_from_json(read_file(path)); }

CompactFunction parse_function(const std::string& spec) {
  if (spec == "triangle") return CompactFunction::triangle();
  if (spec == "magicF") return CompactFunction::magic_f();
  if (spec == "magicG") return CompactFunction::magic_g();
  if (spec == "chebyshev") return CompactFunction::chebyshev();
  if (spec == "outlier") return CompactFunction::outlier();
  if (spec.rfind("mollified:", 0) == 0) {
    const std::string eps = spec.substr(10);
    std::size_t used = 0;
    double e = 0.0;
    try {
      e = std::stod(eps, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != eps.size()) throw InvalidArgument("bad epsilon in '" + spec + "'");
    return CompactFunction::mollified(CompactFunction::magic_f(), e);
  }
  if (spec.rfind("polyline:", 0) == 0) return read_polyline(spec.substr(9));
  throw InvalidArgument("unknown function '" + spec + "'");
}

json to_json(const ConstantTable& t) {
  json j;
  for (const auto& [name, value] : t.entries()) j[name] = value;
  j["ladder_ordered"] = t.ladder_ordered();
  return j;
}

json to_json(const ComplexPolynomial& p) {
  json c = json::array();
  for (const auto& a : p.coefficients()) c.push_back({a.real(), a.imag()});
  json j;
  j["degree"] = p.degree();
  j["coefficients"] = c;
  if (p.factored()) j["roots"] = to_json(*p.factored())["roots"];
  return j;
}

json to_json(const RootSet& r) {
  json a = json::array();
  for (const auto& x : r.roots) a.push_back({{"rho", x.modulus}, {"theta", x.angle}, {"multiplicity", x.multiplicity}});
  return json{{"roots", a}};
}

json to_json(const HeightReport& r) {
  return json{{"h", r.h}, {"H_log", r.H_log}, {"logM", r.logM}, {"jensen", r.jensen}};
}

json to_json(const DiscrepancyResult& r) {
  return json{{"value", r.value},
              {"witness", {{"start", r.witness.start}, {"length", r.witness.length}}},
              {"side", to_string(r.side)},
              {"excess_sup", r.excess_sup},
              {"deficit_sup", r.deficit_sup}};
}

json to_json(const BoundsReport& r) {
  json j{{"discrepancy", r.discrepancy}, {"N", r.N}, {"h", r.h}, {"H_log", r.H_log}, {"ratio", r.ratio}};
  json rhs, ok;
  for (const auto& [k, v] : r.rhs_per_constant) rhs[k] = v;
  for (const auto& [k, v] : r.satisfied) ok[k] = v;
  j["rhs_per_constant"] = rhs;
  j["satisfied"] = ok;
  return j;
}

json to_json(const TransformGrid& g) {
  return json{{"domain", to_string(g.domain)},
              {"sup_norm", g.sup_norm},
              {"argmax", g.argmax},
              {"truncation_K", g.truncation_K},
              {"samples", pair_list(g.samples)}};
}

json to_json(const ExtremalReport& r) {
  return json{{"function", r.function},
              {"mass", r.mass},
              {"norm_line", r.norm_line},
              {"norm_circle", r.norm_circle},
              {"c_of_F", r.c_of_F},
              {"argmax_line", r.argmax_line},
              {"argmax_circle", r.argmax_circle},
              {"dichotomy", to_string(r.dichotomy)},
              {"passes_threshold", r.passes_threshold},
              {"dichotomy_consistent", r.dichotomy_consistent},
              {"truncation_K", r.truncation_K}};
}

json to_json(const DeltaSweep& s) {
  return json{{"deltas", s.deltas},
              {"values", s.values},
              {"sup", s.sup},
              {"sup_delta", s.sup_delta},
              {"endpoint_line", s.endpoint_line},
              {"endpoint_circle", s.endpoint_circle},
              {"limit_probes", pair_list(s.limit_probes)},
              {"predicted", to_string(s.predicted)}};
}

json with_schema(const json& body) {
  json j;
  j["schema"] = kSchema;
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j;
}

std::string dump(const json& j) {
  std::ostringstream os;
  dump_into(j, os, 0);
  os << "\n";
  return os.str();
}

void write_csv(std::ostream& os, const std::vector<std::pair<double, double>>& samples) {
  os << "x,value\n";
  for (const auto& [x, v] : samples) os << fmt15(x) << "," << fmt15(v) << "\n";
}

}  // namespace hilbert_et::io
