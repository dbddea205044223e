#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hilbert_et/compact_function.hpp"
#include "hilbert_et/constants.hpp"
#include "hilbert_et/discrepancy.hpp"
#include "hilbert_et/extremal.hpp"
#include "hilbert_et/heights.hpp"
#include "hilbert_et/hilbert.hpp"
#include "hilbert_et/polynomial.hpp"

namespace hilbert_et::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hilbert-et/1";

/// {"coefficients": [[re, im], ...]} with a_0 first and the leading 1
/// omitted, or {"roots": [{"rho": r, "theta": t}, ...]}, possibly nested
/// under "polynomial" as `generate` writes it.
ComplexPolynomial polynomial_from_json(const json& j);
ComplexPolynomial read_polynomial(const std::string& path);

/// {"breakpoints": [[x, value], ...]}
CompactFunction polyline_from_json(const json& j);
CompactFunction read_polyline(const std::string& path);

/// triangle | magicF | magicG | chebyshev | outlier | mollified:EPS |
/// polyline:FILE. The mollified base is magicF.
CompactFunction parse_function(const std::string& spec);

json to_json(const ConstantTable& t);
json to_json(const ComplexPolynomial& p);
json to_json(const RootSet& r);
json to_json(const HeightReport& r);
json to_json(const DiscrepancyResult& r);
json to_json(const BoundsReport& r);
json to_json(const TransformGrid& g);
json to_json(const ExtremalReport& r);
json to_json(const DeltaSweep& s);

/// Adds the schema key in front of `body`'s members.
json with_schema(const json& body);

/// Numbers with 15 significant digits, two-space indentation.
std::string dump(const json& j);

/// "x,value" header, then one row per sample.
void write_csv(std::ostream& os, const std::vector<std::pair<double, double>>& samples);

}  // namespace hilbert_et::io
