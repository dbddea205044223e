#pragma once

#include <cstdint>
#include <string>

#include "hilbert_et/polynomial.hpp"

namespace hilbert_et {

/// random_real: real coefficients; conjugate root pairs plus real roots,
/// moduli log-uniform in [1/2, 2].
enum class FamilyKind { cyclotomic, power_of_linear, random_unit, random_disk, random_real };

const char* to_string(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& name);

/// Degree-N member of a family; the random kinds draw from a mt19937_64
/// seeded with `seed`. Every result carries its factored form.
ComplexPolynomial generate_family(FamilyKind kind, int N, std::uint64_t seed);

}  // namespace hilbert_et
