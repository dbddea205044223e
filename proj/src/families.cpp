#include "hilbert_et/families.hpp"

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "hilbert_et/errors.hpp"

namespace hilbert_et {
namespace {

double log_uniform_modulus(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return std::exp2(u(rng));
}

ComplexPolynomial random_real(int N, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 0.5);
  std::bernoulli_distribution real_root(0.25), negative(0.5);
  std::vector<std::pair<double, double>> polar;
  while (static_cast<int>(polar.size()) < N) {
    const double rho = log_uniform_modulus(rng);
    if (static_cast<int>(polar.size()) + 1 == N || real_root(rng)) {
      polar.emplace_back(rho, negative(rng) ? 0.5 : 0.0);
    } else {
      const double a = angle(rng);
      polar.emplace_back(rho, a);
      polar.emplace_back(rho, -a);
    }
  }
  const auto roots = RootSet::from_polar(polar);
  auto c = expand_from_roots(roots).coefficients();
  for (auto& a : c) a = a.real();
  return ComplexPolynomial(std::move(c), roots);
}

}  // namespace

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::cyclotomic: return "cyclotomic";
    case FamilyKind::power_of_linear: return "power-of-linear";
    case FamilyKind::random_unit: return "random-unit";
    case FamilyKind::random_disk: return "random-disk";
    case FamilyKind::random_real: return "random-real";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& name) {
  for (auto k : {FamilyKind::cyclotomic, FamilyKind::power_of_linear, FamilyKind::random_unit,
                 FamilyKind::random_disk, FamilyKind::random_real})
    if (name == to_string(k)) return k;
  throw InvalidArgument("unknown family '" + name + "'");
}

ComplexPolynomial generate_family(FamilyKind kind, int N, std::uint64_t seed) {
  if (N < 1) throw InvalidArgument("degree must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<double, double>> polar;
  switch (kind) {
    case FamilyKind::cyclotomic: {
      for (int j = 0; j < N; ++j) polar.emplace_back(1.0, static_cast<double>(j) / N);
      std::vector<cplx> c(N, 0.0);
      c[0] = -1.0;
      return ComplexPolynomial(std::move(c), RootSet::from_polar(polar));
    }
    case FamilyKind::power_of_linear:
      polar.assign(N, {1.0, 0.0});
      break;
    case FamilyKind::random_unit: {
      std::uniform_real_distribution<double> angle(0.0, 1.0);
      for (int j = 0; j < N; ++j) polar.emplace_back(1.0, angle(rng));
      break;
    }
    case FamilyKind::random_disk: {
      std::uniform_real_distribution<double> angle(0.0, 1.0);
      for (int j = 0; j < N; ++j) {
        const double rho = log_uniform_modulus(rng);
        polar.emplace_back(rho, angle(rng));
      }
      break;
    }
    case FamilyKind::random_real:
      return random_real(N, rng);
  }
  return expand_from_roots(RootSet::from_polar(polar));
}

}  // namespace hilbert_et
