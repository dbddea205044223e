#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hilbert_et {

enum class OutputFormat { json, csv };

struct RunConfig {
  double tolerance = 1e-8;
  int grid = 2048;
  int series_K = 4096;
  std::uint64_t seed = 20210304;
  OutputFormat output_format = OutputFormat::json;

  /// Throws InvalidArgument unless tolerance > 0, grid >= 64, series_K >= 64.
  void validate() const;
};

struct Check {
  int criterion = 0;
  std::string name;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct VerificationSuiteResult {
  std::vector<Check> checks;
  bool overall = false;
};

/// Checks for one numbered acceptance criterion (1 to 11). A library
/// exception becomes a single failed check carrying its message.
std::vector<Check> run_criterion(int criterion, const RunConfig& config);

/// All eleven criteria; when `table` is given, one row per check is written
/// to it as the checks complete.
VerificationSuiteResult run_verify_paper(const RunConfig& config, std::ostream* table = nullptr);

/// Magic-function certificate: duality pairing equal to 1 for triangle,
/// magicF and the mollified family, and c(F_eps) tracking 1/(1 - eps) down
/// toward 1 for eps = 0.2, 0.1, 0.05.
VerificationSuiteResult run_certificate(const RunConfig& config, std::ostream* table = nullptr);

void print_check(std::ostream& os, const Check& c);

}  // namespace hilbert_et
