#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hilbert_et {

/// Precondition violated by the caller (bad tolerance, empty input, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An integral or extrapolation did not reach its requested accuracy.
/// `lo`/`hi` locate the worst subinterval when one is known.
class NumericFailure : public std::runtime_error {
 public:
  NumericFailure(const std::string& what, double lo = 0.0, double hi = 0.0,
                 double error_estimate = 0.0)
      : std::runtime_error(what), lo_(lo), hi_(hi), error_(error_estimate) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double error_estimate() const noexcept { return error_; }

 private:
  double lo_;
  double hi_;
  double error_;
};

/// Root finder exhausted its iteration budget or left residuals above tolerance.
class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, std::vector<double> residuals)
      : std::runtime_error(what), residuals_(std::move(residuals)) {}

  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<double> residuals_;
};

/// Evaluation requested exactly at a singular point of a closed-form transform.
class SingularPoint : public std::domain_error {
 public:
  SingularPoint(const std::string& what, double x) : std::domain_error(what), x_(x) {}
  double x() const noexcept { return x_; }

 private:
  double x_;
};

}  // namespace hilbert_et
