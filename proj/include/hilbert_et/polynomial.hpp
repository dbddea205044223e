#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace hilbert_et {

using cplx = std::complex<double>;

struct Root {
  double modulus = 1.0;
  double angle = 0.0;   // normalized into [0, 1)
  int multiplicity = 1; // size of the cluster this entry belongs to

  cplx value() const;
};

/// Multiset of N roots; repeated roots appear as repeated entries.
struct RootSet {
  std::vector<Root> roots;

  int degree() const { return static_cast<int>(roots.size()); }
  std::vector<double> angles() const;
  std::vector<double> moduli() const;

  /// Builds a root set from (modulus, angle) pairs, validating rho > 0 and
  /// normalizing angles.
  static RootSet from_polar(const std::vector<std::pair<double, double>>& polar);
};

/// Monic polynomial z^N + a_{N-1} z^{N-1} + ... + a_0 with a_0 != 0.
///
/// When built from roots the factored form is kept alongside the
/// coefficients and used for evaluation; expanded coefficients of highly
/// clustered products such as (z-1)^100 carry no useful information about
/// the roots.
class ComplexPolynomial {
 public:
  explicit ComplexPolynomial(std::vector<cplx> coefficients);
  ComplexPolynomial(std::vector<cplx> coefficients, RootSet roots);

  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<cplx>& coefficients() const { return coeffs_; }
  const std::optional<RootSet>& factored() const { return roots_; }
  cplx constant_term() const { return coeffs_.front(); }
  bool real_coefficients(double tol = 0.0) const;

  cplx evaluate(cplx z) const;

  /// Sum_k |c_k| |z|^k with c_N = 1, the scale of rounding errors in P(z).
  double absolute_scale(double r) const;

 private:
  std::vector<cplx> coeffs_;
  std::optional<RootSet> roots_;
};

/// P(e^{2 pi i theta}).
cplx evaluate_on_circle(const ComplexPolynomial& p, double theta);

struct RootFinderOptions {
  int max_iterations = 1000;
  double merge_distance = 1e-6;
};

/// All N roots of p.
///
/// A polynomial carrying its factored form returns those roots directly.
/// Otherwise Aberth-Ehrlich iteration runs on the coefficients; iterates
/// whose inclusion discs overlap (or that lie within merge_distance) are
/// merged into one root of the cluster's multiplicity, located at the
/// cluster centroid. Each root must satisfy the backward-error test
/// |P(a)| / sum |c_k||a|^k < tolerance, otherwise SolverFailure is thrown
/// with the per-root residuals.
RootSet find_roots(const ComplexPolynomial& p, double tolerance,
                   const RootFinderOptions& opts = {});

/// Moves every root radially onto the unit circle.
RootSet schur_project(const RootSet& roots);

ComplexPolynomial expand_from_roots(const RootSet& roots);

/// Wraps into [0, 1).
double normalize_angle(double theta);

}  // namespace hilbert_et
