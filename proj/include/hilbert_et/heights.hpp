#pragma once

#include "hilbert_et/polynomial.hpp"

namespace hilbert_et {

struct HeightReport {
  double h = 0.0;       // int_0^1 log+ (|P(e(theta))| / sqrt|a0|) dtheta
  double H_log = 0.0;   // log max_{|z|=1} |P(z)| / sqrt|a0|
  double logM = 0.0;    // sum log max(rho, 1/rho)
  double jensen = 0.0;  // int_0^1 log |P(e(theta))| dtheta, via Jensen's formula
};

/// Adaptive quadrature of log+ (|P| / sqrt|a0|) over the circle, split at the
/// root angles and at the sign changes of the log, with absolute error
/// below `tolerance`.
double height_h(const ComplexPolynomial& p, double tolerance);

/// log of the maximum of |P| / sqrt|a0| on the unit circle: a uniform grid
/// of `grid` points followed by golden-section ascent in the five best
/// brackets.
double height_H(const ComplexPolynomial& p, int grid);

double height_logM(const RootSet& roots);

/// sum_j log max(rho_j, 1).
double jensen_integral(const RootSet& roots);

HeightReport height_report(const ComplexPolynomial& p, double tolerance, int grid = 2048);

/// Fourier coefficient of psi(theta) = log|2 sin(pi theta)|: 0 at k = 0,
/// -1/(2|k|) otherwise.
double psi_fourier(long k);

/// The same coefficient by direct quadrature of int_0^1 psi(theta) e(-k theta).
double psi_fourier_quadrature(long k, double tolerance = 1e-12);

}  // namespace hilbert_et
