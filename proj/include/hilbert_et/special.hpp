#pragma once

namespace hilbert_et::special {

/// Clausen function Cl2(x) = sum_{k>=1} sin(kx)/k^2 = -int_0^x log|2 sin(t/2)| dt.
double clausen_cl2(double x);

/// Lambda(u) = int_0^u log|sin(pi v)| dv, valid for all real u.
double log_sine_integral(double u);

/// int_0^a J0(s) ds for a >= 0 (odd extension for a < 0).
double bessel_j0_integral(double a);

/// (sin z - z cos z) / z^3, stable near 0.
double sinc_moment(double z);

/// sin(z)/z with the removable singularity filled in.
double sinc(double z);

}  // namespace hilbert_et::special
