#pragma once

#include <cmath>
#include <functional>

// Composite Simpson rule on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

// Trigamma by upward recurrence and the asymptotic series at x + 20.
inline double trigamma(double x) {
  double s = 0.0;
  for (int k = 0; k < 20; ++k) s += 1.0 / ((x + k) * (x + k));
  const double z = x + 20.0, z2 = z * z;
  return s + 1.0 / z + 1.0 / (2.0 * z2) + 1.0 / (6.0 * z2 * z) - 1.0 / (30.0 * z2 * z2 * z) +
         1.0 / (42.0 * z2 * z2 * z2 * z) - 1.0 / (30.0 * z2 * z2 * z2 * z2 * z);
}
