#pragma once

namespace fracburgers::special {

/// Hurwitz zeta  sum_{k>=0} (k + a)^{-s}  for s > 1, a > 0.
double hurwitz_zeta(double s, double a);

/// log(erfc(z)) without underflow for large positive z.
double log_erfc(double z);

/// Scaled complementary error function exp(z^2) erfc(z), z >= 0.
double erfcx(double z);

}  // namespace fracburgers::special
