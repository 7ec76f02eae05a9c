#pragma once

namespace cglasso {

// Regularized incomplete beta function I_x(a, b).
double regularized_incomplete_beta(double a, double b, double x);

// Inverse of I_x(a, b) in x for y in [0, 1]; bisection bracket followed by a
// Newton polish.  Relative accuracy ~1e-12.
double inverse_incomplete_beta(double a, double b, double y);

// Upper-tail quantile of Student's t with df degrees of freedom:
// returns t with P(T > t) = q, via the incomplete beta inverse.
double student_t_upper_quantile(double df, double q);

}  // namespace cglasso
