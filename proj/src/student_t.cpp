#include "cglasso/student_t.hpp"

#include <cmath>
#include <limits>

#include "cglasso/errors.hpp"

namespace cglasso {

namespace {

// Lentz continued fraction for the incomplete beta (converges for
// x < (a+1)/(a+b+2); callers use the symmetry split).
double beta_cf(double a, double b, double x) {
  constexpr double kFpMin = 1e-300;
  constexpr double kEps = 1e-15;
  constexpr int kMaxIt = 500;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIt; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  throw InvalidArgument("incomplete beta continued fraction did not converge");
}

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw InvalidArgument("incomplete beta requires a, b > 0");
  }
  if (x < 0.0 || x > 1.0) {
    throw InvalidArgument("incomplete beta requires x in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double lbt =
      a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
  const double bt = std::exp(lbt);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return bt * beta_cf(a, b, x) / a;
  }
  return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

double inverse_incomplete_beta(double a, double b, double y) {
  if (y < 0.0 || y > 1.0) {
    throw InvalidArgument("inverse incomplete beta requires y in [0, 1]");
  }
  if (y == 0.0) return 0.0;
  if (y == 1.0) return 1.0;

  double lo = 0.0, hi = 1.0;
  double x = 0.5;
  for (int it = 0; it < 120; ++it) {
    x = 0.5 * (lo + hi);
    if (regularized_incomplete_beta(a, b, x) < y) {
      lo = x;
    } else {
      hi = x;
    }
    if (hi - lo < 1e-14 * std::max(1e-10, lo)) break;
  }

  // Newton polish; the density can be steep near 0/1, so keep iterates
  // inside the bracket.
  const double lb = log_beta(a, b);
  x = 0.5 * (lo + hi);
  for (int it = 0; it < 60; ++it) {
    const double f = regularized_incomplete_beta(a, b, x) - y;
    const double logpdf =
        (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - lb;
    double step = f * std::exp(-logpdf);
    double xn = x - step;
    if (!(xn > lo) || !(xn < hi)) {
      xn = (f > 0.0) ? 0.5 * (lo + x) : 0.5 * (x + hi);
    }
    if (f > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    if (std::abs(xn - x) <= 1e-13 * std::max(xn, 1e-300)) {
      return xn;
    }
    x = xn;
  }
  return x;
}

double student_t_upper_quantile(double df, double q) {
  if (!(df > 0.0)) throw InvalidArgument("t quantile requires df > 0");
  if (!(q > 0.0 && q < 1.0)) {
    throw InvalidArgument("t quantile requires q in (0, 1)");
  }
  if (q == 0.5) return 0.0;
  if (q > 0.5) return -student_t_upper_quantile(df, 1.0 - q);
  // For t > 0: P(T > t) = I_x(df/2, 1/2) / 2 with x = df / (df + t^2).
  const double x = inverse_incomplete_beta(0.5 * df, 0.5, 2.0 * q);
  return std::sqrt(df * (1.0 - x) / x);
}

}  // namespace cglasso
