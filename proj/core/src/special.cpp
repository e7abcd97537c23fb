#include "otband/special.hpp"

#include <limits>
#include <stdexcept>

namespace otband::special {

namespace {

// Acklam's coefficients for the inverse normal CDF.
constexpr double inv_a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double inv_b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
constexpr double inv_c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
constexpr double inv_d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};

double acklam_estimate(double p) {
  constexpr double p_low = 0.02425;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((inv_c[0] * q + inv_c[1]) * q + inv_c[2]) * q + inv_c[3]) * q +
             inv_c[4]) *
                q +
            inv_c[5]) /
           ((((inv_d[0] * q + inv_d[1]) * q + inv_d[2]) * q + inv_d[3]) * q +
            1.0);
  }
  if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    return (((((inv_a[0] * r + inv_a[1]) * r + inv_a[2]) * r + inv_a[3]) * r +
             inv_a[4]) *
                r +
            inv_a[5]) *
           q /
           (((((inv_b[0] * r + inv_b[1]) * r + inv_b[2]) * r + inv_b[3]) * r +
             inv_b[4]) *
                r +
            1.0);
  }
  const double q = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((inv_c[0] * q + inv_c[1]) * q + inv_c[2]) * q + inv_c[3]) * q +
            inv_c[4]) *
               q +
           inv_c[5]) /
         ((((inv_d[0] * q + inv_d[1]) * q + inv_d[2]) * q + inv_d[3]) * q +
          1.0);
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("normal_quantile: p must lie in (0,1)");
  }
  double x = acklam_estimate(p);
  // One Halley step against the high-accuracy CDF.
  const double e = normal_cdf(x) - p;
  const double u = e * sqrt_two_pi * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0) || x < 0.0) {
    throw std::invalid_argument("regularized_gamma_p: need a > 0, x >= 0");
  }
  if (x == 0.0) return 0.0;
  const double log_prefactor = a * std::log(x) - x - std::lgamma(a);
  if (x < a + 1.0) {
    // Series expansion of P(a,x).
    double term = 1.0 / a;
    double sum = term;
    for (int k = 1; k < 10000; ++k) {
      term *= x / (a + k);
      sum += term;
      if (term < sum * std::numeric_limits<double>::epsilon()) break;
    }
    return sum * std::exp(log_prefactor);
  }
  // Continued fraction for Q(a,x), modified Lentz.
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < std::numeric_limits<double>::epsilon()) break;
  }
  const double q = std::exp(log_prefactor) * h;
  return 1.0 - q;
}

double gamma_quantile_unit(double shape, double p) {
  if (!(shape > 0.0)) {
    throw std::invalid_argument("gamma_quantile_unit: shape must be positive");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("gamma_quantile_unit: p must lie in (0,1)");
  }
  // Wilson-Hilferty starting point.
  const double z = normal_quantile(p);
  const double t = 1.0 - 1.0 / (9.0 * shape) + z / (3.0 * std::sqrt(shape));
  double x = shape * t * t * t;
  if (!(x > 0.0) || !std::isfinite(x)) x = shape;

  const double log_gamma_shape = std::lgamma(shape);
  auto density = [&](double v) {
    return std::exp((shape - 1.0) * std::log(v) - v - log_gamma_shape);
  };

  // Newton with a bisection safety bracket.
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 200; ++it) {
    const double f = regularized_gamma_p(shape, x) - p;
    if (std::fabs(f) <= 1e-13) return x;
    if (f > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    const double dens = density(x);
    double next = dens > 0.0 ? x - f / dens : x;
    if (!(next > lo) || !(next < hi) || !std::isfinite(next)) {
      next = std::isinf(hi) ? x * 2.0 : 0.5 * (lo + hi);
    }
    if (next == x) break;
    x = next;
  }
  return x;
}

}  // namespace otband::special
