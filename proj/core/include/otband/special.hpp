#pragma once

#include <cmath>
#include <numbers>

// Scalar special functions used across the library. The error function is
// evaluated in-repo with Cody's rational Chebyshev approximations (SPECFUN
// "calerf"), accurate to well below 1e-14 absolute over the whole real line.

namespace otband::special {

inline constexpr double inv_sqrt_pi = 0.56418958354775628695;
inline constexpr double sqrt_two = std::numbers::sqrt2;
inline constexpr double sqrt_two_pi = 2.50662827463100050242;
inline constexpr double inv_sqrt_two_pi = 0.39894228040143267794;

namespace detail {

inline constexpr double erf_a[5] = {
    3.16112374387056560e00, 1.13864154151050156e02, 3.77485237685302021e02,
    3.20937758913846947e03, 1.85777706184603153e-1};
inline constexpr double erf_b[4] = {
    2.36012909523441209e01, 2.44024637934444173e02, 1.28261652607737228e03,
    2.84423683343917062e03};
inline constexpr double erf_c[9] = {
    5.64188496988670089e-1, 8.88314979438837594e00, 6.61191906371416295e01,
    2.98635138197400131e02, 8.81952221241769090e02, 1.71204761263407058e03,
    2.05107837782607147e03, 1.23033935479799725e03, 2.15311535474403846e-8};
inline constexpr double erf_d[8] = {
    1.57449261107098347e01, 1.17693950891312499e02, 5.37181101862009858e02,
    1.62138957456669019e03, 3.29079923573345963e03, 4.36261909014324716e03,
    3.43936767414372164e03, 1.23033935480374942e03};
inline constexpr double erf_p[6] = {
    3.05326634961232344e-1, 3.60344899949804439e-1, 1.25781726111229246e-1,
    1.60837851487422766e-2, 6.58749161529837803e-4, 1.63153871373020978e-2};
inline constexpr double erf_q[5] = {
    2.56852019228982242e00, 1.87295284992346047e00, 5.27905102951428412e-1,
    6.05183413124413191e-2, 2.33520497626869185e-3};

// erfc(y) for 0.46875 < y, shared tail evaluation. The exponential is split
// at a 1/16 grid to avoid cancellation in exp(-y*y) (Cody's trick).
inline double erfc_tail(double y) {
  double result;
  if (y <= 4.0) {
    double xnum = erf_c[8] * y;
    double xden = y;
    for (int i = 0; i < 7; ++i) {
      xnum = (xnum + erf_c[i]) * y;
      xden = (xden + erf_d[i]) * y;
    }
    result = (xnum + erf_c[7]) / (xden + erf_d[7]);
  } else {
    if (y >= 26.6) return 0.0;
    const double z = 1.0 / (y * y);
    double xnum = erf_p[5] * z;
    double xden = z;
    for (int i = 0; i < 4; ++i) {
      xnum = (xnum + erf_p[i]) * z;
      xden = (xden + erf_q[i]) * z;
    }
    result = z * (xnum + erf_p[4]) / (xden + erf_q[4]);
    result = (inv_sqrt_pi - result) / y;
  }
  const double ysq = std::trunc(y * 16.0) / 16.0;
  const double del = (y - ysq) * (y + ysq);
  return std::exp(-ysq * ysq) * std::exp(-del) * result;
}

}  // namespace detail

/// Error function, |erf(x) - true| < 1e-14 for all x.
inline double erf(double x) {
  const double y = std::fabs(x);
  if (y <= 0.46875) {
    const double z = y > 1.11e-16 ? y * y : 0.0;
    double xnum = detail::erf_a[4] * z;
    double xden = z;
    for (int i = 0; i < 3; ++i) {
      xnum = (xnum + detail::erf_a[i]) * z;
      xden = (xden + detail::erf_b[i]) * z;
    }
    return x * (xnum + detail::erf_a[3]) / (xden + detail::erf_b[3]);
  }
  const double tail = detail::erfc_tail(y);
  return x > 0.0 ? 1.0 - tail : tail - 1.0;
}

/// Complementary error function.
inline double erfc(double x) {
  const double y = std::fabs(x);
  if (y <= 0.46875) return 1.0 - otband::special::erf(x);
  const double tail = detail::erfc_tail(y);
  return x > 0.0 ? tail : 2.0 - tail;
}

/// Standard normal distribution function Phi(x).
inline double normal_cdf(double x) {
  return 0.5 * otband::special::erfc(-x / sqrt_two);
}

/// Standard normal density phi(x).
inline double normal_pdf(double x) {
  return inv_sqrt_two_pi * std::exp(-0.5 * x * x);
}

/// Standard normal quantile Phi^{-1}(p), p in (0,1). Acklam's rational
/// approximation polished by one Halley step; relative error ~1e-15.
double normal_quantile(double p);

/// Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0.
double regularized_gamma_p(double a, double x);

/// Quantile of the unit-scale gamma distribution with the given shape:
/// solves P(shape, x) = p to |P - p| <= 1e-13.
double gamma_quantile_unit(double shape, double p);

}  // namespace otband::special
