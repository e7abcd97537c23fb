#include "otband/dist_est.hpp"

#include <algorithm>
#include <cmath>

#include "otband/errors.hpp"

namespace otband {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DataError("sample is empty");
  for (double v : values_) {
    if (!std::isfinite(v)) throw DataError("sample contains non-finite value");
  }
  std::sort(values_.begin(), values_.end());
}

double Sample::iqr() const {
  const std::size_t n = values_.size();
  const double q1 = values_[order_statistic_index(0.25, n) - 1];
  const double q3 = values_[order_statistic_index(0.75, n) - 1];
  return q3 - q1;
}

std::size_t order_statistic_index(double p, std::size_t n) {
  const double target = p * static_cast<double>(n);
  auto k = static_cast<std::size_t>(std::ceil(target));
  if (k < 1) k = 1;
  if (k > n) k = n;
  // Repair rounding: k must be the smallest index with k >= p*n.
  if (k > 1 && static_cast<double>(k - 1) >= target) --k;
  if (static_cast<double>(k) < target && k < n) ++k;
  return k;
}

double sorted_quantile(std::span<const double> sorted, double p) {
  return sorted[order_statistic_index(p, sorted.size()) - 1];
}

SmoothedCdf::SmoothedCdf(Sample sample, KernelSpec kernel, double bandwidth)
    : sample_(std::move(sample)), kernel_(kernel), bandwidth_(bandwidth) {
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw ConfigError("bandwidth must be positive and finite");
  }
  const double reach = kernel_.support_radius * bandwidth_;
  support_lo_ = sample_.min() - reach;
  support_hi_ = sample_.max() + reach;
}

double SmoothedCdf::cdf(double x) const {
  const auto& v = sample_.values();
  const double reach = kernel_.support_radius * bandwidth_;
  // Points left of the window contribute exactly 1, right of it exactly 0.
  const auto lo = std::lower_bound(v.begin(), v.end(), x - reach);
  const auto hi = std::upper_bound(lo, v.end(), x + reach);
  double acc = static_cast<double>(lo - v.begin());
  for (auto it = lo; it != hi; ++it) {
    acc += kernel_.cdf((x - *it) / bandwidth_);
  }
  return acc / static_cast<double>(v.size());
}

double SmoothedCdf::density(double x) const {
  const auto& v = sample_.values();
  const double reach = kernel_.support_radius * bandwidth_;
  const auto lo = std::lower_bound(v.begin(), v.end(), x - reach);
  const auto hi = std::upper_bound(lo, v.end(), x + reach);
  double acc = 0.0;
  for (auto it = lo; it != hi; ++it) {
    acc += kernel_.density((x - *it) / bandwidth_);
  }
  return acc / (static_cast<double>(v.size()) * bandwidth_);
}

double SmoothedCdf::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    throw ConfigError("quantile: p must lie in (0,1)");
  }
  double lo = support_lo_;
  double hi = support_hi_;
  double f_lo = cdf(lo);
  double f_hi = cdf(hi);
  if (!(f_lo < p && p < f_hi)) {
    throw NumericError("smoothed quantile target not bracketed", p);
  }
  // Bisection to a narrow bracket, then Newton polish with the density as
  // derivative, guarded to stay inside the bracket.
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point limit
    if (cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 5; ++it) {
    const double err = cdf(x) - p;
    if (std::fabs(err) <= 1e-13) break;
    const double dens = density(x);
    if (!(dens > 0.0)) break;
    const double next = x - err / dens;
    if (!(next >= lo && next <= hi)) break;
    x = next;
  }
  return x;
}

EmpiricalCdf::EmpiricalCdf(Sample sample) : sample_(std::move(sample)) {}

double EmpiricalCdf::cdf(double x) const {
  const auto& v = sample_.values();
  const auto it = std::upper_bound(v.begin(), v.end(), x);
  return static_cast<double>(it - v.begin()) / static_cast<double>(v.size());
}

double EmpiricalCdf::quantile(double p) const {
  if (!(p > 0.0 && p <= 1.0)) {
    throw ConfigError("empirical quantile: p must lie in (0,1]");
  }
  const auto& v = sample_.values();
  return v[order_statistic_index(p, v.size()) - 1];
}

}  // namespace otband
