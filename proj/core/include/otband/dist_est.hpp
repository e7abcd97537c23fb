#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "otband/kernels.hpp"

namespace otband {

/// An immutable sorted batch of finite observations from one distribution.
/// Ties are allowed (they simply weight the kernel mixture).
class Sample {
 public:
  /// Sorts and validates; throws DataError on empty input or non-finite
  /// values.
  explicit Sample(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }

  /// Interquartile range (order-statistic convention); 0 for constant
  /// samples.
  double iqr() const;

 private:
  std::vector<double> values_;
};

/// Kernel-smoothed distribution estimate: density, CDF, and monotone
/// inversion. With a positive kernel the CDF is strictly increasing on the
/// effective support [min - R*r, max + R*r], which is the inversion bracket.
class SmoothedCdf {
 public:
  /// Throws DataError on an empty sample (via Sample) and ConfigError on a
  /// nonpositive bandwidth.
  SmoothedCdf(Sample sample, KernelSpec kernel, double bandwidth);

  /// F-hat(x) = (1/n) sum K-bar((x - X_i)/r). Exact 0/1 outside the
  /// effective support.
  double cdf(double x) const;

  /// f-hat(x) = (1/(n r)) sum K((x - X_i)/r).
  double density(double x) const;

  /// Inverse of cdf(): the unique x with |cdf(x) - p| below the inversion
  /// tolerance. Bisection on the support bracket followed by guarded Newton
  /// steps. Throws NumericError (with the offending p) if p is not
  /// bracketed, which for the Gaussian kernel only happens below ~1e-19.
  double quantile(double p) const;

  double bandwidth() const { return bandwidth_; }
  const Sample& sample() const { return sample_; }
  const KernelSpec& kernel() const { return kernel_; }

  /// Effective support endpoints (the inversion bracket).
  double support_lo() const { return support_lo_; }
  double support_hi() const { return support_hi_; }

 private:
  Sample sample_;
  KernelSpec kernel_;
  double bandwidth_;
  double support_lo_;
  double support_hi_;
};

/// Step-function empirical CDF with the generalized-inverse quantile.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(Sample sample);

  /// #{X_i <= x} / n.
  double cdf(double x) const;

  /// Order statistic X_(ceil(p*n)) for p in (0, 1]; the inf-convention
  /// generalized inverse. Throws ConfigError outside (0, 1].
  double quantile(double p) const;

  const Sample& sample() const { return sample_; }

 private:
  Sample sample_;
};

/// Index k in {1,...,n} with k = min{k : k/n >= p}, i.e. ceil(p*n) computed
/// robustly against floating-point rounding. Shared by the empirical
/// quantile and the bootstrap order-statistic lookups.
std::size_t order_statistic_index(double p, std::size_t n);

/// Order-statistic quantile over a sorted range (no Sample wrapper), used in
/// bootstrap hot loops.
double sorted_quantile(std::span<const double> sorted, double p);

}  // namespace otband
