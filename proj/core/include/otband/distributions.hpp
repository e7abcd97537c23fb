#pragma once

#include <string>

#include "otband/rng.hpp"

namespace otband {

/// Reference distribution with exact CDF/density/quantile and a sampler,
/// used by the Monte Carlo harness as ground truth. The gamma family keeps
/// track of which convention (rate or scale) its second parameter was given
/// in, since configs may specify either.
class ReferenceDistribution {
 public:
  static ReferenceDistribution normal(double mu, double sigma);
  static ReferenceDistribution gamma_rate(double shape, double rate);
  static ReferenceDistribution gamma_scale(double shape, double scale);

  double cdf(double x) const;
  double density(double x) const;
  /// Throws ConfigError for p outside (0,1).
  double quantile(double p) const;
  double sample(RngStream& stream) const;

  double mean() const;
  double variance() const;
  std::string description() const;

 private:
  enum class Kind { normal, gamma };
  Kind kind_ = Kind::normal;
  // normal: param1 = mu, param2 = sigma; gamma: param1 = shape,
  // param2 = scale (canonical form regardless of input convention).
  double param1_ = 0.0;
  double param2_ = 1.0;
  bool gamma_given_as_rate_ = false;
};

}  // namespace otband
