#include "otband/distributions.hpp"

#include <cmath>
#include <sstream>

#include "otband/errors.hpp"
#include "otband/special.hpp"

namespace otband {

ReferenceDistribution ReferenceDistribution::normal(double mu, double sigma) {
  if (!(sigma > 0.0)) throw ConfigError("normal: sigma must be positive");
  ReferenceDistribution d;
  d.kind_ = Kind::normal;
  d.param1_ = mu;
  d.param2_ = sigma;
  return d;
}

ReferenceDistribution ReferenceDistribution::gamma_rate(double shape,
                                                        double rate) {
  if (!(shape > 0.0) || !(rate > 0.0)) {
    throw ConfigError("gamma: shape and rate must be positive");
  }
  ReferenceDistribution d;
  d.kind_ = Kind::gamma;
  d.param1_ = shape;
  d.param2_ = 1.0 / rate;
  d.gamma_given_as_rate_ = true;
  return d;
}

ReferenceDistribution ReferenceDistribution::gamma_scale(double shape,
                                                         double scale) {
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw ConfigError("gamma: shape and scale must be positive");
  }
  ReferenceDistribution d;
  d.kind_ = Kind::gamma;
  d.param1_ = shape;
  d.param2_ = scale;
  return d;
}

double ReferenceDistribution::cdf(double x) const {
  switch (kind_) {
    case Kind::normal:
      return special::normal_cdf((x - param1_) / param2_);
    case Kind::gamma:
      if (x <= 0.0) return 0.0;
      return special::regularized_gamma_p(param1_, x / param2_);
  }
  return 0.0;
}

double ReferenceDistribution::density(double x) const {
  switch (kind_) {
    case Kind::normal:
      return special::normal_pdf((x - param1_) / param2_) / param2_;
    case Kind::gamma: {
      if (x <= 0.0) return 0.0;
      const double z = x / param2_;
      return std::exp((param1_ - 1.0) * std::log(z) - z -
                      std::lgamma(param1_)) /
             param2_;
    }
  }
  return 0.0;
}

double ReferenceDistribution::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    throw ConfigError("quantile: p must lie in (0,1)");
  }
  switch (kind_) {
    case Kind::normal:
      return param1_ + param2_ * special::normal_quantile(p);
    case Kind::gamma:
      return param2_ * special::gamma_quantile_unit(param1_, p);
  }
  return 0.0;
}

double ReferenceDistribution::sample(RngStream& stream) const {
  switch (kind_) {
    case Kind::normal:
      return param1_ + param2_ * stream.normal();
    case Kind::gamma:
      return param2_ * stream.gamma(param1_);
  }
  return 0.0;
}

double ReferenceDistribution::mean() const {
  return kind_ == Kind::normal ? param1_ : param1_ * param2_;
}

double ReferenceDistribution::variance() const {
  return kind_ == Kind::normal ? param2_ * param2_
                               : param1_ * param2_ * param2_;
}

std::string ReferenceDistribution::description() const {
  std::ostringstream out;
  if (kind_ == Kind::normal) {
    out << "normal(mu=" << param1_ << ", sigma=" << param2_ << ")";
  } else if (gamma_given_as_rate_) {
    out << "gamma(shape=" << param1_ << ", rate=" << 1.0 / param2_ << ")";
  } else {
    out << "gamma(shape=" << param1_ << ", scale=" << param2_ << ")";
  }
  return out.str();
}

}  // namespace otband
