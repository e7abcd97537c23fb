#pragma once

#include <stdexcept>
#include <string>

namespace otband {

/// Invalid configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unusable input data (CLI exit code 3).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure, e.g. a quantile inversion whose target is not
/// bracketed (CLI exit code 4). Carries the offending probability when one
/// exists.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
  NumericError(const std::string& what, double offending_p)
      : std::runtime_error(what + " (p=" + std::to_string(offending_p) + ")"),
        offending_p_(offending_p),
        has_p_(true) {}

  bool has_offending_p() const { return has_p_; }
  double offending_p() const { return offending_p_; }

 private:
  double offending_p_ = 0.0;
  bool has_p_ = false;
};

}  // namespace otband
