#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "otband/bootstrap.hpp"
#include "otband/otmap.hpp"

namespace otband {

struct BandMetadata {
  std::string kernel;
  double beta = 0.0;
  double r_n = 0.0;
  double r_m = 0.0;
  std::uint64_t seed = 0;
  std::size_t grid_points = 0;
};

/// Uniform confidence band on a grid: center(x) +- s(x) q / sqrt(n+m).
struct BandResult {
  std::vector<double> grid;
  std::vector<double> center;
  std::vector<double> scale;
  std::vector<double> lower;
  std::vector<double> upper;
  double q_hat = 0.0;
  double alpha = 0.0;
  std::size_t n = 0;
  std::size_t m = 0;
  BandMetadata meta;
};

/// Pointwise interval: center +- half_width, half_width =
/// q(1 - alpha/2) / sqrt(n+m) from the signed empirical-bootstrap draws.
struct PointwiseInterval {
  double x = 0.0;
  double center = 0.0;
  double half_width = 0.0;
  double alpha = 0.0;
  bool extrapolation = false;
};

/// Assembles the band envelopes from a precomputed scale (which carries the
/// center curve) and a bootstrap quantile. Throws ConfigError for q_hat < 0.
BandResult build_uniform_band(const OtMapEstimate& map,
                              const ScaleEstimate& scale, double q_hat,
                              double alpha);

PointwiseInterval build_pointwise_interval(const EmpiricalOtMap& map,
                                           const PointwiseDraws& draws,
                                           double alpha);

/// True iff lower(x) <= truth(x) <= upper(x) at every grid point.
bool covers(const BandResult& band,
            const std::function<double(double)>& truth);

/// Mean over the grid of upper - lower.
double average_width(const BandResult& band);

}  // namespace otband
