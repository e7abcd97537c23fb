#include "otband/bands.hpp"

#include <algorithm>
#include <cmath>

#include "otband/errors.hpp"

namespace otband {

BandResult build_uniform_band(const OtMapEstimate& map,
                              const ScaleEstimate& scale, double q_hat,
                              double alpha) {
  if (!(q_hat >= 0.0)) throw ConfigError("band: q_hat must be >= 0");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("band: alpha must lie in (0,1)");
  }

  BandResult band;
  band.grid = scale.grid;
  band.center = scale.center;
  band.scale = scale.s_hat;
  band.q_hat = q_hat;
  band.alpha = alpha;
  band.n = map.n();
  band.m = map.m();
  band.meta.kernel = std::string(map.source().kernel().name());
  band.meta.r_n = map.source().bandwidth();
  band.meta.r_m = map.target().bandwidth();
  band.meta.grid_points = band.grid.size();

  const double root_total = std::sqrt(static_cast<double>(band.n + band.m));
  band.lower.resize(band.grid.size());
  band.upper.resize(band.grid.size());
  for (std::size_t i = 0; i < band.grid.size(); ++i) {
    const double half = band.scale[i] * q_hat / root_total;
    band.lower[i] = band.center[i] - half;
    band.upper[i] = band.center[i] + half;
  }
  return band;
}

PointwiseInterval build_pointwise_interval(const EmpiricalOtMap& map,
                                           const PointwiseDraws& draws,
                                           double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("interval: alpha must lie in (0,1)");
  }
  if (draws.values.empty()) throw ConfigError("interval: no bootstrap draws");

  std::vector<double> sorted = draws.values;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t idx =
      order_statistic_index(1.0 - 0.5 * alpha, sorted.size());
  const double quantile = sorted[idx - 1];
  const double root_total = std::sqrt(static_cast<double>(map.n() + map.m()));

  PointwiseInterval out;
  out.x = draws.x;
  out.center = map(draws.x);
  out.half_width = std::max(0.0, quantile) / root_total;
  out.alpha = alpha;
  out.extrapolation = draws.x < map.source().sample().min() ||
                      draws.x > map.source().sample().max();
  return out;
}

bool covers(const BandResult& band,
            const std::function<double(double)>& truth) {
  for (std::size_t i = 0; i < band.grid.size(); ++i) {
    const double t = truth(band.grid[i]);
    if (t < band.lower[i] || t > band.upper[i]) return false;
  }
  return true;
}

double average_width(const BandResult& band) {
  if (band.grid.empty()) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < band.grid.size(); ++i) {
    acc += band.upper[i] - band.lower[i];
  }
  return acc / static_cast<double>(band.grid.size());
}

}  // namespace otband
