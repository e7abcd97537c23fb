#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "otband/dist_est.hpp"
#include "otband/otmap.hpp"
#include "otband/rng.hpp"

namespace otband {

/// Shared bootstrap settings. Replicate b always consumes the stream keyed
/// (seed, b), so permuting execution order or changing the worker count
/// cannot change any draw.
struct BootstrapConfig {
  std::size_t replicates = 2500;
  std::uint64_t seed = 0;
  std::vector<double> grid;
  int threads = 0;  // 0 = auto, capped by OTBAND_THREADS

  /// Throws ConfigError unless replicates >= 100 and the grid is nonempty
  /// and sorted.
  void validate() const;
};

/// Realizations of sqrt(N) sup_x |T*(x) - T(x)| / s(x), sorted ascending.
struct SupStatisticDraws {
  std::vector<double> values;
};

/// Realizations of sqrt(N) (T*(x) - T(x)) at one point (empirical
/// bootstrap), in replicate order.
struct PointwiseDraws {
  double x = 0.0;
  std::vector<double> values;
};

/// Draws `count` observations from the kernel mixture: X* = X_I + r * eps
/// with I uniform on the sample and eps distributed as the kernel. Exact for
/// the smoothed distribution (no inversion involved).
Sample sample_from_smoothed(const SmoothedCdf& fitted, std::size_t count,
                            RngStream& stream);

/// Smoothed bootstrap for the uniform band: per replicate, resamples both
/// smoothed distributions, forms step-function bootstrap CDFs, composes the
/// bootstrap map through the order-statistic quantile, and records the
/// studentized sup deviation over the grid. `scale` must have been computed
/// on cfg.grid from `map`.
SupStatisticDraws uniform_sup_draws(const OtMapEstimate& map,
                                    const ScaleEstimate& scale,
                                    const BootstrapConfig& cfg);

/// Order statistic at index ceil((1-alpha) * B) of the sorted draws.
double quantile_of_draws(const SupStatisticDraws& draws, double alpha);

/// Empirical bootstrap draws of sqrt(N)(T*(x) - T(x)) at a single x:
/// both samples are resampled with replacement from the data.
PointwiseDraws pointwise_draws(const EmpiricalOtMap& map, double x,
                               const BootstrapConfig& cfg);

/// Grid variant used by the pointwise simulation study: one pass of B
/// replicates produces draws at every grid point. Row b of the result holds
/// replicate b's values across cfg.grid.
std::vector<std::vector<double>> pointwise_draws_grid(
    const EmpiricalOtMap& map, const BootstrapConfig& cfg);

}  // namespace otband
