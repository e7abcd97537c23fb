#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "otband/distributions.hpp"
#include "otband/kernels.hpp"

namespace otband {

/// Equispaced grid of `points >= 2` values spanning [lo, hi] inclusive.
std::vector<double> make_grid(double lo, double hi, std::size_t points);

/// True transport map between reference distributions:
/// T0(x) = F_Q^{-1}(F_P(x)).
double true_map_oracle(const ReferenceDistribution& dist_p,
                       const ReferenceDistribution& dist_q, double x);

/// Monte Carlo design for the coverage studies. `kappa` is the limiting
/// ratio n/(n+m); the companion sample size is m = round(n(1-kappa)/kappa),
/// so the two-samples design with m = n/4 corresponds to kappa = 0.8.
struct SimulationDesign {
  ReferenceDistribution dist_p = ReferenceDistribution::normal(0.0, 1.0);
  ReferenceDistribution dist_q = ReferenceDistribution::gamma_rate(5.0, 0.5);
  std::vector<std::size_t> n_values{2000};
  double kappa = 0.8;
  double beta = 0.5;
  double bandwidth_constant = 0.5;
  KernelSpec kernel = KernelSpec::gaussian();
  double interval_lo = -2.5;
  double interval_hi = 2.5;
  std::size_t grid_points = 512;
  std::vector<double> alpha_levels{0.10, 0.05, 0.01};
  std::size_t mc_iterations = 300;
  std::size_t bootstrap_replicates = 2500;
  std::uint64_t seed = 1;
  int threads = 0;

  std::size_t m_for(std::size_t n) const;
  /// Throws ConfigError on any inconsistent field (including a kernel order
  /// incompatible with beta).
  void validate() const;
};

struct UniformCoverageCell {
  double alpha = 0.0;
  std::size_t n = 0;
  std::size_t m = 0;
  double coverage = 0.0;
  double mc_se = 0.0;
  double median_average_width = 0.0;
  std::size_t failures = 0;
};

struct PointwiseCoverageCell {
  double alpha = 0.0;
  std::size_t n = 0;
  std::size_t m = 0;
  double coverage_min = 0.0;
  double coverage_max = 0.0;
  double coverage_avg = 0.0;
  double median_average_width = 0.0;
  std::size_t failures = 0;
};

/// Aggregated study results; the design echo makes reports self-describing.
struct CoverageReport {
  std::string dist_p;
  std::string dist_q;
  std::string kernel;
  double beta = 0.0;
  double bandwidth_constant = 0.0;
  double kappa = 0.0;
  double interval_lo = 0.0;
  double interval_hi = 0.0;
  std::size_t grid_points = 0;
  std::size_t mc_iterations = 0;
  std::size_t bootstrap_replicates = 0;
  std::uint64_t seed = 0;
  std::vector<UniformCoverageCell> uniform;
  std::vector<PointwiseCoverageCell> pointwise;
};

/// Uniform-band coverage study: per iteration draws fresh samples, fits the
/// smoothed maps, bootstraps the sup statistic, builds bands at every alpha
/// from the same draws, and tests coverage of the true map on the grid.
/// Iterations run in parallel with per-iteration streams; reports are
/// bit-identical for a fixed (design, seed) regardless of worker count.
/// Per-iteration numeric failures are counted, never silently dropped.
CoverageReport run_uniform_study(const SimulationDesign& design);

/// Pointwise-interval coverage study (empirical bootstrap): reports
/// min/max/average coverage over the grid per (alpha, n).
CoverageReport run_pointwise_study(const SimulationDesign& design);

/// Draws of sup over the grid of |Z(x)| where Z is the limit process: two
/// independent Brownian bridges evaluated at F_P(grid), combined with
/// weights sqrt(1/kappa) and sqrt(1/(1-kappa)) and studentized to unit
/// variance. The target distribution cancels out of the process and is not
/// a parameter. Draw d uses the stream keyed (seed, d).
std::vector<double> z_kappa_sup_draws(const ReferenceDistribution& dist_p,
                                      double kappa,
                                      std::span<const double> grid,
                                      std::size_t draws, std::uint64_t seed,
                                      int threads = 0);

}  // namespace otband
