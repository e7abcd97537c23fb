#include "otband/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "otband/bands.hpp"
#include "otband/bootstrap.hpp"
#include "otband/errors.hpp"
#include "otband/parallel.hpp"

namespace otband {

namespace {

constexpr std::uint64_t kDataTag = 0x01;
constexpr std::uint64_t kBootstrapSeedTag = 0x02;

double median_of(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2]
                    : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<double> draw_sorted(const ReferenceDistribution& dist,
                                std::size_t count, RngStream& stream) {
  std::vector<double> out(count);
  for (auto& v : out) v = dist.sample(stream);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed,
                          std::initializer_list<std::uint64_t> path) {
  return RngStream(seed, path).next_u64();
}

void echo_design(const SimulationDesign& design, CoverageReport& report) {
  report.dist_p = design.dist_p.description();
  report.dist_q = design.dist_q.description();
  report.kernel = std::string(design.kernel.name());
  report.beta = design.beta;
  report.bandwidth_constant = design.bandwidth_constant;
  report.kappa = design.kappa;
  report.interval_lo = design.interval_lo;
  report.interval_hi = design.interval_hi;
  report.grid_points = design.grid_points;
  report.mc_iterations = design.mc_iterations;
  report.bootstrap_replicates = design.bootstrap_replicates;
  report.seed = design.seed;
}

}  // namespace

std::vector<double> make_grid(double lo, double hi, std::size_t points) {
  if (!(lo < hi)) throw ConfigError("grid: interval must satisfy a < b");
  if (points < 2) throw ConfigError("grid: need at least 2 points");
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = lo + static_cast<double>(i) * step;
  }
  grid.back() = hi;
  return grid;
}

double true_map_oracle(const ReferenceDistribution& dist_p,
                       const ReferenceDistribution& dist_q, double x) {
  return dist_q.quantile(dist_p.cdf(x));
}

std::size_t SimulationDesign::m_for(std::size_t n) const {
  const double m = std::round(static_cast<double>(n) * (1.0 - kappa) / kappa);
  return static_cast<std::size_t>(std::max(2.0, m));
}

void SimulationDesign::validate() const {
  if (!(kappa > 0.0 && kappa < 1.0)) {
    throw ConfigError("design: kappa must lie in (0,1)");
  }
  if (!(beta >= 0.0)) throw ConfigError("design: beta must be >= 0");
  if (!check_order_compatibility(kernel, beta)) {
    throw ConfigError("design: kernel order must exceed beta + 1/2");
  }
  if (!(bandwidth_constant > 0.0)) {
    throw ConfigError("design: bandwidth constant must be positive");
  }
  if (!(interval_lo < interval_hi)) {
    throw ConfigError("design: interval must satisfy a < b");
  }
  if (grid_points < 2) throw ConfigError("design: need at least 2 grid points");
  if (n_values.empty()) throw ConfigError("design: no sample sizes");
  for (std::size_t n : n_values) {
    if (n < 2) throw ConfigError("design: sample sizes must be >= 2");
  }
  if (alpha_levels.empty()) throw ConfigError("design: no alpha levels");
  for (double a : alpha_levels) {
    if (!(a > 0.0 && a < 1.0)) {
      throw ConfigError("design: alpha levels must lie in (0,1)");
    }
  }
  if (mc_iterations == 0) throw ConfigError("design: need >= 1 MC iteration");
  if (bootstrap_replicates < 100) {
    throw ConfigError("design: need >= 100 bootstrap replicates");
  }
}

CoverageReport run_uniform_study(const SimulationDesign& design) {
  design.validate();
  const auto grid =
      make_grid(design.interval_lo, design.interval_hi, design.grid_points);
  const BandwidthRule rule{design.beta, design.bandwidth_constant};
  const std::size_t n_alphas = design.alpha_levels.size();

  CoverageReport report;
  echo_design(design, report);

  for (std::size_t n : design.n_values) {
    const std::size_t m = design.m_for(n);

    std::vector<double> truth(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      truth[i] = true_map_oracle(design.dist_p, design.dist_q, grid[i]);
    }

    const std::size_t iters = design.mc_iterations;
    // Per-iteration results, indexed so that parallel scheduling cannot
    // affect the aggregate.
    std::vector<std::uint8_t> failed(iters, 0);
    std::vector<std::uint8_t> covered(iters * n_alphas, 0);
    std::vector<double> widths(iters * n_alphas, 0.0);

    parallel_for(iters, design.threads, [&](std::size_t it) {
      try {
        RngStream stream_p(design.seed, {kDataTag, n, it, 0});
        RngStream stream_q(design.seed, {kDataTag, n, it, 1});
        Sample x(draw_sorted(design.dist_p, n, stream_p));
        Sample y(draw_sorted(design.dist_q, m, stream_q));

        SmoothedCdf f_p(std::move(x), design.kernel, rule.bandwidth(n));
        SmoothedCdf f_q(std::move(y), design.kernel, rule.bandwidth(m));
        OtMapEstimate map(std::move(f_p), std::move(f_q));
        const ScaleEstimate scale = scale_plugin(map, grid);

        BootstrapConfig cfg;
        cfg.replicates = design.bootstrap_replicates;
        cfg.seed = derive_seed(design.seed, {kBootstrapSeedTag, n, it});
        cfg.grid = grid;
        cfg.threads = 1;  // iterations own the parallelism
        const SupStatisticDraws draws = uniform_sup_draws(map, scale, cfg);

        for (std::size_t a = 0; a < n_alphas; ++a) {
          const double alpha = design.alpha_levels[a];
          const double q_hat = quantile_of_draws(draws, alpha);
          BandResult band = build_uniform_band(map, scale, q_hat, alpha);
          bool inside = true;
          for (std::size_t i = 0; i < grid.size(); ++i) {
            if (truth[i] < band.lower[i] || truth[i] > band.upper[i]) {
              inside = false;
              break;
            }
          }
          covered[it * n_alphas + a] = inside ? 1 : 0;
          widths[it * n_alphas + a] = average_width(band);
        }
      } catch (const NumericError&) {
        failed[it] = 1;
      }
    });

    const std::size_t n_failed =
        static_cast<std::size_t>(std::count(failed.begin(), failed.end(), 1));
    const std::size_t n_ok = iters - n_failed;

    for (std::size_t a = 0; a < n_alphas; ++a) {
      UniformCoverageCell cell;
      cell.alpha = design.alpha_levels[a];
      cell.n = n;
      cell.m = m;
      cell.failures = n_failed;
      std::size_t hits = 0;
      std::vector<double> cell_widths;
      cell_widths.reserve(n_ok);
      for (std::size_t it = 0; it < iters; ++it) {
        if (failed[it]) continue;
        hits += covered[it * n_alphas + a];
        cell_widths.push_back(widths[it * n_alphas + a]);
      }
      const double denom = n_ok > 0 ? static_cast<double>(n_ok) : 1.0;
      cell.coverage = static_cast<double>(hits) / denom;
      cell.mc_se = std::sqrt(cell.coverage * (1.0 - cell.coverage) / denom);
      cell.median_average_width = median_of(std::move(cell_widths));
      report.uniform.push_back(cell);
    }
  }
  return report;
}

CoverageReport run_pointwise_study(const SimulationDesign& design) {
  design.validate();
  const auto grid =
      make_grid(design.interval_lo, design.interval_hi, design.grid_points);
  const std::size_t n_alphas = design.alpha_levels.size();
  const std::size_t n_points = grid.size();

  CoverageReport report;
  echo_design(design, report);

  for (std::size_t n : design.n_values) {
    const std::size_t m = design.m_for(n);
    const double root_total = std::sqrt(static_cast<double>(n + m));

    std::vector<double> truth(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
      truth[i] = true_map_oracle(design.dist_p, design.dist_q, grid[i]);
    }

    const std::size_t iters = design.mc_iterations;
    std::vector<std::uint8_t> failed(iters, 0);
    // covered[it][a][i] flattened; avg width per (it, a).
    std::vector<std::uint8_t> covered(iters * n_alphas * n_points, 0);
    std::vector<double> widths(iters * n_alphas, 0.0);

    parallel_for(iters, design.threads, [&](std::size_t it) {
      try {
        RngStream stream_p(design.seed, {kDataTag, n, it, 0});
        RngStream stream_q(design.seed, {kDataTag, n, it, 1});
        Sample x(draw_sorted(design.dist_p, n, stream_p));
        Sample y(draw_sorted(design.dist_q, m, stream_q));
        EmpiricalOtMap map(EmpiricalCdf(std::move(x)),
                           EmpiricalCdf(std::move(y)));

        std::vector<double> center(n_points);
        for (std::size_t i = 0; i < n_points; ++i) center[i] = map(grid[i]);

        BootstrapConfig cfg;
        cfg.replicates = design.bootstrap_replicates;
        cfg.seed = derive_seed(design.seed, {kBootstrapSeedTag, n, it});
        cfg.grid = grid;
        cfg.threads = 1;
        const auto rows = pointwise_draws_grid(map, cfg);

        std::vector<double> column(cfg.replicates);
        std::vector<double> half_widths(n_alphas);
        for (std::size_t i = 0; i < n_points; ++i) {
          for (std::size_t b = 0; b < cfg.replicates; ++b) {
            column[b] = rows[b][i];
          }
          std::sort(column.begin(), column.end());
          for (std::size_t a = 0; a < n_alphas; ++a) {
            const double alpha = design.alpha_levels[a];
            const std::size_t idx =
                order_statistic_index(1.0 - 0.5 * alpha, column.size());
            const double hw = std::max(0.0, column[idx - 1]) / root_total;
            half_widths[a] = hw;
            const bool inside = std::fabs(truth[i] - center[i]) <= hw;
            covered[(it * n_alphas + a) * n_points + i] = inside ? 1 : 0;
            widths[it * n_alphas + a] += 2.0 * hw;
          }
        }
        for (std::size_t a = 0; a < n_alphas; ++a) {
          widths[it * n_alphas + a] /= static_cast<double>(n_points);
        }
      } catch (const NumericError&) {
        failed[it] = 1;
      }
    });

    const std::size_t n_failed =
        static_cast<std::size_t>(std::count(failed.begin(), failed.end(), 1));
    const std::size_t n_ok = iters - n_failed;
    const double denom = n_ok > 0 ? static_cast<double>(n_ok) : 1.0;

    for (std::size_t a = 0; a < n_alphas; ++a) {
      PointwiseCoverageCell cell;
      cell.alpha = design.alpha_levels[a];
      cell.n = n;
      cell.m = m;
      cell.failures = n_failed;

      double cov_min = 1.0;
      double cov_max = 0.0;
      double cov_sum = 0.0;
      for (std::size_t i = 0; i < n_points; ++i) {
        std::size_t hits = 0;
        for (std::size_t it = 0; it < iters; ++it) {
          if (failed[it]) continue;
          hits += covered[(it * n_alphas + a) * n_points + i];
        }
        const double cov = static_cast<double>(hits) / denom;
        cov_min = std::min(cov_min, cov);
        cov_max = std::max(cov_max, cov);
        cov_sum += cov;
      }
      cell.coverage_min = cov_min;
      cell.coverage_max = cov_max;
      cell.coverage_avg = cov_sum / static_cast<double>(n_points);

      std::vector<double> cell_widths;
      cell_widths.reserve(n_ok);
      for (std::size_t it = 0; it < iters; ++it) {
        if (!failed[it]) cell_widths.push_back(widths[it * n_alphas + a]);
      }
      cell.median_average_width = median_of(std::move(cell_widths));
      report.pointwise.push_back(cell);
    }
  }
  return report;
}

std::vector<double> z_kappa_sup_draws(const ReferenceDistribution& dist_p,
                                      double kappa,
                                      std::span<const double> grid,
                                      std::size_t draws, std::uint64_t seed,
                                      int threads) {
  if (!(kappa > 0.0 && kappa < 1.0)) {
    throw ConfigError("limit process: kappa must lie in (0,1)");
  }
  if (grid.empty()) throw ConfigError("limit process: grid is empty");

  // Positions of the bridges: u = F_P(x) over the grid, strictly inside
  // (0,1) for the supported reference distributions on finite grids.
  std::vector<double> u(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    u[i] = dist_p.cdf(grid[i]);
    if (!(u[i] > 0.0 && u[i] < 1.0)) {
      throw NumericError("limit process: F_P(x) must lie in (0,1)", u[i]);
    }
  }
  if (!std::is_sorted(u.begin(), u.end())) {
    throw ConfigError("limit process: grid must be sorted");
  }

  const double w1 = std::sqrt(1.0 / kappa);
  const double w2 = std::sqrt(1.0 / (1.0 - kappa));
  const double weight = 1.0 / kappa + 1.0 / (1.0 - kappa);

  std::vector<double> out(draws);
  parallel_for(draws, threads, [&](std::size_t d) {
    RngStream stream(seed, {d});
    // Sequential conditional sampling of two Brownian bridges at the sorted
    // u-points: B(s) | B(t) = g is Gaussian with mean g (1-s)/(1-t) and
    // variance (s-t)(1-s)/(1-t).
    double g1 = 0.0;
    double g2 = 0.0;
    double t_prev = 0.0;
    double sup = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double s = u[i];
      if (s > t_prev) {
        const double ratio = (1.0 - s) / (1.0 - t_prev);
        const double sd = std::sqrt((s - t_prev) * ratio);
        g1 = g1 * ratio + sd * stream.normal();
        g2 = g2 * ratio + sd * stream.normal();
        t_prev = s;
      }
      const double z =
          (w1 * g1 - w2 * g2) / std::sqrt(weight * s * (1.0 - s));
      sup = std::max(sup, std::fabs(z));
    }
    out[d] = sup;
  });
  return out;
}

}  // namespace otband
