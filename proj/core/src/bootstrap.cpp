#include "otband/bootstrap.hpp"

#include <algorithm>
#include <cmath>

#include "otband/errors.hpp"
#include "otband/parallel.hpp"

namespace otband {

namespace {

// Stream-key domain tags; replicate b of a given flavor always uses the
// same key regardless of scheduling.
constexpr std::uint64_t kUniformReplicateTag = 0x10;
constexpr std::uint64_t kPointwiseReplicateTag = 0x11;

double kernel_noise(const KernelSpec& kernel, RngStream& stream) {
  switch (kernel.family) {
    case KernelFamily::gaussian:
      return stream.normal();
    case KernelFamily::epanechnikov: {
      // The Epanechnikov density is the law of the median of three
      // independent U(-1,1) draws.
      double a = 2.0 * stream.uniform01() - 1.0;
      double b = 2.0 * stream.uniform01() - 1.0;
      double c = 2.0 * stream.uniform01() - 1.0;
      if (a > b) std::swap(a, b);
      if (b > c) std::swap(b, c);
      return std::max(a, b);
    }
  }
  return 0.0;
}

void fill_mixture_draws(const SmoothedCdf& fitted, std::size_t count,
                        RngStream& stream, std::vector<double>& out) {
  const auto& values = fitted.sample().values();
  const double r = fitted.bandwidth();
  const auto n = static_cast<std::uint64_t>(values.size());
  out.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double center = values[stream.uniform_below(n)];
    out[i] = center + r * kernel_noise(fitted.kernel(), stream);
  }
}

void fill_resample_with_replacement(const std::vector<double>& values,
                                    RngStream& stream,
                                    std::vector<double>& out) {
  const auto n = static_cast<std::uint64_t>(values.size());
  out.resize(values.size());
  for (auto& v : out) v = values[stream.uniform_below(n)];
}

// T*(x) from sorted bootstrap samples: step CDF of x_star composed with the
// order-statistic quantile of y_star, inf convention at p = 0.
double bootstrap_map_eval(const std::vector<double>& x_star,
                          const std::vector<double>& y_star, double x) {
  const auto it = std::upper_bound(x_star.begin(), x_star.end(), x);
  const auto count = static_cast<std::size_t>(it - x_star.begin());
  if (count == 0) return y_star.front();
  const double p =
      static_cast<double>(count) / static_cast<double>(x_star.size());
  return y_star[order_statistic_index(p, y_star.size()) - 1];
}

}  // namespace

void BootstrapConfig::validate() const {
  if (replicates < 100) {
    throw ConfigError("bootstrap: need at least 100 replicates");
  }
  if (grid.empty()) throw ConfigError("bootstrap: grid is empty");
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw ConfigError("bootstrap: grid must be sorted");
  }
}

Sample sample_from_smoothed(const SmoothedCdf& fitted, std::size_t count,
                            RngStream& stream) {
  std::vector<double> draws;
  fill_mixture_draws(fitted, count, stream, draws);
  return Sample(std::move(draws));
}

SupStatisticDraws uniform_sup_draws(const OtMapEstimate& map,
                                    const ScaleEstimate& scale,
                                    const BootstrapConfig& cfg) {
  cfg.validate();
  if (scale.grid != cfg.grid) {
    throw ConfigError("bootstrap: scale was not computed on cfg.grid");
  }
  const std::size_t n = map.n();
  const std::size_t m = map.m();
  const double root_total = std::sqrt(static_cast<double>(n + m));

  SupStatisticDraws draws;
  draws.values.resize(cfg.replicates);

  parallel_for(cfg.replicates, cfg.threads, [&](std::size_t b) {
    RngStream stream(cfg.seed, {kUniformReplicateTag, b});
    std::vector<double> x_star;
    std::vector<double> y_star;
    fill_mixture_draws(map.source(), n, stream, x_star);
    fill_mixture_draws(map.target(), m, stream, y_star);
    std::sort(x_star.begin(), x_star.end());
    std::sort(y_star.begin(), y_star.end());

    double sup = 0.0;
    for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
      const double t_star = bootstrap_map_eval(x_star, y_star, cfg.grid[i]);
      const double dev = std::fabs(t_star - scale.center[i]) / scale.s_hat[i];
      sup = std::max(sup, dev);
    }
    draws.values[b] = root_total * sup;
  });

  std::sort(draws.values.begin(), draws.values.end());
  return draws;
}

double quantile_of_draws(const SupStatisticDraws& draws, double alpha) {
  if (draws.values.empty()) throw ConfigError("quantile of empty draws");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("quantile of draws: alpha must lie in (0,1)");
  }
  const std::size_t idx =
      order_statistic_index(1.0 - alpha, draws.values.size());
  return draws.values[idx - 1];
}

PointwiseDraws pointwise_draws(const EmpiricalOtMap& map, double x,
                               const BootstrapConfig& cfg) {
  if (cfg.replicates < 100) {
    throw ConfigError("bootstrap: need at least 100 replicates");
  }
  const std::size_t n = map.n();
  const std::size_t m = map.m();
  const double root_total = std::sqrt(static_cast<double>(n + m));
  const double center = map(x);

  PointwiseDraws out;
  out.x = x;
  out.values.resize(cfg.replicates);

  parallel_for(cfg.replicates, cfg.threads, [&](std::size_t b) {
    RngStream stream(cfg.seed, {kPointwiseReplicateTag, b});
    std::vector<double> x_star;
    std::vector<double> y_star;
    fill_resample_with_replacement(map.source().sample().values(), stream,
                                   x_star);
    fill_resample_with_replacement(map.target().sample().values(), stream,
                                   y_star);
    std::sort(x_star.begin(), x_star.end());
    std::sort(y_star.begin(), y_star.end());
    const double t_star = bootstrap_map_eval(x_star, y_star, x);
    out.values[b] = root_total * (t_star - center);
  });
  return out;
}

std::vector<std::vector<double>> pointwise_draws_grid(
    const EmpiricalOtMap& map, const BootstrapConfig& cfg) {
  cfg.validate();
  const double root_total =
      std::sqrt(static_cast<double>(map.n() + map.m()));

  std::vector<double> center(cfg.grid.size());
  for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
    center[i] = map(cfg.grid[i]);
  }

  std::vector<std::vector<double>> rows(cfg.replicates);
  parallel_for(cfg.replicates, cfg.threads, [&](std::size_t b) {
    RngStream stream(cfg.seed, {kPointwiseReplicateTag, b});
    std::vector<double> x_star;
    std::vector<double> y_star;
    fill_resample_with_replacement(map.source().sample().values(), stream,
                                   x_star);
    fill_resample_with_replacement(map.target().sample().values(), stream,
                                   y_star);
    std::sort(x_star.begin(), x_star.end());
    std::sort(y_star.begin(), y_star.end());

    auto& row = rows[b];
    row.resize(cfg.grid.size());
    for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
      const double t_star = bootstrap_map_eval(x_star, y_star, cfg.grid[i]);
      row[i] = root_total * (t_star - center[i]);
    }
  });
  return rows;
}

}  // namespace otband
