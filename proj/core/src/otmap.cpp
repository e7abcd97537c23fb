#include "otband/otmap.hpp"

#include <cmath>

#include "otband/errors.hpp"

namespace otband {

OtMapEstimate::OtMapEstimate(SmoothedCdf source, SmoothedCdf target)
    : source_(std::move(source)), target_(std::move(target)) {}

double OtMapEstimate::operator()(double x) const {
  return target_.quantile(source_.cdf(x));
}

EmpiricalOtMap::EmpiricalOtMap(EmpiricalCdf source, EmpiricalCdf target)
    : source_(std::move(source)), target_(std::move(target)) {}

double EmpiricalOtMap::operator()(double x) const {
  const double p = source_.cdf(x);
  if (p <= 0.0) return target_.sample().min();
  return target_.quantile(p);
}

ScaleEstimate scale_plugin(const OtMapEstimate& map,
                           std::span<const double> grid) {
  const auto n = static_cast<double>(map.n());
  const auto m = static_cast<double>(map.m());
  const double total = n + m;
  const double ratio_sum = total / n + total / m;

  ScaleEstimate out;
  out.grid.assign(grid.begin(), grid.end());
  out.center.resize(grid.size());
  out.s_hat.resize(grid.size());
  out.floor_applied.assign(grid.size(), false);
  out.floor_value = 1e-8 * map.target().sample().iqr();

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    const double fp = map.source().cdf(x);
    const double t = map.target().quantile(fp);
    out.center[i] = t;
    const double dens = map.target().density(t);
    double s = dens > 0.0
                   ? std::sqrt(ratio_sum * fp * (1.0 - fp)) / dens
                   : 0.0;
    if (!(s >= out.floor_value)) {
      s = out.floor_value;
      out.floor_applied[i] = true;
    }
    out.s_hat[i] = s;
  }
  return out;
}

double scale_oracle_s_kappa(const std::function<double(double)>& cdf_p,
                            const std::function<double(double)>& density_q,
                            const std::function<double(double)>& map_truth,
                            double kappa, double x) {
  if (!(kappa > 0.0 && kappa < 1.0)) {
    throw ConfigError("scale oracle: kappa must lie in (0,1)");
  }
  const double fp = cdf_p(x);
  const double dens = density_q(map_truth(x));
  if (!(dens > 0.0)) {
    throw NumericError("scale oracle: target density is not positive");
  }
  if (!(fp >= 0.0 && fp <= 1.0)) {
    throw NumericError("scale oracle: F_P(x) outside [0,1]", fp);
  }
  const double weight = 1.0 / kappa + 1.0 / (1.0 - kappa);
  return std::sqrt(weight * fp * (1.0 - fp)) / dens;
}

double bahadur_residual(const OtMapEstimate& map, const MapTruths& truths,
                        double x) {
  const auto n = static_cast<double>(map.n());
  const auto m = static_cast<double>(map.m());
  const double root_total = std::sqrt(n + m);

  const double t0 = truths.map(x);
  const double fp = truths.cdf_p(x);
  const double dens_q = truths.density_q(t0);

  const double r_n = map.source().bandwidth();
  const double r_m = map.target().bandwidth();
  const auto& kern_p = map.source().kernel();
  const auto& kern_q = map.target().kernel();

  double psi_sum = 0.0;
  for (double xi : map.source().sample().values()) {
    psi_sum += (kern_p.cdf((x - xi) / r_n) - fp) / dens_q;
  }
  double zeta_sum = 0.0;
  for (double yj : map.target().sample().values()) {
    zeta_sum += (fp - kern_q.cdf((t0 - yj) / r_m)) / dens_q;
  }

  const double scaled_error = root_total * (map(x) - t0);
  const double linear_part =
      root_total / n * psi_sum + root_total / m * zeta_sum;
  return scaled_error - linear_part;
}

}  // namespace otband
