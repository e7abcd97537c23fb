#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "otband/dist_est.hpp"

namespace otband {

/// Smoothed transport-map estimate between two fitted kernel CDFs:
/// T(x) = F_Q^{-1}(F_P(x)). Evaluation is lazy (compose and invert), and the
/// defining identity F_Q(T(x)) = F_P(x) holds to the inversion tolerance.
class OtMapEstimate {
 public:
  OtMapEstimate(SmoothedCdf source, SmoothedCdf target);

  /// T(x); throws NumericError if the inner quantile is not bracketed.
  double operator()(double x) const;

  const SmoothedCdf& source() const { return source_; }
  const SmoothedCdf& target() const { return target_; }
  std::size_t n() const { return source_.sample().size(); }
  std::size_t m() const { return target_.sample().size(); }

 private:
  SmoothedCdf source_;
  SmoothedCdf target_;
};

/// Plug-in transport map from empirical step CDFs: a Y-order statistic at
/// the generalized-inverse index, with F_P(x) = 0 mapped to Y_(1) by the inf
/// convention.
class EmpiricalOtMap {
 public:
  EmpiricalOtMap(EmpiricalCdf source, EmpiricalCdf target);

  double operator()(double x) const;

  const EmpiricalCdf& source() const { return source_; }
  const EmpiricalCdf& target() const { return target_; }
  std::size_t n() const { return source_.sample().size(); }
  std::size_t m() const { return target_.sample().size(); }

 private:
  EmpiricalCdf source_;
  EmpiricalCdf target_;
};

/// Studentizing scale on a grid. `center` caches T(x) (needed to evaluate
/// the target density) so downstream band assembly does not re-invert.
/// Values that underflowed the positivity floor are raised to it and
/// flagged, never silently.
struct ScaleEstimate {
  std::vector<double> grid;
  std::vector<double> center;
  std::vector<double> s_hat;
  std::vector<bool> floor_applied;
  double floor_value = 0.0;
};

/// Plug-in scale s-hat(x) = sqrt((N/n + N/m) F_P(x)(1-F_P(x))) / f_Q(T(x)),
/// N = n + m, evaluated on the grid. The floor is 1e-8 times the Y-sample
/// interquartile range (guards floating-point underflow in deep tails).
ScaleEstimate scale_plugin(const OtMapEstimate& map,
                           std::span<const double> grid);

/// Known-truth scale s_kappa(x) used by simulations:
/// sqrt((1/kappa + 1/(1-kappa)) F_P(x)(1-F_P(x))) / f_Q(T0(x)).
/// Throws ConfigError for kappa outside (0,1) and NumericError when
/// f_Q(T0(x)) <= 0 or F_P(x) lies outside (0,1).
double scale_oracle_s_kappa(const std::function<double(double)>& cdf_p,
                            const std::function<double(double)>& density_q,
                            const std::function<double(double)>& map_truth,
                            double kappa, double x);

/// Known truths for simulation-only diagnostics.
struct MapTruths {
  std::function<double(double)> cdf_p;
  std::function<double(double)> density_q;
  std::function<double(double)> map;
};

/// Residual of the asymptotic linearization of sqrt(N)(T(x) - T0(x)): the
/// scaled estimation error minus the two influence-term averages, evaluated
/// with the true F_P, f_Q, T0. Shrinks stochastically as n, m grow.
double bahadur_residual(const OtMapEstimate& map, const MapTruths& truths,
                        double x);

}  // namespace otband
