#pragma once

#include <cstddef>
#include <string_view>

namespace otband {

enum class KernelFamily { gaussian, epanechnikov };

/// A symmetric, positive smoothing kernel together with its antiderivative.
/// Both shipped kernels are of order 2 (zero first moment, positive second
/// moment). `support_radius` is the |u| beyond which the antiderivative is
/// numerically indistinguishable from 0 or 1: exact for Epanechnikov, and 9
/// for the Gaussian (Phi(-9) ~ 1.1e-19).
struct KernelSpec {
  KernelFamily family = KernelFamily::gaussian;
  int order = 2;
  double support_radius = 9.0;

  static KernelSpec gaussian();
  static KernelSpec epanechnikov();

  /// Parses "gaussian" or "epanechnikov"; throws std::invalid_argument
  /// otherwise.
  static KernelSpec from_name(std::string_view name);

  std::string_view name() const;

  /// K(u).
  double density(double u) const;
  /// Antiderivative of K: integral of K over (-inf, u], in [0, 1].
  double cdf(double u) const;
};

double kernel_eval(const KernelSpec& spec, double u);
double kernel_cdf(const KernelSpec& spec, double u);

/// Bandwidth schedule r_n = c * n^{-1/(2*beta+1)} for a smoothness
/// parameter beta >= 0 and constant c > 0.
struct BandwidthRule {
  double beta = 0.5;
  double constant = 0.5;

  double exponent_denominator() const { return 2.0 * beta + 1.0; }

  /// r_n for a sample of size n >= 1; throws std::invalid_argument on n = 0.
  double bandwidth(std::size_t n) const;
};

/// True iff the kernel order exceeds beta + 1/2. With order-2 kernels this
/// caps usable beta strictly below 1.5.
bool check_order_compatibility(const KernelSpec& spec, double beta);

}  // namespace otband
