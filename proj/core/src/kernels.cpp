#include "otband/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "otband/special.hpp"

namespace otband {

KernelSpec KernelSpec::gaussian() { return {KernelFamily::gaussian, 2, 9.0}; }

KernelSpec KernelSpec::epanechnikov() {
  return {KernelFamily::epanechnikov, 2, 1.0};
}

KernelSpec KernelSpec::from_name(std::string_view name) {
  if (name == "gaussian") return gaussian();
  if (name == "epanechnikov") return epanechnikov();
  throw std::invalid_argument("unknown kernel: " + std::string(name));
}

std::string_view KernelSpec::name() const {
  return family == KernelFamily::gaussian ? "gaussian" : "epanechnikov";
}

double KernelSpec::density(double u) const {
  switch (family) {
    case KernelFamily::gaussian:
      return special::normal_pdf(u);
    case KernelFamily::epanechnikov:
      if (u <= -1.0 || u >= 1.0) return 0.0;
      return 0.75 * (1.0 - u * u);
  }
  return 0.0;
}

double KernelSpec::cdf(double u) const {
  switch (family) {
    case KernelFamily::gaussian:
      return special::normal_cdf(u);
    case KernelFamily::epanechnikov:
      if (u <= -1.0) return 0.0;
      if (u >= 1.0) return 1.0;
      return 0.5 + 0.75 * u - 0.25 * u * u * u;
  }
  return 0.0;
}

double kernel_eval(const KernelSpec& spec, double u) { return spec.density(u); }

double kernel_cdf(const KernelSpec& spec, double u) { return spec.cdf(u); }

double BandwidthRule::bandwidth(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("bandwidth: n must be >= 1");
  if (!(beta >= 0.0)) throw std::invalid_argument("bandwidth: beta must be >= 0");
  if (!(constant > 0.0)) {
    throw std::invalid_argument("bandwidth: constant must be positive");
  }
  return constant *
         std::pow(static_cast<double>(n), -1.0 / exponent_denominator());
}

bool check_order_compatibility(const KernelSpec& spec, double beta) {
  return static_cast<double>(spec.order) > beta + 0.5;
}

}  // namespace otband
