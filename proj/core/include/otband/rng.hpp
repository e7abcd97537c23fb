#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

// Reproducible, splittable random streams. Every consumer derives its own
// stream from (seed, key words); a stream's output depends only on that key,
// never on scheduling, so parallel and serial runs produce identical
// results. The generator is xoshiro256++ seeded through SplitMix64.

namespace otband {

namespace rng_detail {

inline constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += golden);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace rng_detail

class RngStream {
 public:
  /// Stream keyed by a seed and an arbitrary path of words. Distinct paths
  /// give statistically independent streams.
  RngStream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t mix = seed;
    for (std::uint64_t w : path) {
      mix = rng_detail::splitmix64(mix) ^ (w + rng_detail::golden);
    }
    std::uint64_t sm = mix;
    for (auto& word : state_) word = rng_detail::splitmix64(sm);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result =
        rng_detail::rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rng_detail::rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1) (safe for log()).
  double uniform01_open() {
    return ((next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Unbiased uniform integer in {0, ..., n-1}, n >= 1.
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t mask = ~std::uint64_t{0} >> __builtin_clzll(n - 1);
    std::uint64_t v;
    do {
      v = next_u64() & mask;
    } while (v >= n);
    return v;
  }

  /// Standard normal draw (Box-Muller; the second value of each pair is
  /// cached, so draws come in deterministic stream order).
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform01_open()));
    const double angle = 2.0 * std::numbers::pi * uniform01();
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
  }

  /// Gamma(shape, 1) draw via the Marsaglia-Tsang squeeze method.
  double gamma(double shape) {
    if (shape < 1.0) {
      const double boost = std::pow(uniform01_open(), 1.0 / shape);
      return gamma(shape + 1.0) * boost;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / (3.0 * std::sqrt(d));
    for (;;) {
      double x;
      double v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform01_open();
      const double x2 = x * x;
      if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
      if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

 private:
  std::uint64_t state_[4];
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace otband
