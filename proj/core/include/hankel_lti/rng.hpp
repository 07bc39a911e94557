#pragma once

#include <cmath>
#include <cstdint>

#include "hankel_lti/types.hpp"

namespace hlti {

/// Counter-based splittable random stream. A draw is a pure function of
/// (seed, stream, counter), so identical configurations replay identical
/// sequences and parallel trials own disjoint streams without locking.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(mix(seed + 0x9E3779B97F4A7C15ULL) ^ mix(stream + 0xD1B54A32D192ED03ULL))) {}

  /// Independent stream derived from the same seed.
  SeededRng split(std::uint64_t stream) const {
    SeededRng r(0);
    r.key_ = mix(key_ ^ mix(stream + 0x8CB92BA72F3D8DD7ULL));
    r.counter_ = 0;
    return r;
  }

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9E3779B97F4A7C15ULL); }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1].
  double next_double_open() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Standard normal, Box-Muller. Consumes two counters per draw.
  double next_gaussian() {
    const double u1 = next_double_open();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi() * u2);
  }

  /// Re and Im i.i.d. N(0,1) scaled by 1/sqrt(2), so E|z|^2 = 1.
  Complex next_complex_gaussian() {
    const double s = 1.0 / std::sqrt(2.0);
    const double re = next_gaussian();
    const double im = next_gaussian();
    return {s * re, s * im};
  }

  /// Uniform over the area of the open unit disk.
  Complex next_uniform_disk() {
    const double r = std::sqrt(next_double());
    const double th = two_pi() * next_double();
    return std::polar(r, th);
  }

  /// |z| = 1 - v^(1/alpha) with v uniform, angle uniform, so that
  /// P(|z| > 1 - rho) = rho^alpha exactly.
  Complex next_boundary_exponent(double alpha) {
    require(alpha > 0.0, "boundary-exponent draw requires alpha > 0");
    const double v = next_double_open();
    const double r = 1.0 - std::pow(v, 1.0 / alpha);
    const double th = two_pi() * next_double();
    return std::polar(r, th);
  }

 private:
  static constexpr double two_pi() { return 6.283185307179586476925286766559; }

  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace hlti
