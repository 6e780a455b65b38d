#pragma once

#include <cstdint>

#include "hecke/scalar.hpp"

namespace hecke {

// Deterministic 64-bit generator (splitmix64). Every randomized check derives
// its stream from trial_seed(seed, trial), so trial outcomes are reproducible
// from (seed, trial) alone and independent of execution order.

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return mix64(seed + (trial + 1) * 0x9E3779B97F4A7C15ULL);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  // Uniform-ish draw in [lo, hi], inclusive. Modulo bias is irrelevant for
  // test-case generation and keeps the sequence easy to reproduce by hand.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool chance(std::int64_t num, std::int64_t den) { return range(1, den) <= num; }

  // Nonzero numerator in [-mag, mag], denominator in [1, mag].
  Rational rational(std::int64_t mag = 9) {
    std::int64_t num = range(1, mag) * (chance(1, 2) ? 1 : -1);
    return make_rational(num, range(1, mag));
  }

  GaussianRational real_scalar(std::int64_t mag = 9) { return GaussianRational(rational(mag)); }

  // Mostly real, sometimes with a nonzero imaginary part.
  GaussianRational scalar(std::int64_t mag = 9) {
    if (chance(1, 4)) return GaussianRational(rational(mag), rational(mag));
    return real_scalar(mag);
  }

 private:
  std::uint64_t state_;
};

}  // namespace hecke
