/**
 * Copyright 2026, the qsearchlab authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace qsl {

/// Deterministic random stream for experiments.
///
/// Wraps std::mt19937_64 (whose output sequence is pinned by the standard)
/// and derives uniform doubles and bounded integers by hand so that results
/// do not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Unbiased uniform integer in [0, bound). bound must be nonzero.
  uint64_t uniform_below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::uniform_below: bound must be nonzero");
    uint64_t x, r;
    do {
      x = engine_();
      r = x % bound;
    } while (x - r > UINT64_MAX - (bound - 1));
    return r;
  }

  /// Standard normal deviate (Box-Muller; second value cached).
  double gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - uniform_double();  // (0, 1]
    const double u2 = uniform_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    cached_ = radius * std::sin(angle);
    have_cached_ = true;
    return radius * std::cos(angle);
  }

  /// Counter-based stream split: the stream for index i does not depend on
  /// how many other streams are derived from the same master seed.
  static uint64_t derive_seed(uint64_t master, uint64_t index) {
    uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

/// Samples an index proportionally to the (nonnegative) weights.
/// The weights are normalized by their own total, so a slightly drifted
/// normalization does not bias the draw.
inline uint64_t sample_discrete(std::span<const double> weights, Rng& rng) {
  if (weights.empty()) throw std::invalid_argument("sample_discrete: empty weights");
  double total = 0.0;
  for (double w : weights) total += w;
  if (total <= 0.0) throw std::invalid_argument("sample_discrete: zero total weight");
  const double target = rng.uniform_double() * total;
  double cumulative = 0.0;
  for (size_t i = 0; i < weights.size(); ++i) {
    cumulative += weights[i];
    if (target < cumulative) return i;
  }
  return weights.size() - 1;
}

}  // namespace qsl
