// Copyright 2026 The qcorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file rng.hpp
 * Deterministic random number generation.
 *
 * Reproducibility across platforms and standard libraries is part of the
 * public contract: the same (seed, stream) pair must yield bit-identical
 * results everywhere, now and in future releases. The standard library
 * distributions are implementation defined, so the whole chain is spelled
 * out here: xoshiro256++ for raw 64-bit output, splitmix64 for state
 * seeding, and Box-Muller for Gaussians. data/rng_reference.txt pins the
 * raw output sequence for seed 42.
 */

#ifndef QCORR_RNG_HPP
#define QCORR_RNG_HPP

#include <cmath>
#include <cstdint>

#include "qcorr/complex_matrix.hpp"

namespace qcorr {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

/// splitmix64: advances `state` and returns the mixed output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += kGolden;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

/**
 * xoshiro256++ generator.
 *
 * `stream` selects a decorrelated substream of the same seed, used to give
 * every trial of a sweep its own generator without coupling trial order to
 * consumption order. State initialization: four splitmix64 outputs from
 * the state seed ^ (kGolden * (stream + 1)).
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t st = seed ^ (detail::kGolden * (stream + 1));
    for (std::uint64_t& word : s_) word = detail::splitmix64(st);
  }

  /// Raw 64-bit output.
  std::uint64_t next_u64() {
    const std::uint64_t result = detail::rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = detail::rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1), 53 significant bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n). n must be positive; the floor construction
  /// keeps the value strictly below n.
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) throw ValidationError("uniform_int: n must be positive");
    const std::uint64_t v = static_cast<std::uint64_t>(uniform01() * static_cast<double>(n));
    return v < n ? v : n - 1;
  }

  /// Standard normal pair by Box-Muller. Consumes exactly two raw outputs:
  /// radius from the first, angle from the second.
  void normal_pair(double& z0, double& z1) {
    const double u1 = 1.0 - uniform01();  // in (0, 1], keeps the log finite
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    z0 = radius * std::cos(angle);
    z1 = radius * std::sin(angle);
  }

  /// Complex number with independent standard normal real and imaginary
  /// parts (one Box-Muller pair).
  cplx complex_normal() {
    double re, im;
    normal_pair(re, im);
    return {re, im};
  }

 private:
  std::uint64_t s_[4];
};

}  // namespace qcorr

#endif  // QCORR_RNG_HPP
