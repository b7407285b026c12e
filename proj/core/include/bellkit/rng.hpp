// Copyright 2026 The bellkit Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "bellkit/linalg.hpp"

namespace bellkit {

/// Deterministic random stream: xoshiro256++ seeded through SplitMix64.
///
/// The generator, the seeding expansion, the uniform-double conversion and
/// the Box-Muller Gaussian layout are all fixed here so that a seed pins the
/// exact sample sequence on every platform:
///   - state: four 64-bit words, the first four outputs of SplitMix64(seed);
///   - next_u64: xoshiro256++ (Blackman & Vigna), rotl(s0 + s3, 23) + s0;
///   - next_double: (next_u64() >> 11) * 2^-53, uniform on [0, 1);
///   - next_gaussian_pair: Box-Muller from two uniforms, u1 mapped to (0, 1];
///   - split(seed, index): a child stream seeded with the SplitMix64 finalizer
///     of seed + (index + 1) * 0x9E3779B97F4A7C15 (the SplitMix64 increment),
///     injective in index for a fixed seed.
///
/// An instance is single-owner; concurrent work must use split streams.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);

  /// Independent child stream for (seed, index); deterministic.
  static SeededRng split(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double next_double();

  /// Two independent standard normals via Box-Muller; consumes two uniforms.
  std::pair<double, double> next_gaussian_pair();

  /// Standard complex Gaussian: independent N(0,1) real and imaginary parts.
  Complex next_complex_gaussian();

 private:
  std::array<std::uint64_t, 4> state_;
};

}  // namespace bellkit
