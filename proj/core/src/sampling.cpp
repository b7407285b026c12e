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

#include "bellkit/sampling.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "bellkit/rng.hpp"

namespace bellkit {

namespace {

constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& word : state_) {
    x += kSplitMixGamma;
    word = splitmix_finalize(x);
  }
}

SeededRng SeededRng::split(std::uint64_t seed, std::uint64_t index) {
  return SeededRng(splitmix_finalize(seed + (index + 1) * kSplitMixGamma));
}

std::uint64_t SeededRng::next_u64() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double SeededRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::pair<double, double> SeededRng::next_gaussian_pair() {
  const double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(angle), r * std::sin(angle)};
}

Complex SeededRng::next_complex_gaussian() {
  const auto [re, im] = next_gaussian_pair();
  return Complex(re, im);
}

PureState haar_pure(SeededRng& rng) {
  std::array<Complex, 4> amp;
  for (auto& a : amp) a = rng.next_complex_gaussian();
  return PureState::normalized(amp);
}

CMat4 haar_unitary4(SeededRng& rng) {
  CMat4 g;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = rng.next_complex_gaussian();

  // Modified Gram-Schmidt on the columns, re-orthogonalized once so the
  // result is unitary to machine precision regardless of conditioning.
  CMat4 q;
  for (int k = 0; k < 4; ++k) {
    std::array<Complex, 4> v;
    for (int r = 0; r < 4; ++r) v[r] = g(r, k);
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j < k; ++j) {
        Complex proj = 0.0;
        for (int r = 0; r < 4; ++r) proj += std::conj(q(r, j)) * v[r];
        for (int r = 0; r < 4; ++r) v[r] -= proj * q(r, j);
      }
    }
    double norm = 0.0;
    for (const auto& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm < 1e-150)
      throw std::runtime_error("haar_unitary4: degenerate Ginibre draw");
    for (int r = 0; r < 4; ++r) q(r, k) = v[r] / norm;
  }
  return q;
}

SimplexPoint simplex_uniform(SeededRng& rng) {
  SimplexPoint p;
  double sum = 0.0;
  for (auto& w : p.w) {
    w = -std::log(1.0 - rng.next_double());
    sum += w;
  }
  for (auto& w : p.w) w /= sum;
  return p;
}

DensityMatrix random_mixed(SeededRng& rng) {
  const CMat4 u = haar_unitary4(rng);
  const SimplexPoint w = simplex_uniform(rng);
  CMat4 scaled;  // u * diag(w)
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) scaled(r, c) = u(r, c) * w.w[c];
  return DensityMatrix(scaled * adjoint(u));
}

PureState random_product_pure(SeededRng& rng) {
  std::array<Complex, 2> a, b;
  for (auto& z : a) z = rng.next_complex_gaussian();
  for (auto& z : b) z = rng.next_complex_gaussian();
  const double na = std::sqrt(std::norm(a[0]) + std::norm(a[1]));
  const double nb = std::sqrt(std::norm(b[0]) + std::norm(b[1]));
  if (na < 1e-150 || nb < 1e-150)
    throw std::runtime_error("random_product_pure: degenerate draw");
  std::array<Complex, 4> amp{a[0] * b[0] / (na * nb), a[0] * b[1] / (na * nb),
                             a[1] * b[0] / (na * nb), a[1] * b[1] / (na * nb)};
  return PureState::normalized(amp);
}

DensityMatrix random_separable(SeededRng& rng, int k) {
  if (k < 1)
    throw InvalidCountError("random_separable: k must be >= 1");
  std::vector<PureState> terms;
  terms.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) terms.push_back(random_product_pure(rng));

  std::vector<double> weights(static_cast<std::size_t>(k));
  double sum = 0.0;
  for (auto& w : weights) {
    w = -std::log(1.0 - rng.next_double());
    sum += w;
  }

  CMat4 m;
  for (int i = 0; i < k; ++i) {
    const auto& a = terms[static_cast<std::size_t>(i)].amplitudes();
    const double w = weights[static_cast<std::size_t>(i)] / sum;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) += w * a[r] * std::conj(a[c]);
  }
  return DensityMatrix(m);
}

}  // namespace bellkit
