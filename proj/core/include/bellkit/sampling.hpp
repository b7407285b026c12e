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

#include <stdexcept>

#include "bellkit/qstate.hpp"
#include "bellkit/rng.hpp"

namespace bellkit {

/// random_separable was asked for fewer than one mixture term.
struct InvalidCountError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Point on the standard 3-simplex: four non-negative weights summing to 1.
struct SimplexPoint {
  std::array<double, 4> w{};
};

/// Haar-random two-qubit pure state: four standard complex Gaussian
/// amplitudes, normalized. Consumes amplitudes in basis order.
PureState haar_pure(SeededRng& rng);

/// Haar-random U(4): QR of a complex Ginibre matrix (drawn row-major), using
/// the factorization whose R has a real positive diagonal. That convention is
/// what the usual R-diagonal phase normalization Q <- Q * diag(R_kk/|R_kk|)
/// produces, so the phase factors here are identically 1.
CMat4 haar_unitary4(SeededRng& rng);

/// Uniform on the 3-simplex: four unit-rate exponentials, normalized.
SimplexPoint simplex_uniform(SeededRng& rng);

/// Random mixed state U diag(w) U^dag with U from haar_unitary4 (drawn first)
/// and w from simplex_uniform.
DensityMatrix random_mixed(SeededRng& rng);

/// Tensor product of two independent Haar single-qubit pure states (party A
/// drawn first). Always separable.
PureState random_product_pure(SeededRng& rng);

/// Convex mixture of k random product pure states with uniform-simplex
/// weights (the k projectors are drawn first, then the k weights). A test
/// ensemble of separable states, not a uniform measure on the separable set.
DensityMatrix random_separable(SeededRng& rng, int k = 8);

}  // namespace bellkit
