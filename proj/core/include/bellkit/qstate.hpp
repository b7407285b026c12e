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
#include <stdexcept>

#include "bellkit/linalg.hpp"

namespace bellkit {

/// A pure-state amplitude vector was not normalized.
struct NotNormalizedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A matrix failed the density-matrix checks (Hermiticity, trace, positivity).
struct StateValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Two-qubit pure state. Amplitudes are ordered |00>, |01>, |10>, |11> with
/// party A on the left (slow) tensor index; this convention is global to the
/// library.
class PureState {
 public:
  /// Validates ||amplitudes|| = 1 within 1e-12 and finiteness.
  explicit PureState(const std::array<Complex, 4>& amplitudes);

  /// Scales an arbitrary nonzero vector to unit norm.
  static PureState normalized(std::array<Complex, 4> raw);

  const std::array<Complex, 4>& amplitudes() const { return amp_; }

 private:
  std::array<Complex, 4> amp_;
};

/// Two-qubit density matrix. Construction validates Hermiticity (1e-10
/// relative), unit trace (1e-10) and positivity (smallest eigenvalue
/// >= -1e-10; tiny negative round-off is accepted, not repaired).
class DensityMatrix {
 public:
  explicit DensityMatrix(const CMat4& mat);

  const CMat4& mat() const { return mat_; }

 private:
  CMat4 mat_;
};

/// Negativity N(rho): twice the absolute sum of the negative eigenvalues of
/// the partial transpose. `value` is clamped to [0, 1]; `raw` keeps the
/// unclamped sum for diagnostics.
struct NegativityValue {
  double value = 0.0;
  double raw = 0.0;
};

/// Fully entangled fraction, in [1/4, 1] for valid states.
struct Fidelity {
  double value = 0.0;
};

/// Rank-1 projector |psi><psi|.
DensityMatrix from_pure(const PureState& psi);

/// Transpose on the B-party index: out(i,j;k,l) = rho(i,l;k,j). The result is
/// Hermitian with unit trace but may be indefinite.
CMat4 partial_transpose(const DensityMatrix& rho);

NegativityValue negativity(const DensityMatrix& rho);

/// PPT test, exact for two qubits: true iff negativity(rho) > tol.
bool is_entangled(const DensityMatrix& rho, double tol = 1e-10);

/// Maximal overlap with a maximally entangled state over local unitaries,
/// computed as the largest eigenvalue of the entrywise real part of rho in
/// the magic basis.
Fidelity fully_entangled_fraction(const DensityMatrix& rho);

/// Slack of the fidelity-negativity inequality: (1 + N(rho))/2 - F(rho).
/// Non-negative (within 1e-9) for every valid state.
double fidelity_negativity_slack(const DensityMatrix& rho);

/// Columns are the magic-basis states, in the fixed phase convention
/// (|Phi+>, -i|Phi->, |Psi->, -i|Psi+>). Maximally entangled states are
/// exactly the real unit vectors in this basis, up to a global phase.
const CMat4& magic_basis();

}  // namespace bellkit
