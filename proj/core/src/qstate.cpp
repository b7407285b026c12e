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

#include "bellkit/qstate.hpp"

#include <algorithm>
#include <cmath>

namespace bellkit {

namespace {

double vector_norm(const std::array<Complex, 4>& a) {
  double s = 0.0;
  for (const auto& z : a) s += std::norm(z);
  return std::sqrt(s);
}

void require_finite(const std::array<Complex, 4>& a, const char* what) {
  for (const auto& z : a) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw NotNormalizedError(std::string(what) + ": non-finite amplitude");
  }
}

}  // namespace

PureState::PureState(const std::array<Complex, 4>& amplitudes)
    : amp_(amplitudes) {
  require_finite(amp_, "PureState");
  if (std::abs(vector_norm(amp_) - 1.0) > 1e-12)
    throw NotNormalizedError("PureState: amplitudes are not unit norm");
}

PureState PureState::normalized(std::array<Complex, 4> raw) {
  require_finite(raw, "PureState::normalized");
  const double n = vector_norm(raw);
  if (n < 1e-150)
    throw NotNormalizedError("PureState::normalized: vector is zero");
  for (auto& z : raw) z /= n;
  return PureState(raw);
}

DensityMatrix::DensityMatrix(const CMat4& mat) : mat_(mat) {
  for (const auto& z : mat_.e) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw StateValidationError("DensityMatrix: non-finite entry");
  }
  const double scale = std::max(frobenius_norm(mat_), 1e-300);
  if (frobenius_norm(mat_ - adjoint(mat_)) > 1e-10 * scale)
    throw StateValidationError("DensityMatrix: matrix is not Hermitian");
  const Complex tr = trace(mat_);
  if (std::abs(tr - Complex(1.0, 0.0)) > 1e-10)
    throw StateValidationError("DensityMatrix: trace is not 1");
  const EigenResult4 eig = hermitian_eigen(mat_);
  if (eig.values[0] < -1e-10)
    throw StateValidationError("DensityMatrix: not positive semidefinite");
}

DensityMatrix from_pure(const PureState& psi) {
  const auto& a = psi.amplitudes();
  if (std::abs(vector_norm(a) - 1.0) > 1e-10)
    throw NotNormalizedError("from_pure: state is not normalized");
  CMat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = a[i] * std::conj(a[j]);
  return DensityMatrix(m);
}

CMat4 partial_transpose(const DensityMatrix& rho) {
  const CMat4& m = rho.mat();
  CMat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out(2 * i + j, 2 * k + l) = m(2 * i + l, 2 * k + j);
  return out;
}

NegativityValue negativity(const DensityMatrix& rho) {
  const EigenResult4 eig = hermitian_eigen(partial_transpose(rho));
  double sum = 0.0;
  for (double v : eig.values) sum += std::max(0.0, -v);
  NegativityValue n;
  n.raw = 2.0 * sum;
  n.value = std::clamp(n.raw, 0.0, 1.0);
  return n;
}

bool is_entangled(const DensityMatrix& rho, double tol) {
  return negativity(rho).value > tol;
}

const CMat4& magic_basis() {
  static const CMat4 basis = [] {
    const double r = 1.0 / std::sqrt(2.0);
    const Complex mi(0.0, -1.0);
    CMat4 b;
    // |Phi+> = (|00> + |11>)/sqrt2
    b(0, 0) = r;
    b(3, 0) = r;
    // -i|Phi-> = -i(|00> - |11>)/sqrt2
    b(0, 1) = mi * r;
    b(3, 1) = -mi * r;
    // |Psi-> = (|01> - |10>)/sqrt2
    b(1, 2) = r;
    b(2, 2) = -r;
    // -i|Psi+> = -i(|01> + |10>)/sqrt2
    b(1, 3) = mi * r;
    b(2, 3) = mi * r;
    return b;
  }();
  return basis;
}

Fidelity fully_entangled_fraction(const DensityMatrix& rho) {
  const CMat4& e = magic_basis();
  const CMat4 in_magic = adjoint(e) * rho.mat() * e;
  CMat4 real_part;
  for (int i = 0; i < 16; ++i) real_part.e[i] = in_magic.e[i].real();
  const EigenResult4 eig = hermitian_eigen(real_part);
  return Fidelity{eig.values[3]};
}

double fidelity_negativity_slack(const DensityMatrix& rho) {
  return 0.5 * (1.0 + negativity(rho).value) -
         fully_entangled_fraction(rho).value;
}

}  // namespace bellkit
