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

#include "bellkit/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace bellkit {

namespace {

double off_diagonal_norm(const CMat4& a) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The unitary acts on the (p,q)
// plane as [[c, s], [-conj(s), c]] with c real and c^2 + |s|^2 = 1; it is
// applied as a <- U^dag a U and accumulated into v <- v U.
void rotate(CMat4& a, CMat4& v, int p, int q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;

  const Complex phase = apq / mag;
  const double alpha = a(p, p).real();
  const double beta = a(q, q).real();
  const double tau = (beta - alpha) / (2.0 * mag);
  const double t =
      (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const Complex s = phase * (t * c);

  // Columns p and q: a <- a U.
  for (int k = 0; k < 4; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - std::conj(s) * akq;
    a(k, q) = s * akp + c * akq;
  }
  // Rows p and q: a <- U^dag a.
  for (int k = 0; k < 4; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = std::conj(s) * apk + c * aqk;
  }
  // The rotation makes these exactly zero analytically; enforce it so the
  // off-diagonal norm decreases monotonically.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);

  for (int k = 0; k < 4; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - std::conj(s) * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

EigenResult4 hermitian_eigen(const CMat4& m, double tol) {
  for (const auto& z : m.e) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("hermitian_eigen: non-finite matrix entry");
  }
  const double scale = frobenius_norm(m);
  if (frobenius_norm(m - adjoint(m)) > tol * std::max(scale, 1e-300))
    throw NotHermitianError(
        "hermitian_eigen: matrix is not Hermitian within tolerance");

  // Work on the Hermitian part so the diagonal is exactly real.
  CMat4 a = 0.5 * (m + adjoint(m));
  CMat4 v = CMat4::identity();

  const double target = 1e-13 * scale;
  for (int sweep = 0; sweep < 50; ++sweep) {
    if (off_diagonal_norm(a) <= target) break;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) rotate(a, v, p, q);
  }

  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenResult4 result;
  for (int k = 0; k < 4; ++k) {
    result.values[k] = a(order[k], order[k]).real();
    for (int r = 0; r < 4; ++r) result.vectors(r, k) = v(r, order[k]);
  }
  return result;
}

}  // namespace bellkit
