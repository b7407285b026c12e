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
#include <cmath>
#include <complex>
#include <stdexcept>

namespace bellkit {

using Complex = std::complex<double>;

/// Input to hermitian_eigen was not Hermitian within the requested tolerance.
struct NotHermitianError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dense 2x2 complex matrix, row-major.
struct CMat2 {
  std::array<Complex, 4> e{};

  Complex& operator()(int r, int c) { return e[2 * r + c]; }
  const Complex& operator()(int r, int c) const { return e[2 * r + c]; }

  static CMat2 zero() { return CMat2{}; }
  static CMat2 identity() {
    CMat2 m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    return m;
  }
};

/// Dense 4x4 complex matrix, row-major.
struct CMat4 {
  std::array<Complex, 16> e{};

  Complex& operator()(int r, int c) { return e[4 * r + c]; }
  const Complex& operator()(int r, int c) const { return e[4 * r + c]; }

  static CMat4 zero() { return CMat4{}; }
  static CMat4 identity() {
    CMat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }
};

inline CMat2 operator+(const CMat2& a, const CMat2& b) {
  CMat2 r;
  for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

inline CMat2 operator-(const CMat2& a, const CMat2& b) {
  CMat2 r;
  for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

inline CMat2 operator*(Complex s, const CMat2& a) {
  CMat2 r;
  for (int i = 0; i < 4; ++i) r.e[i] = s * a.e[i];
  return r;
}

inline CMat2 operator*(double s, const CMat2& a) { return Complex(s, 0.0) * a; }

inline CMat2 operator*(const CMat2& a, const CMat2& b) {
  CMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < 2; ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

inline CMat4 operator+(const CMat4& a, const CMat4& b) {
  CMat4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

inline CMat4 operator-(const CMat4& a, const CMat4& b) {
  CMat4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

inline CMat4 operator*(Complex s, const CMat4& a) {
  CMat4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = s * a.e[i];
  return r;
}

inline CMat4 operator*(double s, const CMat4& a) { return Complex(s, 0.0) * a; }

inline CMat4 operator*(const CMat4& a, const CMat4& b) {
  CMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

inline CMat2 adjoint(const CMat2& a) {
  CMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

inline CMat4 adjoint(const CMat4& a) {
  CMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

inline Complex trace(const CMat2& a) { return a(0, 0) + a(1, 1); }

inline Complex trace(const CMat4& a) {
  return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3);
}

inline double frobenius_norm(const CMat2& a) {
  double s = 0.0;
  for (const auto& z : a.e) s += std::norm(z);
  return std::sqrt(s);
}

inline double frobenius_norm(const CMat4& a) {
  double s = 0.0;
  for (const auto& z : a.e) s += std::norm(z);
  return std::sqrt(s);
}

/// Kronecker product with the first factor on the slow (left) index:
/// out(2i+k, 2j+l) = a(i,j) * b(k,l).
inline CMat4 kron(const CMat2& a, const CMat2& b) {
  CMat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

/// Eigendecomposition of a Hermitian 4x4 matrix.
///
/// values are ascending; column k of vectors is the unit eigenvector paired
/// with values[k], so M = vectors * diag(values) * adjoint(vectors).
struct EigenResult4 {
  std::array<double, 4> values{};
  CMat4 vectors;
};

/// Cyclic Jacobi eigensolver for Hermitian 4x4 matrices.
///
/// Requires ||m - adjoint(m)||_F <= tol * ||m||_F, otherwise throws
/// NotHermitianError. Sweeps until the off-diagonal Frobenius norm drops below
/// 1e-13 * ||m||_F, capped at 50 sweeps. Deterministic for fixed input.
EigenResult4 hermitian_eigen(const CMat4& m, double tol = 1e-10);

}  // namespace bellkit
