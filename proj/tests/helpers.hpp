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
//
// Shared fixtures and independent oracles. The oracles deliberately avoid
// the library code paths they check: eigenvalues come from Newton-identity
// characteristic polynomials solved by Durand-Kerner iteration, and the
// fully-entangled-fraction oracle maximizes the overlap directly over local
// unitary angles.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "bellkit/bell.hpp"
#include "bellkit/linalg.hpp"
#include "bellkit/qstate.hpp"
#include "bellkit/rng.hpp"

namespace testkit {

using bellkit::CMat2;
using bellkit::CMat4;
using bellkit::Complex;
using bellkit::DensityMatrix;
using bellkit::Direction;
using bellkit::OrthogonalPair;
using bellkit::PureState;
using bellkit::SeededRng;
using bellkit::SettingsPair;
using bellkit::Triad;

inline constexpr double kInvSqrt2 = 0.70710678118654752;

inline PureState phi_plus() {
  return PureState({Complex(kInvSqrt2), 0.0, 0.0, Complex(kInvSqrt2)});
}

inline PureState phi_minus() {
  return PureState({Complex(kInvSqrt2), 0.0, 0.0, Complex(-kInvSqrt2)});
}

inline PureState psi_plus() {
  return PureState({0.0, Complex(kInvSqrt2), Complex(kInvSqrt2), 0.0});
}

inline PureState psi_minus() {
  return PureState({0.0, Complex(kInvSqrt2), Complex(-kInvSqrt2), 0.0});
}

inline PureState basis_state(int i) {
  std::array<Complex, 4> a{};
  a[static_cast<std::size_t>(i)] = 1.0;
  return PureState(a);
}

inline DensityMatrix maximally_mixed() {
  return DensityMatrix(0.25 * CMat4::identity());
}

/// p |Phi+><Phi+| + (1-p) I/4.
inline DensityMatrix werner(double p) {
  const CMat4 proj = bellkit::from_pure(phi_plus()).mat();
  return DensityMatrix(p * proj + (0.25 * (1.0 - p)) * CMat4::identity());
}

inline CMat4 random_hermitian(SeededRng& rng, double scale = 1.0) {
  CMat4 g;
  for (auto& z : g.e) z = scale * rng.next_complex_gaussian();
  return 0.5 * (g + bellkit::adjoint(g));
}

inline Direction random_direction(SeededRng& rng) {
  for (;;) {
    const auto [x, y] = rng.next_gaussian_pair();
    const auto [z, unused] = rng.next_gaussian_pair();
    const double n = std::sqrt(x * x + y * y + z * z);
    if (n > 1e-6) return Direction(x / n, y / n, z / n);
  }
}

inline OrthogonalPair random_orthogonal_pair(SeededRng& rng) {
  for (;;) {
    const auto [x1, y1] = rng.next_gaussian_pair();
    const auto [z1, x2] = rng.next_gaussian_pair();
    const auto [y2, z2] = rng.next_gaussian_pair();
    try {
      return bellkit::gram_schmidt_pair({x1, y1, z1}, {x2, y2, z2});
    } catch (const bellkit::NotOrthogonalError&) {
      // Collinear draw; retry.
    }
  }
}

inline SettingsPair random_orthogonal_settings(SeededRng& rng) {
  return SettingsPair{random_orthogonal_pair(rng), random_orthogonal_pair(rng)};
}

inline Triad random_triad(SeededRng& rng) {
  const OrthogonalPair p = random_orthogonal_pair(rng);
  return Triad(p.d1, p.d2, bellkit::cross(p.d1, p.d2));
}

/// Coefficients of det(xI - m) = x^4 + c[3] x^3 + c[2] x^2 + c[1] x + c[0],
/// from power sums via Newton's identities.
inline std::array<Complex, 5> char_poly(const CMat4& m) {
  const CMat4 m2 = m * m;
  const CMat4 m3 = m2 * m;
  const CMat4 m4 = m3 * m;
  const Complex p1 = bellkit::trace(m);
  const Complex p2 = bellkit::trace(m2);
  const Complex p3 = bellkit::trace(m3);
  const Complex p4 = bellkit::trace(m4);
  const Complex e1 = p1;
  const Complex e2 = (e1 * p1 - p2) / 2.0;
  const Complex e3 = (e2 * p1 - e1 * p2 + p3) / 3.0;
  const Complex e4 = (e3 * p1 - e2 * p2 + e1 * p3 - p4) / 4.0;
  return {e4, -e3, e2, -e1, Complex(1.0)};
}

/// Durand-Kerner simultaneous iteration for a monic quartic.
inline std::array<Complex, 4> quartic_roots(const std::array<Complex, 5>& c) {
  const auto eval = [&](Complex x) {
    return (((x + c[3]) * x + c[2]) * x + c[1]) * x + c[0];
  };
  double radius = 1.0;
  for (int i = 0; i < 4; ++i) radius = std::max(radius, std::abs(c[i]));
  std::array<Complex, 4> z;
  const Complex rot(0.4, 0.9);
  z[0] = Complex(radius, 0.0);
  for (int k = 1; k < 4; ++k) z[k] = z[k - 1] * rot;
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) {
      Complex denom(1.0);
      for (int j = 0; j < 4; ++j) {
        if (j != k) denom *= z[k] - z[j];
      }
      const Complex step = eval(z[k]) / denom;
      z[k] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-14 * (1.0 + radius)) break;
  }
  return z;
}

/// Eigenvalue oracle for Hermitian 4x4 input: characteristic-polynomial roots,
/// sorted ascending by real part.
inline std::array<double, 4> eigenvalues_oracle(const CMat4& m) {
  const auto roots = quartic_roots(char_poly(m));
  std::array<double, 4> out;
  for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = roots[i].real();
  std::sort(out.begin(), out.end());
  return out;
}

/// Spin-1/2 rotation Rz(a) Ry(b) Rz(g).
inline CMat2 su2(double a, double b, double g) {
  const Complex ea = std::exp(Complex(0.0, -0.5 * a));
  const Complex eg = std::exp(Complex(0.0, -0.5 * g));
  const double cb = std::cos(0.5 * b);
  const double sb = std::sin(0.5 * b);
  CMat2 u;
  u(0, 0) = ea * cb * eg;
  u(0, 1) = -ea * sb * std::conj(eg);
  u(1, 0) = std::conj(ea) * sb * eg;
  u(1, 1) = std::conj(ea) * cb * std::conj(eg);
  return u;
}

inline double overlap(const CMat4& rho, const std::array<Complex, 4>& psi) {
  Complex v(0.0);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) v += std::conj(psi[i]) * rho(i, j) * psi[j];
  }
  return v.real();
}

/// Direct-maximization oracle for the fully entangled fraction: maximizes
/// <Phi+| (Ua x Ub)^dag rho (Ua x Ub) |Phi+> over the six local rotation
/// angles with multistart coordinate search. A lower bound that converges to
/// the true maximum.
inline double fef_oracle(const DensityMatrix& rho, int restarts = 12,
                         int iterations = 120, std::uint64_t seed = 7) {
  const auto objective = [&](const std::array<double, 6>& ang) {
    const CMat4 u = bellkit::kron(su2(ang[0], ang[1], ang[2]),
                                  su2(ang[3], ang[4], ang[5]));
    const auto& base = phi_plus().amplitudes();
    std::array<Complex, 4> psi{};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) psi[i] += u(i, j) * base[j];
    }
    return overlap(rho.mat(), psi);
  };

  const double golden = 0.6180339887498949;
  double best = 0.0;
  for (int r = 0; r < restarts; ++r) {
    SeededRng rng = SeededRng::split(seed, static_cast<std::uint64_t>(r));
    std::array<double, 6> ang;
    for (double& a : ang) a = 2.0 * std::numbers::pi * rng.next_double();
    double value = objective(ang);
    double window = std::numbers::pi / 2.0;
    for (int it = 0; it < iterations; ++it) {
      const int ci = it % 6;
      double lo = ang[ci] - window;
      double hi = ang[ci] + window;
      double c = hi - golden * (hi - lo);
      double d = lo + golden * (hi - lo);
      auto probe = [&](double x) {
        std::array<double, 6> t = ang;
        t[static_cast<std::size_t>(ci)] = x;
        return objective(t);
      };
      double fc = probe(c);
      double fd = probe(d);
      for (int step = 0; step < 12; ++step) {
        if (fc >= fd) {
          hi = d;
          d = c;
          fd = fc;
          c = hi - golden * (hi - lo);
          fc = probe(c);
        } else {
          lo = c;
          c = d;
          fc = fd;
          d = lo + golden * (hi - lo);
          fd = probe(d);
        }
      }
      const double x = fc >= fd ? c : d;
      const double fx = std::max(fc, fd);
      if (fx > value) {
        value = fx;
        ang[static_cast<std::size_t>(ci)] = x;
      }
      if (ci == 5) window *= 0.7;
    }
    best = std::max(best, value);
  }
  return best;
}

/// Bell expectation reconstructed from two-point spin correlations, entirely
/// through the public expectation() on elementary spin products.
inline double correlation_oracle(const DensityMatrix& rho,
                                 const SettingsPair& s) {
  const auto corr = [&](const Direction& a, const Direction& b) {
    return bellkit::expectation(
        bellkit::kron(bellkit::spin_op(a), bellkit::spin_op(b)), rho);
  };
  return corr(s.a.d1, s.b.d1) + corr(s.a.d1, s.b.d2) + corr(s.a.d2, s.b.d1) -
         corr(s.a.d2, s.b.d2);
}

}  // namespace testkit
