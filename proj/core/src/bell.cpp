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

#include "bellkit/bell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "bellkit/linalg.hpp"
#include "bellkit/rng.hpp"

namespace bellkit {
namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double x, double y, double z) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
    throw NotUnitError("direction components must be finite");
  }
}

void require_settings(const SettingsPair& s) {
  if (std::abs(dot(s.a.d1, s.a.d2)) > 1e-10 ||
      std::abs(dot(s.b.d1, s.b.d2)) > 1e-10) {
    throw NotOrthogonalError("measurement pair is not orthogonal");
  }
}

using Vec3 = std::array<double, 3>;

Vec3 components(const Direction& d) { return {d.x, d.y, d.z}; }

// Correlation matrix T_ij = Tr(rho sigma_i x sigma_j), i, j in (x, y, z).
// A spin correlation then contracts to <a.sigma x b.sigma> = a^T T b.
using Corr = std::array<Vec3, 3>;

Corr correlation_matrix(const DensityMatrix& rho) {
  const CMat2 sig[3] = {spin_op(Direction(1, 0, 0)), spin_op(Direction(0, 1, 0)),
                        spin_op(Direction(0, 0, 1))};
  Corr t{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      t[i][j] = trace(kron(sig[i], sig[j]) * rho.mat()).real();
    }
  }
  return t;
}

double contract(const Corr& t, const Vec3& a, const Vec3& b) {
  double v = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) v += a[i] * t[i][j] * b[j];
  }
  return v;
}

// First two columns of Rz(alpha) Ry(beta) Rz(gamma): an orthonormal pair
// sweeping every orthonormal pair in R^3 as the angles vary.
std::pair<Vec3, Vec3> euler_columns(double alpha, double beta, double gamma) {
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double cg = std::cos(gamma), sg = std::sin(gamma);
  Vec3 c1 = {ca * cb * cg - sa * sg, sa * cb * cg + ca * sg, -sb * cg};
  Vec3 c2 = {-ca * cb * sg - sa * cg, -sa * cb * sg + ca * cg, sb * sg};
  return {c1, c2};
}

using Angles = std::array<double, 6>;

double bell_value(const Corr& t, const Angles& ang) {
  auto [a1, a2] = euler_columns(ang[0], ang[1], ang[2]);
  auto [b1, b2] = euler_columns(ang[3], ang[4], ang[5]);
  Vec3 bp, bm;
  for (int j = 0; j < 3; ++j) {
    bp[j] = b1[j] + b2[j];
    bm[j] = b1[j] - b2[j];
  }
  return contract(t, a1, bp) + contract(t, a2, bm);
}

SettingsPair settings_from_angles(const Angles& ang) {
  auto [a1, a2] = euler_columns(ang[0], ang[1], ang[2]);
  auto [b1, b2] = euler_columns(ang[3], ang[4], ang[5]);
  return SettingsPair{
      OrthogonalPair(Direction(a1[0], a1[1], a1[2]), Direction(a2[0], a2[1], a2[2])),
      OrthogonalPair(Direction(b1[0], b1[1], b1[2]), Direction(b2[0], b2[1], b2[2]))};
}

constexpr double kInvPhi = 0.6180339887498949;

// Golden-section maximization over [lo, hi]; returns the better probe.
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, int steps) {
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < steps; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? std::pair<double, double>{c, fc}
                  : std::pair<double, double>{d, fd};
}

}  // namespace

Direction::Direction(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
  require_finite(x, y, z);
  if (std::abs(x * x + y * y + z * z - 1.0) > 1e-12) {
    throw NotUnitError("direction must be a unit vector");
  }
}

Direction Direction::normalized(double x_, double y_, double z_) {
  require_finite(x_, y_, z_);
  const double n = std::sqrt(x_ * x_ + y_ * y_ + z_ * z_);
  if (n < 1e-150) throw NotUnitError("cannot normalize a zero vector");
  return Direction(x_ / n, y_ / n, z_ / n);
}

double dot(const Direction& a, const Direction& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

Direction cross(const Direction& a, const Direction& b) {
  return Direction::normalized(a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
                               a.x * b.y - a.y * b.x);
}

OrthogonalPair::OrthogonalPair(Direction first, Direction second)
    : d1(first), d2(second) {
  if (std::abs(dot(d1, d2)) > 1e-10) {
    throw NotOrthogonalError("pair directions must be orthogonal");
  }
}

OrthogonalPair gram_schmidt_pair(const std::array<double, 3>& d1_raw,
                                 const std::array<double, 3>& d2_raw) {
  Direction d1 = Direction::normalized(d1_raw[0], d1_raw[1], d1_raw[2]);
  const double p = d1.x * d2_raw[0] + d1.y * d2_raw[1] + d1.z * d2_raw[2];
  const double vx = d2_raw[0] - p * d1.x;
  const double vy = d2_raw[1] - p * d1.y;
  const double vz = d2_raw[2] - p * d1.z;
  if (std::sqrt(vx * vx + vy * vy + vz * vz) < 1e-12) {
    throw NotOrthogonalError("directions are collinear");
  }
  return OrthogonalPair(d1, Direction::normalized(vx, vy, vz));
}

Triad::Triad(Direction first, Direction second, Direction third)
    : d1(first), d2(second), d3(third) {
  if (std::abs(dot(d1, d2)) > 1e-10 || std::abs(dot(d1, d3)) > 1e-10 ||
      std::abs(dot(d2, d3)) > 1e-10) {
    throw NotOrthogonalError("triad directions must be pairwise orthogonal");
  }
}

CMat2 spin_op(const Direction& d) {
  if (std::abs(d.x * d.x + d.y * d.y + d.z * d.z - 1.0) > 1e-10) {
    throw NotUnitError("spin direction must be a unit vector");
  }
  CMat2 m;
  m(0, 0) = Complex(d.z, 0.0);
  m(0, 1) = Complex(d.x, -d.y);
  m(1, 0) = Complex(d.x, d.y);
  m(1, 1) = Complex(-d.z, 0.0);
  return m;
}

BellOperator bell_operator(const SettingsPair& s) {
  require_settings(s);
  const CMat2 a1 = spin_op(s.a.d1);
  const CMat2 a2 = spin_op(s.a.d2);
  const CMat2 bp = spin_op(s.b.d1) + spin_op(s.b.d2);
  const CMat2 bm = spin_op(s.b.d1) - spin_op(s.b.d2);
  return BellOperator{kron(a1, bp) + kron(a2, bm), s, 1};
}

std::array<BellOperator, 4> bell_family4(const SettingsPair& s) {
  require_settings(s);
  const CMat2 a1 = spin_op(s.a.d1);
  const CMat2 a2 = spin_op(s.a.d2);
  const CMat2 bp = spin_op(s.b.d1) + spin_op(s.b.d2);
  const CMat2 bm = spin_op(s.b.d1) - spin_op(s.b.d2);
  const CMat4 k1p = kron(a1, bp);
  const CMat4 k1m = kron(a1, bm);
  const CMat4 k2p = kron(a2, bp);
  const CMat4 k2m = kron(a2, bm);
  return {BellOperator{k1p + k2m, s, 1}, BellOperator{k1p - k2m, s, 2},
          BellOperator{k1m + k2p, s, 3}, BellOperator{-1.0 * k1m + k2p, s, 4}};
}

std::vector<BellOperator> bell_family36(const Triad& ta, const Triad& tb) {
  const std::array<std::pair<Direction, Direction>, 3> pa = {
      std::pair{ta.d1, ta.d2}, std::pair{ta.d1, ta.d3}, std::pair{ta.d2, ta.d3}};
  const std::array<std::pair<Direction, Direction>, 3> pb = {
      std::pair{tb.d1, tb.d2}, std::pair{tb.d1, tb.d3}, std::pair{tb.d2, tb.d3}};
  std::vector<BellOperator> out;
  out.reserve(36);
  for (const auto& a : pa) {
    for (const auto& b : pb) {
      const SettingsPair s{OrthogonalPair(a.first, a.second),
                           OrthogonalPair(b.first, b.second)};
      for (auto& op : bell_family4(s)) out.push_back(std::move(op));
    }
  }
  return out;
}

double expectation(const CMat4& op, const DensityMatrix& rho) {
  const Complex t = trace(op * rho.mat());
  if (std::abs(t.imag()) > 1e-10) {
    throw std::runtime_error("Bell expectation has a non-negligible imaginary part");
  }
  return t.real();
}

double expectation(const BellOperator& b, const DensityMatrix& rho) {
  return expectation(b.mat, rho);
}

Verdict classify(double value, std::optional<double> negativity) {
  Verdict v;
  v.value = value;
  const double a = std::abs(value);
  v.violates_chsh = a > kChshBound;
  v.violates_rus = a > kRusBound;
  v.within_cirelson = a <= kCirelsonBound + 1e-9;
  v.negativity_lower_bound = std::max(0.0, a / std::numbers::sqrt2 - 1.0);
  if (negativity.has_value()) {
    v.within_bound13 = a <= std::numbers::sqrt2 * (1.0 + *negativity) + 1e-9;
  }
  return v;
}

MaxExpectation max_over_orthogonal_settings(const DensityMatrix& rho,
                                            const OptimizerBudget& budget,
                                            std::uint64_t seed) {
  const Corr t = correlation_matrix(rho);
  const int restarts = std::max(1, budget.restarts);
  const int iterations = std::max(0, budget.iterations);

  MaxExpectation best{-std::numeric_limits<double>::infinity(),
                      canonical_settings()};
  for (int r = 0; r < restarts; ++r) {
    SeededRng rng(SeededRng::split(seed, static_cast<std::uint64_t>(r)));
    Angles ang;
    for (double& a : ang) a = 2.0 * kPi * rng.next_double();

    double value = bell_value(t, ang);
    double window = kPi / 2.0;
    for (int it = 0; it < iterations; ++it) {
      const int ci = it % 6;
      auto line = [&](double x) {
        Angles probe = ang;
        probe[ci] = x;
        return bell_value(t, probe);
      };
      auto [x, fx] = golden_max(line, ang[ci] - window, ang[ci] + window, 12);
      if (fx > value) {
        value = fx;
        ang[ci] = x;
      }
      if (ci == 5) window *= 0.7;
    }

    // Re-evaluate through the operator path so the reported value is exactly
    // the expectation achieved at the reported settings.
    const SettingsPair s = settings_from_angles(ang);
    const double exact = expectation(bell_operator(s), rho);
    if (exact > best.value) best = MaxExpectation{exact, s};
  }
  return best;
}

double horodecki_max(const DensityMatrix& rho) {
  const Corr t = correlation_matrix(rho);
  CMat4 m = CMat4::zero();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double v = 0.0;
      for (int k = 0; k < 3; ++k) v += t[k][i] * t[k][j];
      m(i, j) = Complex(v, 0.0);
    }
  }
  // T^T T is positive semidefinite, so zero-padding to 4x4 leaves the two
  // largest eigenvalues in the top two slots.
  const EigenResult4 eig = hermitian_eigen(m);
  return 2.0 * std::sqrt(std::max(0.0, eig.values[3] + eig.values[2]));
}

SettingsPair canonical_settings() {
  return SettingsPair{OrthogonalPair(Direction(0, 0, 1), Direction(1, 0, 0)),
                      OrthogonalPair(Direction(0, 0, 1), Direction(1, 0, 0))};
}

std::pair<Triad, Triad> canonical_triads() {
  const Triad t(Direction(1, 0, 0), Direction(0, 1, 0), Direction(0, 0, 1));
  return {t, t};
}

SettingsPair cirelson_settings() {
  const double r = 1.0 / std::numbers::sqrt2;
  return SettingsPair{OrthogonalPair(Direction(0, 0, 1), Direction(1, 0, 0)),
                      OrthogonalPair(Direction(r, 0, r), Direction(-r, 0, r))};
}

}  // namespace bellkit
