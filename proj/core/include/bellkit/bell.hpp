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
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bellkit/qstate.hpp"

namespace bellkit {

struct NotUnitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotOrthogonalError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Local hidden variable bound |<B>| <= 2.
inline constexpr double kChshBound = 2.0;
/// Quantum-mechanical maximum |<B>| <= 2*sqrt(2).
inline constexpr double kCirelsonBound = 2.0 * std::numbers::sqrt2;
/// Separable-state bound under orthogonal settings, |<B>| <= sqrt(2).
inline constexpr double kRusBound = std::numbers::sqrt2;

/// Unit vector in R^3; the spatial direction of a spin measurement.
/// The constructor rejects vectors whose squared norm deviates from 1 by
/// more than 1e-12.
struct Direction {
  double x, y, z;

  Direction(double x_, double y_, double z_);

  /// Scales an arbitrary nonzero vector to unit length.
  static Direction normalized(double x_, double y_, double z_);
};

double dot(const Direction& a, const Direction& b);
Direction cross(const Direction& a, const Direction& b);

/// Two orthogonal measurement directions for one party (|d1.d2| <= 1e-10,
/// enforced at construction; approximate inputs go through
/// gram_schmidt_pair instead).
struct OrthogonalPair {
  Direction d1, d2;

  OrthogonalPair(Direction first, Direction second);
};

/// Orthonormalizes two raw vectors (normalize the first, project it out of
/// the second) for callers whose inputs are only approximately orthogonal.
OrthogonalPair gram_schmidt_pair(const std::array<double, 3>& d1_raw,
                                 const std::array<double, 3>& d2_raw);

/// Three pairwise-orthogonal directions; a tomographically complete set of
/// spin measurements for one party.
struct Triad {
  Direction d1, d2, d3;

  Triad(Direction first, Direction second, Direction third);
};

/// The full argument list of a Bell-CHSH operator: an orthogonal pair per
/// party. No relation between the two parties' directions is required.
struct SettingsPair {
  OrthogonalPair a, b;
};

/// A Bell-CHSH observable together with the settings that produced it.
/// For orthogonal settings its spectrum is {-2*sqrt2, 0, 0, 2*sqrt2}.
struct BellOperator {
  CMat4 mat;
  SettingsPair settings;
  int variant = 1;  // 1..4, the sign variant within the family
};

/// Threshold classification of one Bell expectation value.
struct Verdict {
  double value = 0.0;
  bool violates_chsh = false;    // |value| > 2, strict
  bool violates_rus = false;     // |value| > sqrt2, strict
  bool within_cirelson = true;   // |value| <= 2*sqrt2 + 1e-9
  double negativity_lower_bound = 0.0;  // max(0, |value|/sqrt2 - 1)
  std::optional<bool> within_bound13;   // |value| <= sqrt2*(1+N) + 1e-9
};

/// Spin observable d.sigma: Hermitian, traceless, eigenvalues +/-1.
CMat2 spin_op(const Direction& d);

/// A1 (x) (B1 + B2) + A2 (x) (B1 - B2).
BellOperator bell_operator(const SettingsPair& s);

/// The four sign variants that the four measured correlations support, in
/// the fixed order
///   B1 = A1(B1+B2) + A2(B1-B2),  B2 = A1(B1+B2) - A2(B1-B2),
///   B3 = A1(B1-B2) + A2(B1+B2),  B4 = A1(-B1+B2) + A2(B1+B2).
std::array<BellOperator, 4> bell_family4(const SettingsPair& s);

/// The 36 operators a pair of measurement triads supports: for each of the
/// 3 unordered direction pairs of `ta` (in index order (1,2), (1,3), (2,3))
/// and each of the 3 of `tb`, the 4 variants of bell_family4. Ordering is
/// a-pair major, b-pair middle, variant minor.
std::vector<BellOperator> bell_family36(const Triad& ta, const Triad& tb);

/// <B> = Re Tr(B rho); throws if the imaginary part exceeds 1e-10.
double expectation(const BellOperator& b, const DensityMatrix& rho);
double expectation(const CMat4& op, const DensityMatrix& rho);

/// Classifies a Bell expectation against the CHSH, RUS and Cirel'son
/// thresholds. When the state's negativity is supplied, also checks the
/// strengthened bound |value| <= sqrt2 * (1 + N).
Verdict classify(double value, std::optional<double> negativity = std::nullopt);

/// Search budget for max_over_orthogonal_settings: `restarts` independent
/// starting points, each refined by `iterations` coordinate line searches.
struct OptimizerBudget {
  int restarts = 8;
  int iterations = 200;
};

struct MaxExpectation {
  double value = 0.0;
  SettingsPair settings;
};

/// Maximizes <B> over all pairs of orthogonal settings. Each party's pair is
/// parameterized as the first two columns of a z-y-z Euler rotation (six
/// angles total), refined coordinate-wise by golden-section line searches
/// from `budget.restarts` seeded starting points. The returned value is the
/// expectation achieved at the returned settings, so it is always a valid
/// lower bound on the true maximum; it is deterministic in (rho, budget,
/// seed) and never decreases when restarts are added.
MaxExpectation max_over_orthogonal_settings(const DensityMatrix& rho,
                                            const OptimizerBudget& budget = {},
                                            std::uint64_t seed = 0);

/// Closed-form CHSH maximum over unconstrained settings: 2*sqrt(m1+m2) with
/// m1, m2 the two largest eigenvalues of T^T T, T_ij = Tr(rho sigma_i x
/// sigma_j). Upper-bounds max_over_orthogonal_settings.
double horodecki_max(const DensityMatrix& rho);

/// Coordinate-axis settings (z, x) for both parties; the fixed default for
/// the four-operator statistics.
SettingsPair canonical_settings();

/// Coordinate-axis triads (x, y, z) for both parties.
std::pair<Triad, Triad> canonical_triads();

/// Settings for which |Phi+> saturates the Cirel'son bound:
/// A = (z, x), B = ((z+x)/sqrt2, (z-x)/sqrt2).
SettingsPair cirelson_settings();

}  // namespace bellkit
