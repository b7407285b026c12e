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

#include <cmath>
#include <numbers>
#include <vector>

#include "bellkit/sampling.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bellkit;

namespace {

const double kTwoSqrt2 = 2.0 * std::numbers::sqrt2;

void check_spectrum(const CMat4& op) {
  const EigenResult4 r = hermitian_eigen(op);
  CHECK(std::abs(r.values[0] + kTwoSqrt2) <= 1e-9);
  CHECK(std::abs(r.values[1]) <= 1e-9);
  CHECK(std::abs(r.values[2]) <= 1e-9);
  CHECK(std::abs(r.values[3] - kTwoSqrt2) <= 1e-9);
}

}  // namespace

TEST_CASE("Direction enforces unit norm and normalized() repairs scale") {
  CHECK_NOTHROW(Direction(0, 0, 1));
  CHECK_THROWS_AS(Direction(0, 0, 1.001), NotUnitError);
  CHECK_THROWS_AS(Direction(0, 0, 0), NotUnitError);
  const Direction d = Direction::normalized(3, 4, 0);
  CHECK(d.x == doctest::Approx(0.6));
  CHECK(d.y == doctest::Approx(0.8));
  CHECK_THROWS_AS(Direction::normalized(0, 0, 0), NotUnitError);
}

TEST_CASE("OrthogonalPair and Triad reject non-orthogonal directions") {
  CHECK_NOTHROW(OrthogonalPair(Direction(0, 0, 1), Direction(1, 0, 0)));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK_THROWS_AS(OrthogonalPair(Direction(0, 0, 1), Direction(s, 0, s)),
                  NotOrthogonalError);
  CHECK_NOTHROW(
      Triad(Direction(1, 0, 0), Direction(0, 1, 0), Direction(0, 0, 1)));
  CHECK_THROWS_AS(
      Triad(Direction(1, 0, 0), Direction(0, 1, 0), Direction(0, s, s)),
      NotOrthogonalError);
}

TEST_CASE("gram_schmidt_pair orthonormalizes approximate input") {
  const OrthogonalPair p = gram_schmidt_pair({2, 0, 0}, {1, 1, 0});
  CHECK(p.d1.x == doctest::Approx(1.0));
  CHECK(std::abs(dot(p.d1, p.d2)) <= 1e-12);
  CHECK(p.d2.y == doctest::Approx(1.0));
  CHECK_THROWS_AS(gram_schmidt_pair({1, 0, 0}, {2, 0, 0}), NotOrthogonalError);
}

TEST_CASE("spin_op realizes the Pauli convention") {
  const CMat2 z = spin_op(Direction(0, 0, 1));
  CHECK(z(0, 0) == Complex(1.0));
  CHECK(z(1, 1) == Complex(-1.0));
  CHECK(z(0, 1) == Complex(0.0));

  const CMat2 x = spin_op(Direction(1, 0, 0));
  CHECK(x(0, 1) == Complex(1.0));
  CHECK(x(1, 0) == Complex(1.0));

  const CMat2 y = spin_op(Direction(0, 1, 0));
  CHECK(y(0, 1) == Complex(0.0, -1.0));
  CHECK(y(1, 0) == Complex(0.0, 1.0));

  // Tilted direction: Hermitian, traceless, squares to identity.
  const double s = 1.0 / std::sqrt(2.0);
  const CMat2 t = spin_op(Direction(s, 0, s));
  CHECK(std::abs(trace(t)) <= 1e-15);
  const CMat2 t2 = t * t;
  CHECK(std::abs(t2(0, 0) - Complex(1.0)) <= 1e-15);
  CHECK(std::abs(t2(0, 1)) <= 1e-15);
}

TEST_CASE("bell_operator saturates the quantum bound on |Phi+>") {
  const BellOperator b = bell_operator(cirelson_settings());
  const DensityMatrix rho = from_pure(testkit::phi_plus());
  CHECK(expectation(b, rho) == doctest::Approx(kTwoSqrt2).epsilon(1e-12));
  CHECK(b.variant == 1);
  check_spectrum(b.mat);
}

TEST_CASE("bell_operator on the maximally mixed state vanishes") {
  const BellOperator b = bell_operator(canonical_settings());
  CHECK(std::abs(expectation(b, testkit::maximally_mixed())) <= 1e-12);
}

TEST_CASE("expectation matches termwise correlation arithmetic on |00>") {
  const DensityMatrix rho = from_pure(testkit::basis_state(0));
  const SettingsPair s = canonical_settings();
  CHECK(expectation(bell_operator(s), rho) == doctest::Approx(1.0));
  CHECK(testkit::correlation_oracle(rho, s) == doctest::Approx(1.0));
}

TEST_CASE("expectation agrees with the spin-correlation oracle") {
  SeededRng rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho = random_mixed(rng);
    const SettingsPair s = testkit::random_orthogonal_settings(rng);
    CHECK(std::abs(expectation(bell_operator(s), rho) -
                   testkit::correlation_oracle(rho, s)) <= 1e-12);
  }
}

TEST_CASE("operators are Hermitian and carry the sqrt-8 spectrum") {
  SeededRng rng(61);
  for (int trial = 0; trial < 1000; ++trial) {
    const SettingsPair s = testkit::random_orthogonal_settings(rng);
    const BellOperator b = bell_operator(s);
    CHECK(frobenius_norm(b.mat - adjoint(b.mat)) <= 1e-12);
    check_spectrum(b.mat);
  }
}

TEST_CASE("bell_family4 realizes the four sign variants") {
  SeededRng rng(67);
  const SettingsPair s = testkit::random_orthogonal_settings(rng);
  const auto family = bell_family4(s);

  const CMat2 a1 = spin_op(s.a.d1);
  const CMat4 sum = family[0].mat + family[1].mat;
  const CMat4 want = 2.0 * kron(a1, spin_op(s.b.d1) + spin_op(s.b.d2));
  CHECK(frobenius_norm(sum - want) <= 1e-12);

  for (int i = 0; i < 4; ++i) {
    CHECK(family[static_cast<std::size_t>(i)].variant == i + 1);
    check_spectrum(family[static_cast<std::size_t>(i)].mat);
  }
}

TEST_CASE("exactly one family member saturates on |Phi+>") {
  const auto family = bell_family4(cirelson_settings());
  const DensityMatrix rho = from_pure(testkit::phi_plus());
  int saturating = 0;
  for (const BellOperator& op : family) {
    if (std::abs(std::abs(expectation(op, rho)) - kTwoSqrt2) <= 1e-9) {
      ++saturating;
    }
  }
  CHECK(saturating == 1);
}

TEST_CASE("bell_family36 enumerates 9 setting combinations times 4 variants") {
  const auto [ta, tb] = canonical_triads();
  const auto family = bell_family36(ta, tb);
  REQUIRE(family.size() == 36);

  for (const BellOperator& op : family) check_spectrum(op.mat);

  // Ordering: a-pair major, b-pair middle, variant minor.
  for (int i = 0; i < 36; ++i) {
    CHECK(family[static_cast<std::size_t>(i)].variant == i % 4 + 1);
  }

  // With coordinate triads the (z,x | z,x) four-operator family appears as a
  // sub-list: triad pair index 2 is (y, z)... pair (d1,d3) = (x, z) at block
  // index 1 of each party, whose variants span the same operator set.
  const auto base = bell_family4(canonical_settings());
  int contained = 0;
  for (const BellOperator& want : base) {
    for (const BellOperator& got : family) {
      if (frobenius_norm(want.mat - got.mat) <= 1e-12) {
        ++contained;
        break;
      }
    }
  }
  CHECK(contained == 4);
}

TEST_CASE("bell_family36 is duplicate-free for generic triads") {
  SeededRng rng(71);
  const auto family = bell_family36(testkit::random_triad(rng),
                                    testkit::random_triad(rng));
  REQUIRE(family.size() == 36);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      CHECK(frobenius_norm(family[i].mat - family[j].mat) > 1e-12);
    }
  }
}

TEST_CASE("classify applies strict thresholds and the negativity bound") {
  const Verdict at_chsh = classify(2.0);
  CHECK_FALSE(at_chsh.violates_chsh);  // strict inequality
  CHECK(at_chsh.violates_rus);
  CHECK(at_chsh.within_cirelson);
  CHECK(at_chsh.negativity_lower_bound ==
        doctest::Approx(std::numbers::sqrt2 - 1.0).epsilon(1e-12));
  CHECK_FALSE(at_chsh.within_bound13.has_value());

  const Verdict max = classify(kTwoSqrt2, 1.0);
  CHECK(max.violates_chsh);
  CHECK(max.violates_rus);
  CHECK(max.within_cirelson);
  CHECK(max.negativity_lower_bound == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max.within_bound13.value());

  const Verdict at_rus = classify(-std::numbers::sqrt2);
  CHECK_FALSE(at_rus.violates_rus);
  CHECK(at_rus.negativity_lower_bound == doctest::Approx(0.0));

  const Verdict beyond = classify(2.5, 0.0);
  CHECK(beyond.within_cirelson);
  CHECK_FALSE(beyond.within_bound13.value());

  const Verdict impossible = classify(2.9);
  CHECK_FALSE(impossible.within_cirelson);
}

TEST_CASE("classify is monotone: a CHSH violation is a RUS violation") {
  SeededRng rng(73);
  for (int trial = 0; trial < 1000; ++trial) {
    const double value = 6.0 * (rng.next_double() - 0.5);
    const Verdict v = classify(value);
    if (v.violates_chsh) CHECK(v.violates_rus);
    CHECK(v.negativity_lower_bound ==
          doctest::Approx(std::max(0.0, std::abs(value) / std::numbers::sqrt2 -
                                            1.0)));
  }
}

TEST_CASE("Cirel'son bound holds for random states and settings") {
  SeededRng rng(79);
  for (int trial = 0; trial < 10000; ++trial) {
    const DensityMatrix rho = random_mixed(rng);
    const SettingsPair s = testkit::random_orthogonal_settings(rng);
    CHECK(std::abs(expectation(bell_operator(s), rho)) <= kTwoSqrt2 + 1e-9);
  }
}

TEST_CASE("strengthened bound holds for random states and settings") {
  SeededRng rng(83);
  for (int trial = 0; trial < 10000; ++trial) {
    const DensityMatrix rho = random_mixed(rng);
    const SettingsPair s = testkit::random_orthogonal_settings(rng);
    const double n = negativity(rho).value;
    CHECK(std::abs(expectation(bell_operator(s), rho)) <=
          std::numbers::sqrt2 * (1.0 + n) + 1e-9);
  }
}

TEST_CASE("RUS bound holds on sampled separable states") {
  SeededRng rng(89);
  const auto family = bell_family4(canonical_settings());
  for (int trial = 0; trial < 10000; ++trial) {
    const DensityMatrix rho = random_separable(rng, 8);
    for (const BellOperator& op : family) {
      CHECK(std::abs(expectation(op, rho)) <= std::numbers::sqrt2 + 1e-9);
    }
  }
}

TEST_CASE("optimizer reaches the Cirel'son value on |Phi+>") {
  const DensityMatrix rho = from_pure(testkit::phi_plus());
  const MaxExpectation m = max_over_orthogonal_settings(rho);
  CHECK(m.value == doctest::Approx(kTwoSqrt2).epsilon(1e-6));
  // The reported value is achieved at the reported settings.
  CHECK(expectation(bell_operator(m.settings), rho) ==
        doctest::Approx(m.value).epsilon(1e-12));
}

TEST_CASE("optimizer vanishes on the maximally mixed state") {
  const MaxExpectation m =
      max_over_orthogonal_settings(testkit::maximally_mixed());
  CHECK(std::abs(m.value) <= 1e-9);
}

TEST_CASE("optimizer matches the Werner closed form") {
  // T = p diag(1,-1,1), so the unconstrained maximum 2 sqrt(2) p is attained
  // with orthogonal settings and the optimizer must reach it.
  for (double p : {0.5, 0.9, 1.0}) {
    const DensityMatrix rho = testkit::werner(p);
    const double value = max_over_orthogonal_settings(rho).value;
    CHECK(value == doctest::Approx(kTwoSqrt2 * p).epsilon(1e-6));
    CHECK(value <= horodecki_max(rho) + 1e-9);
    CHECK(value <=
          kTwoSqrt2 * fully_entangled_fraction(rho).value + 1e-6);
    CHECK(value <=
          std::numbers::sqrt2 * (1.0 + negativity(rho).value) + 1e-6);
  }
}

TEST_CASE("optimizer is deterministic and monotone in restarts") {
  SeededRng rng(97);
  const DensityMatrix rho = random_mixed(rng);
  const MaxExpectation a =
      max_over_orthogonal_settings(rho, OptimizerBudget{4, 80}, 5);
  const MaxExpectation b =
      max_over_orthogonal_settings(rho, OptimizerBudget{4, 80}, 5);
  CHECK(a.value == b.value);
  const MaxExpectation more =
      max_over_orthogonal_settings(rho, OptimizerBudget{8, 80}, 5);
  CHECK(more.value >= a.value);
}

TEST_CASE("optimizer dominates fixed settings and a coarse grid") {
  SeededRng rng(101);
  const DensityMatrix rho = random_mixed(rng);
  const MaxExpectation m = max_over_orthogonal_settings(rho);

  for (int trial = 0; trial < 20; ++trial) {
    const SettingsPair s = testkit::random_orthogonal_settings(rng);
    CHECK(m.value >= std::abs(expectation(bell_operator(s), rho)) - 1e-9);
  }

  // Coarse 6-angle grid through the same Euler-pair construction used by a
  // caller: 6^6 evaluations via the correlation oracle.
  double grid_best = 0.0;
  const int kSteps = 6;
  std::vector<double> angles(kSteps);
  for (int i = 0; i < kSteps; ++i) {
    angles[static_cast<std::size_t>(i)] =
        2.0 * std::numbers::pi * i / kSteps;
  }
  const auto pair_at = [](double alpha, double beta, double gamma) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double cb = std::cos(beta), sb = std::sin(beta);
    const double cg = std::cos(gamma), sg = std::sin(gamma);
    return OrthogonalPair(
        Direction(ca * cb * cg - sa * sg, sa * cb * cg + ca * sg, -sb * cg),
        Direction(-ca * cb * sg - sa * cg, -sa * cb * sg + ca * cg, sb * sg));
  };
  for (double a0 : angles)
    for (double a1 : angles)
      for (double a2 : angles)
        for (double b0 : angles)
          for (double b1 : angles)
            for (double b2 : angles) {
              const SettingsPair s{pair_at(a0, a1, a2), pair_at(b0, b1, b2)};
              grid_best = std::max(
                  grid_best, std::abs(testkit::correlation_oracle(rho, s)));
            }
  CHECK(m.value >= grid_best - 1e-9);
}

TEST_CASE("horodecki closed form on reference states") {
  CHECK(horodecki_max(from_pure(testkit::phi_plus())) ==
        doctest::Approx(kTwoSqrt2).epsilon(1e-12));
  CHECK(horodecki_max(testkit::maximally_mixed()) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(horodecki_max(from_pure(testkit::basis_state(0))) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("horodecki upper-bounds the constrained optimizer") {
  SeededRng rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = random_mixed(rng);
    const double opt =
        max_over_orthogonal_settings(rho, OptimizerBudget{2, 60}).value;
    CHECK(opt <= horodecki_max(rho) + 1e-6);
  }
}

TEST_CASE("canonical settings use the documented coordinate axes") {
  const SettingsPair s = canonical_settings();
  CHECK(s.a.d1.z == 1.0);
  CHECK(s.a.d2.x == 1.0);
  CHECK(s.b.d1.z == 1.0);
  CHECK(s.b.d2.x == 1.0);
  const auto [ta, tb] = canonical_triads();
  CHECK(ta.d1.x == 1.0);
  CHECK(ta.d2.y == 1.0);
  CHECK(ta.d3.z == 1.0);
  CHECK(tb.d3.z == 1.0);
}
