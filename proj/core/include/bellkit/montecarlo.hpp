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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bellkit/bell.hpp"
#include "bellkit/qstate.hpp"

namespace bellkit {

struct ConfigInvalidError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LabelMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class EnsembleKind {
  kMixed,      // Haar unitary conjugating a uniform-simplex spectrum
  kPureHaar,   // Haar-random pure state, promoted to its projector
  kSeparable,  // convex mixture of random product pure states
};

struct Ensemble {
  EnsembleKind kind = EnsembleKind::kMixed;
  int separable_terms = 8;  // mixture terms; read only by kSeparable
};

/// The tallied per-state predicates. The family statistics test strict
/// exceedance of 2 (chsh) or sqrt2 (rus) by |<B>| for any member of the
/// 4-operator family at the fixed pair settings, or of the 36-operator
/// family at the fixed triads. kBound13SlackMin counts states for which
/// some evaluated operator exceeds the strengthened separability threshold
/// sqrt2 * (1 + N) by more than 1e-9; its expected fraction is zero.
enum class Statistic {
  kEntangled,
  kChshAnyOf4,
  kRusAnyOf4,
  kChshAnyOf36,
  kRusAnyOf36,
  kBound13SlackMin,
};

std::string statistic_label(Statistic s);
std::optional<Statistic> parse_statistic(std::string_view label);

std::string ensemble_label(EnsembleKind kind);
std::optional<EnsembleKind> parse_ensemble(std::string_view label);

/// One experiment: draw `samples` states from `ensemble` and tally the
/// requested statistics. Sample i derives its own generator from
/// SeededRng::split(seed, i), so tallies depend only on (ensemble, samples,
/// seed, settings) and never on the shard count; shards partition the index
/// range into contiguous blocks (sizes differing by at most 1) that may be
/// processed concurrently.
struct ExperimentConfig {
  Ensemble ensemble;
  std::vector<Statistic> statistics;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  std::uint32_t shards = 1;
  SettingsPair settings = canonical_settings();
  std::pair<Triad, Triad> triads = canonical_triads();
};

/// One tallied statistic. `standard_error` is the binomial standard error
/// sqrt(p(1-p)/n); it is serialized under the key "stderr".
struct TallyResult {
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  double fraction = 0.0;
  double standard_error = 0.0;
  std::pair<double, double> ci95{0.0, 1.0};
  std::string statistic;
  std::uint64_t seed = 0;
};

/// Runs the experiment and returns one TallyResult per requested statistic,
/// in request order. All per-state predicates are evaluated in a single pass;
/// the statistics list only selects which tallies are emitted.
std::vector<TallyResult> run(const ExperimentConfig& config);

/// Wilson score interval at confidence multiplier z, clamped to [0, 1].
std::pair<double, double> wilson_ci(std::uint64_t hits, std::uint64_t trials,
                                    double z);

/// Sums hits and trials of two tallies of the same statistic and recomputes
/// the derived fields; associative and commutative in the counts. Operands
/// normally share a base seed; the result carries the seed of `a` unless `a`
/// is empty (zero trials).
TallyResult merge(const TallyResult& a, const TallyResult& b);

}  // namespace bellkit
