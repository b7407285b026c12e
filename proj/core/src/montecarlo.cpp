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

#include "bellkit/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

#include "bellkit/sampling.hpp"

namespace bellkit {
namespace {

struct Counts {
  std::uint64_t entangled = 0;
  std::uint64_t chsh4 = 0;
  std::uint64_t rus4 = 0;
  std::uint64_t chsh36 = 0;
  std::uint64_t rus36 = 0;
  std::uint64_t bound13 = 0;

  Counts& operator+=(const Counts& o) {
    entangled += o.entangled;
    chsh4 += o.chsh4;
    rus4 += o.rus4;
    chsh36 += o.chsh36;
    rus36 += o.rus36;
    bound13 += o.bound13;
    return *this;
  }
};

// Tr(op * rho) for Hermitian operands; the trace is real up to rounding.
double fast_expectation(const CMat4& op, const CMat4& rho) {
  Complex t(0.0, 0.0);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) t += op(i, j) * rho(j, i);
  }
  return t.real();
}

DensityMatrix draw_state(const Ensemble& ensemble, SeededRng& rng) {
  switch (ensemble.kind) {
    case EnsembleKind::kMixed:
      return random_mixed(rng);
    case EnsembleKind::kPureHaar:
      return from_pure(haar_pure(rng));
    case EnsembleKind::kSeparable:
      return random_separable(rng, ensemble.separable_terms);
  }
  throw ConfigInvalidError("unknown ensemble");
}

Counts run_block(const ExperimentConfig& cfg, const std::vector<CMat4>& ops4,
                 const std::vector<CMat4>& ops36, std::uint64_t begin,
                 std::uint64_t end) {
  Counts c;
  for (std::uint64_t i = begin; i < end; ++i) {
    SeededRng rng(SeededRng::split(cfg.seed, i));
    const DensityMatrix rho = draw_state(cfg.ensemble, rng);
    const double neg = negativity(rho).value;
    if (neg > 1e-10) ++c.entangled;

    double max4 = 0.0;
    for (const CMat4& op : ops4) {
      max4 = std::max(max4, std::abs(fast_expectation(op, rho.mat())));
    }
    double max36 = 0.0;
    for (const CMat4& op : ops36) {
      max36 = std::max(max36, std::abs(fast_expectation(op, rho.mat())));
    }

    if (max4 > kChshBound) ++c.chsh4;
    if (max4 > kRusBound) ++c.rus4;
    if (max36 > kChshBound) ++c.chsh36;
    if (max36 > kRusBound) ++c.rus36;
    const double threshold = std::numbers::sqrt2 * (1.0 + neg);
    if (std::max(max4, max36) > threshold + 1e-9) ++c.bound13;
  }
  return c;
}

std::uint64_t pick(const Counts& c, Statistic s) {
  switch (s) {
    case Statistic::kEntangled:
      return c.entangled;
    case Statistic::kChshAnyOf4:
      return c.chsh4;
    case Statistic::kRusAnyOf4:
      return c.rus4;
    case Statistic::kChshAnyOf36:
      return c.chsh36;
    case Statistic::kRusAnyOf36:
      return c.rus36;
    case Statistic::kBound13SlackMin:
      return c.bound13;
  }
  throw ConfigInvalidError("unknown statistic");
}

TallyResult make_tally(std::uint64_t hits, std::uint64_t trials,
                       const std::string& label, std::uint64_t seed) {
  TallyResult t;
  t.hits = hits;
  t.trials = trials;
  t.statistic = label;
  t.seed = seed;
  if (trials > 0) {
    const double p = static_cast<double>(hits) / static_cast<double>(trials);
    t.fraction = p;
    t.standard_error =
        std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    t.ci95 = wilson_ci(hits, trials, 1.96);
  }
  return t;
}

}  // namespace

std::string statistic_label(Statistic s) {
  switch (s) {
    case Statistic::kEntangled:
      return "entangled";
    case Statistic::kChshAnyOf4:
      return "chsh-any-of-4";
    case Statistic::kRusAnyOf4:
      return "rus-any-of-4";
    case Statistic::kChshAnyOf36:
      return "chsh-any-of-36";
    case Statistic::kRusAnyOf36:
      return "rus-any-of-36";
    case Statistic::kBound13SlackMin:
      return "bound13-slack-min";
  }
  throw ConfigInvalidError("unknown statistic");
}

std::optional<Statistic> parse_statistic(std::string_view label) {
  if (label == "entangled") return Statistic::kEntangled;
  if (label == "chsh-any-of-4") return Statistic::kChshAnyOf4;
  if (label == "rus-any-of-4") return Statistic::kRusAnyOf4;
  if (label == "chsh-any-of-36") return Statistic::kChshAnyOf36;
  if (label == "rus-any-of-36") return Statistic::kRusAnyOf36;
  if (label == "bound13-slack-min") return Statistic::kBound13SlackMin;
  return std::nullopt;
}

std::string ensemble_label(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::kMixed:
      return "mixed";
    case EnsembleKind::kPureHaar:
      return "pure-haar";
    case EnsembleKind::kSeparable:
      return "separable";
  }
  throw ConfigInvalidError("unknown ensemble");
}

std::optional<EnsembleKind> parse_ensemble(std::string_view label) {
  if (label == "mixed") return EnsembleKind::kMixed;
  if (label == "pure-haar") return EnsembleKind::kPureHaar;
  if (label == "separable") return EnsembleKind::kSeparable;
  return std::nullopt;
}

std::vector<TallyResult> run(const ExperimentConfig& config) {
  if (config.samples < 1) throw ConfigInvalidError("samples must be >= 1");
  if (config.shards < 1) throw ConfigInvalidError("shards must be >= 1");
  if (config.shards > config.samples) {
    throw ConfigInvalidError("shards must not exceed samples");
  }
  if (config.statistics.empty()) {
    throw ConfigInvalidError("at least one statistic must be requested");
  }
  if (config.ensemble.kind == EnsembleKind::kSeparable &&
      config.ensemble.separable_terms < 1) {
    throw ConfigInvalidError("separable mixture terms must be >= 1");
  }

  std::vector<CMat4> ops4;
  for (const BellOperator& op : bell_family4(config.settings)) {
    ops4.push_back(op.mat);
  }
  std::vector<CMat4> ops36;
  for (const BellOperator& op :
       bell_family36(config.triads.first, config.triads.second)) {
    ops36.push_back(op.mat);
  }

  const std::uint64_t shards = config.shards;
  const std::uint64_t base = config.samples / shards;
  const std::uint64_t rem = config.samples % shards;

  Counts total;
  if (shards == 1) {
    total = run_block(config, ops4, ops36, 0, config.samples);
  } else {
    std::vector<std::future<Counts>> blocks;
    std::uint64_t begin = 0;
    for (std::uint64_t s = 0; s < shards; ++s) {
      const std::uint64_t end = begin + base + (s < rem ? 1 : 0);
      blocks.push_back(std::async(std::launch::async, run_block,
                                  std::cref(config), std::cref(ops4),
                                  std::cref(ops36), begin, end));
      begin = end;
    }
    // Fold in shard-index order; counts are sums, so the tally is the same
    // for every shard count and scheduling.
    for (auto& b : blocks) total += b.get();
  }

  std::vector<TallyResult> out;
  out.reserve(config.statistics.size());
  for (Statistic s : config.statistics) {
    out.push_back(make_tally(pick(total, s), config.samples,
                             statistic_label(s), config.seed));
  }
  return out;
}

std::pair<double, double> wilson_ci(std::uint64_t hits, std::uint64_t trials,
                                    double z) {
  if (trials < 1) throw ConfigInvalidError("wilson_ci requires trials >= 1");
  if (hits > trials) throw ConfigInvalidError("hits must not exceed trials");
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw ConfigInvalidError("z must be positive and finite");
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double zz = z * z;
  const double denom = 1.0 + zz / n;
  const double center = (p + zz / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + zz / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

TallyResult merge(const TallyResult& a, const TallyResult& b) {
  if (a.statistic != b.statistic) {
    throw LabelMismatchError("cannot merge tallies of different statistics");
  }
  return make_tally(a.hits + b.hits, a.trials + b.trials, a.statistic,
                    a.trials > 0 ? a.seed : b.seed);
}

}  // namespace bellkit
