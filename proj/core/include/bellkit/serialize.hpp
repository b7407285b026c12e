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
// File formats and machine-readable reports. Parsers accept the JSON
// documents described in the README; emitters produce byte-stable output
// (fixed key order, doubles at 17 significant digits so every value
// round-trips exactly).

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bellkit/bell.hpp"
#include "bellkit/montecarlo.hpp"
#include "bellkit/qstate.hpp"

namespace bellkit {

/// Malformed or schema-violating input document (CLI exit code 2).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Well-formed state file whose matrix fails physicality validation
/// (CLI exit code 3).
struct StateInvalidError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { kJson, kCsv };

std::optional<OutputFormat> parse_format(std::string_view label);

/// A parsed state file. `pure` is engaged when the file carried amplitudes;
/// `rho` is always usable.
struct LoadedState {
  DensityMatrix rho;
  std::optional<PureState> pure;
};

/// A parsed settings file; exactly one alternative is engaged.
struct LoadedSettings {
  std::optional<SettingsPair> pair;
  std::optional<std::pair<Triad, Triad>> triads;
};

/// Parses a state document: {"format": "density", "matrix": [[re, im] x16]}
/// (row-major) or {"format": "pure", "amplitudes": [[re, im] x4]}.
LoadedState parse_state_file(const std::string& text);

/// Parses a settings document: {"mode": "pair"|"triad", "a": [...], "b":
/// [...]} with 2 (pair) or 3 (triad) unit 3-vectors per party.
LoadedSettings parse_settings_file(const std::string& text);

std::string state_file_json(const DensityMatrix& rho);
std::string state_file_json(const PureState& psi);

/// %.17g rendering; parses back to the identical double.
std::string format_double(double v);

std::string tallies_json(const std::vector<TallyResult>& results);
std::string tallies_csv(const std::vector<TallyResult>& results);

struct OperatorVerdict {
  int index = 0;  // 1-based position within the family
  int variant = 0;
  Verdict verdict;
};

struct VerifyReport {
  double negativity = 0.0;
  double max_negativity_lower_bound = 0.0;
  std::vector<OperatorVerdict> operators;
};

/// Evaluates every family member on rho and classifies it against all
/// thresholds, including the strengthened bound at the state's negativity.
VerifyReport build_verify_report(const DensityMatrix& rho,
                                 const std::vector<BellOperator>& family);

std::string verify_report_json(const VerifyReport& report);
std::string verify_report_csv(const VerifyReport& report);

struct BoundReport {
  double negativity = 0.0;
  double fully_entangled_fraction = 0.0;
  double optimizer_max = 0.0;
  double horodecki_max = 0.0;
  double slack_fidelity = 0.0;              // 2*sqrt2*F - optimizer_max
  double slack_fidelity_negativity = 0.0;   // (1+N)/2 - F
  double slack_strengthened = 0.0;          // sqrt2*(1+N) - optimizer_max
  int restarts = 0;
  int iterations = 0;
  std::uint64_t seed = 0;
};

BoundReport build_bound_report(const DensityMatrix& rho,
                               const OptimizerBudget& budget,
                               std::uint64_t seed);

std::string bound_report_json(const BoundReport& report);
std::string bound_report_csv(const BoundReport& report);

}  // namespace bellkit
