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
// Command-line front end. Exit codes: 0 success, 2 usage or input-document
// errors, 3 state files that parse but fail physicality validation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bellkit/bell.hpp"
#include "bellkit/montecarlo.hpp"
#include "bellkit/serialize.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw bellkit::ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw bellkit::ParseError("cannot open output file: " + out_path);
  f << text;
  f.flush();
  if (!f.good()) {
    throw bellkit::ParseError("cannot write output file: " + out_path);
  }
}

bellkit::OutputFormat require_format(const std::string& label) {
  const auto fmt = bellkit::parse_format(label);
  if (!fmt) throw bellkit::ParseError("unknown format: " + label);
  return *fmt;
}

struct CommonFlags {
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
};

void add_common_flags(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--seed", flags->seed, "Base RNG seed (64-bit)")
      ->capture_default_str();
  cmd->add_option("--format", flags->format, "Output format: json or csv")
      ->capture_default_str();
  cmd->add_option("--out", flags->out,
                  "Output path (default: standard output)");
}

struct EstimateFlags {
  std::string ensemble = "mixed";
  std::vector<std::string> statistics;
  std::uint64_t samples = 0;
  std::uint32_t shards = 1;
  int mixture_terms = 8;
  std::string settings_path;
};

int run_estimate(const EstimateFlags& e, const CommonFlags& common) {
  const bellkit::OutputFormat fmt = require_format(common.format);

  bellkit::ExperimentConfig cfg;
  const auto kind = bellkit::parse_ensemble(e.ensemble);
  if (!kind) throw bellkit::ParseError("unknown ensemble: " + e.ensemble);
  cfg.ensemble.kind = *kind;
  cfg.ensemble.separable_terms = e.mixture_terms;

  for (const std::string& label : e.statistics) {
    const auto stat = bellkit::parse_statistic(label);
    if (!stat) throw bellkit::ParseError("unknown statistic: " + label);
    cfg.statistics.push_back(*stat);
  }

  if (e.samples < 1) throw bellkit::ParseError("samples must be >= 1");
  cfg.samples = e.samples;
  cfg.seed = common.seed;
  cfg.shards = e.shards;

  if (!e.settings_path.empty()) {
    const bellkit::LoadedSettings s =
        bellkit::parse_settings_file(read_file(e.settings_path));
    if (s.pair) cfg.settings = *s.pair;
    if (s.triads) cfg.triads = *s.triads;
  }

  const std::vector<bellkit::TallyResult> results = bellkit::run(cfg);
  emit(fmt == bellkit::OutputFormat::kJson ? bellkit::tallies_json(results)
                                           : bellkit::tallies_csv(results),
       common.out);
  return 0;
}

struct VerifyFlags {
  std::string state_path;
  std::string settings_path;
};

int run_verify(const VerifyFlags& v, const CommonFlags& common) {
  const bellkit::OutputFormat fmt = require_format(common.format);
  const bellkit::LoadedState state =
      bellkit::parse_state_file(read_file(v.state_path));

  std::vector<bellkit::BellOperator> family;
  if (!v.settings_path.empty()) {
    const bellkit::LoadedSettings s =
        bellkit::parse_settings_file(read_file(v.settings_path));
    if (s.pair) {
      for (auto& op : bellkit::bell_family4(*s.pair)) family.push_back(op);
    } else {
      family = bellkit::bell_family36(s.triads->first, s.triads->second);
    }
  } else {
    for (auto& op : bellkit::bell_family4(bellkit::canonical_settings())) {
      family.push_back(op);
    }
  }

  const bellkit::VerifyReport report =
      bellkit::build_verify_report(state.rho, family);
  emit(fmt == bellkit::OutputFormat::kJson
           ? bellkit::verify_report_json(report)
           : bellkit::verify_report_csv(report),
       common.out);
  return 0;
}

struct BoundFlags {
  std::string state_path;
  int restarts = 8;
  int iterations = 200;
};

int run_bound(const BoundFlags& b, const CommonFlags& common) {
  const bellkit::OutputFormat fmt = require_format(common.format);
  if (b.restarts < 1) throw bellkit::ParseError("restarts must be >= 1");
  if (b.iterations < 0) throw bellkit::ParseError("iterations must be >= 0");
  const bellkit::LoadedState state =
      bellkit::parse_state_file(read_file(b.state_path));

  const bellkit::BoundReport report = bellkit::build_bound_report(
      state.rho, bellkit::OptimizerBudget{b.restarts, b.iterations},
      common.seed);
  emit(fmt == bellkit::OutputFormat::kJson ? bellkit::bound_report_json(report)
                                           : bellkit::bound_report_csv(report),
       common.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit Bell-CHSH entanglement verification toolkit"};
  app.set_version_flag("--version", "bellkit 1.0.0");
  app.require_subcommand(1);

  CommonFlags common;

  EstimateFlags est;
  CLI::App* estimate = app.add_subcommand(
      "estimate", "Estimate violation statistics over a random ensemble");
  estimate
      ->add_option("--ensemble", est.ensemble,
                   "State ensemble: mixed, pure-haar or separable")
      ->capture_default_str();
  estimate
      ->add_option("--statistic", est.statistics,
                   "Statistic to tally (repeatable): entangled, "
                   "chsh-any-of-4, rus-any-of-4, chsh-any-of-36, "
                   "rus-any-of-36, bound13-slack-min")
      ->required()
      ->delimiter(',');
  estimate->add_option("--samples", est.samples, "Number of states to draw")
      ->required();
  estimate
      ->add_option("--shards", est.shards,
                   "Independent work blocks (tallies are shard-independent)")
      ->capture_default_str();
  estimate
      ->add_option("--mixture-terms", est.mixture_terms,
                   "Product terms per separable mixture")
      ->capture_default_str();
  estimate->add_option("--settings-file", est.settings_path,
                       "JSON measurement directions (defaults: z,x pairs and "
                       "x,y,z triads)");
  add_common_flags(estimate, &common);

  VerifyFlags ver;
  CLI::App* verify = app.add_subcommand(
      "verify", "Classify one state against the Bell thresholds");
  verify->add_option("--state-file", ver.state_path, "JSON state document")
      ->required();
  verify->add_option("--settings-file", ver.settings_path,
                     "JSON measurement directions (pair mode: 4 operators, "
                     "triad mode: 36)");
  add_common_flags(verify, &common);

  BoundFlags bnd;
  CLI::App* bound = app.add_subcommand(
      "bound", "Report entanglement measures and bound slacks for one state");
  bound->add_option("--state-file", bnd.state_path, "JSON state document")
      ->required();
  bound->add_option("--restarts", bnd.restarts, "Optimizer restarts")
      ->capture_default_str();
  bound
      ->add_option("--iterations", bnd.iterations,
                   "Line searches per optimizer restart")
      ->capture_default_str();
  add_common_flags(bound, &common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      return app.exit(e);
    }
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (estimate->parsed()) return run_estimate(est, common);
    if (verify->parsed()) return run_verify(ver, common);
    return run_bound(bnd, common);
  } catch (const bellkit::StateInvalidError& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
