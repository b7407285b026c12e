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

#include "bellkit/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace bellkit {
namespace {

using nlohmann::json;

json parse_document(const std::string& text, const char* what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw ParseError(std::string(what) + ": invalid JSON");
  }
  if (!doc.is_object()) {
    throw ParseError(std::string(what) + ": top level must be a JSON object");
  }
  return doc;
}

const json& require_field(const json& doc, const char* name,
                          const char* what) {
  auto it = doc.find(name);
  if (it == doc.end()) {
    throw ParseError(std::string(what) + ": missing field '" + name + "'");
  }
  return *it;
}

double read_number(const json& v, const char* what) {
  if (!v.is_number()) {
    throw ParseError(std::string(what) + ": expected a number");
  }
  return v.get<double>();
}

Complex read_complex(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 2) {
    throw ParseError(std::string(what) + ": expected a [re, im] pair");
  }
  return Complex(read_number(v[0], what), read_number(v[1], what));
}

Direction read_direction(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 3) {
    throw ParseError(std::string(what) + ": expected a unit 3-vector");
  }
  try {
    return Direction(read_number(v[0], what), read_number(v[1], what),
                     read_number(v[2], what));
  } catch (const NotUnitError& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

void append(std::string& out, std::string_view s) { out.append(s); }

void append_complex_pair(std::string& out, const Complex& c) {
  out += '[';
  out += format_double(c.real());
  out += ", ";
  out += format_double(c.imag());
  out += ']';
}

const char* bool_word(bool b) { return b ? "true" : "false"; }

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view label) {
  if (label == "json") return OutputFormat::kJson;
  if (label == "csv") return OutputFormat::kCsv;
  return std::nullopt;
}

LoadedState parse_state_file(const std::string& text) {
  const json doc = parse_document(text, "state file");
  const json& format = require_field(doc, "format", "state file");
  if (!format.is_string()) {
    throw ParseError("state file: 'format' must be a string");
  }
  const std::string kind = format.get<std::string>();

  if (kind == "density") {
    const json& entries = require_field(doc, "matrix", "state file");
    if (!entries.is_array() || entries.size() != 16) {
      throw ParseError("state file: 'matrix' must hold 16 [re, im] entries");
    }
    CMat4 m;
    for (int i = 0; i < 16; ++i) m.e[i] = read_complex(entries[i], "matrix");
    try {
      return LoadedState{DensityMatrix(m), std::nullopt};
    } catch (const std::invalid_argument& e) {
      throw StateInvalidError(std::string("state file: ") + e.what());
    }
  }

  if (kind == "pure") {
    const json& entries = require_field(doc, "amplitudes", "state file");
    if (!entries.is_array() || entries.size() != 4) {
      throw ParseError("state file: 'amplitudes' must hold 4 [re, im] entries");
    }
    std::array<Complex, 4> a;
    for (int i = 0; i < 4; ++i) a[i] = read_complex(entries[i], "amplitudes");
    try {
      PureState psi(a);
      return LoadedState{from_pure(psi), psi};
    } catch (const std::invalid_argument& e) {
      throw StateInvalidError(std::string("state file: ") + e.what());
    }
  }

  throw ParseError("state file: 'format' must be 'density' or 'pure'");
}

LoadedSettings parse_settings_file(const std::string& text) {
  const json doc = parse_document(text, "settings file");
  const json& mode = require_field(doc, "mode", "settings file");
  if (!mode.is_string()) {
    throw ParseError("settings file: 'mode' must be a string");
  }
  const std::string kind = mode.get<std::string>();
  const json& a = require_field(doc, "a", "settings file");
  const json& b = require_field(doc, "b", "settings file");

  const std::size_t want = kind == "pair" ? 2 : kind == "triad" ? 3 : 0;
  if (want == 0) {
    throw ParseError("settings file: 'mode' must be 'pair' or 'triad'");
  }
  if (!a.is_array() || a.size() != want || !b.is_array() || b.size() != want) {
    throw ParseError("settings file: each party needs " +
                     std::to_string(want) + " directions in mode '" + kind +
                     "'");
  }

  try {
    if (want == 2) {
      SettingsPair pair{OrthogonalPair(read_direction(a[0], "party a"),
                                       read_direction(a[1], "party a")),
                        OrthogonalPair(read_direction(b[0], "party b"),
                                       read_direction(b[1], "party b"))};
      return LoadedSettings{pair, std::nullopt};
    }
    Triad ta(read_direction(a[0], "party a"), read_direction(a[1], "party a"),
             read_direction(a[2], "party a"));
    Triad tb(read_direction(b[0], "party b"), read_direction(b[1], "party b"),
             read_direction(b[2], "party b"));
    return LoadedSettings{std::nullopt, std::pair{ta, tb}};
  } catch (const NotOrthogonalError& e) {
    throw ParseError(std::string("settings file: ") + e.what());
  }
}

std::string state_file_json(const DensityMatrix& rho) {
  std::string out;
  append(out, "{\n  \"format\": \"density\",\n  \"matrix\": [\n");
  for (int i = 0; i < 16; ++i) {
    append(out, "    ");
    append_complex_pair(out, rho.mat().e[i]);
    append(out, i + 1 < 16 ? ",\n" : "\n");
  }
  append(out, "  ]\n}\n");
  return out;
}

std::string state_file_json(const PureState& psi) {
  std::string out;
  append(out, "{\n  \"format\": \"pure\",\n  \"amplitudes\": [\n");
  for (int i = 0; i < 4; ++i) {
    append(out, "    ");
    append_complex_pair(out, psi.amplitudes()[i]);
    append(out, i + 1 < 4 ? ",\n" : "\n");
  }
  append(out, "  ]\n}\n");
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string tallies_json(const std::vector<TallyResult>& results) {
  std::string out = "{\n  \"results\": [";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const TallyResult& t = results[i];
    append(out, i == 0 ? "\n" : ",\n");
    append(out, "    {\n");
    append(out, "      \"hits\": " + std::to_string(t.hits) + ",\n");
    append(out, "      \"trials\": " + std::to_string(t.trials) + ",\n");
    append(out, "      \"fraction\": " + format_double(t.fraction) + ",\n");
    append(out, "      \"stderr\": " + format_double(t.standard_error) + ",\n");
    append(out, "      \"ci95\": [" + format_double(t.ci95.first) + ", " +
                    format_double(t.ci95.second) + "],\n");
    append(out, "      \"statistic\": \"" + t.statistic + "\",\n");
    append(out, "      \"seed\": " + std::to_string(t.seed) + "\n");
    append(out, "    }");
  }
  append(out, results.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out;
}

std::string tallies_csv(const std::vector<TallyResult>& results) {
  std::string out = "hits,trials,fraction,stderr,ci95_lo,ci95_hi,statistic,seed\n";
  for (const TallyResult& t : results) {
    out += std::to_string(t.hits) + ',' + std::to_string(t.trials) + ',' +
           format_double(t.fraction) + ',' + format_double(t.standard_error) +
           ',' + format_double(t.ci95.first) + ',' +
           format_double(t.ci95.second) + ',' + t.statistic + ',' +
           std::to_string(t.seed) + '\n';
  }
  return out;
}

VerifyReport build_verify_report(const DensityMatrix& rho,
                                 const std::vector<BellOperator>& family) {
  VerifyReport report;
  report.negativity = negativity(rho).value;
  int index = 0;
  for (const BellOperator& op : family) {
    OperatorVerdict ov;
    ov.index = ++index;
    ov.variant = op.variant;
    ov.verdict = classify(expectation(op, rho), report.negativity);
    report.max_negativity_lower_bound = std::max(
        report.max_negativity_lower_bound, ov.verdict.negativity_lower_bound);
    report.operators.push_back(ov);
  }
  return report;
}

std::string verify_report_json(const VerifyReport& report) {
  std::string out = "{\n";
  append(out, "  \"negativity\": " + format_double(report.negativity) + ",\n");
  append(out, "  \"max_negativity_lower_bound\": " +
                  format_double(report.max_negativity_lower_bound) + ",\n");
  append(out, "  \"operators\": [");
  for (std::size_t i = 0; i < report.operators.size(); ++i) {
    const OperatorVerdict& ov = report.operators[i];
    const Verdict& v = ov.verdict;
    append(out, i == 0 ? "\n" : ",\n");
    append(out, "    {\n");
    append(out, "      \"index\": " + std::to_string(ov.index) + ",\n");
    append(out, "      \"variant\": " + std::to_string(ov.variant) + ",\n");
    append(out, "      \"value\": " + format_double(v.value) + ",\n");
    append(out, std::string("      \"violates_chsh\": ") +
                    bool_word(v.violates_chsh) + ",\n");
    append(out, std::string("      \"violates_rus\": ") +
                    bool_word(v.violates_rus) + ",\n");
    append(out, std::string("      \"within_cirelson\": ") +
                    bool_word(v.within_cirelson) + ",\n");
    append(out, "      \"negativity_lower_bound\": " +
                    format_double(v.negativity_lower_bound) + ",\n");
    append(out, std::string("      \"within_bound13\": ") +
                    (v.within_bound13 ? bool_word(*v.within_bound13) : "null") +
                    "\n");
    append(out, "    }");
  }
  append(out, report.operators.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out;
}

std::string verify_report_csv(const VerifyReport& report) {
  std::string out =
      "index,variant,value,violates_chsh,violates_rus,within_cirelson,"
      "negativity_lower_bound,within_bound13,negativity\n";
  for (const OperatorVerdict& ov : report.operators) {
    const Verdict& v = ov.verdict;
    out += std::to_string(ov.index) + ',' + std::to_string(ov.variant) + ',' +
           format_double(v.value) + ',' + bool_word(v.violates_chsh) + ',' +
           bool_word(v.violates_rus) + ',' + bool_word(v.within_cirelson) +
           ',' + format_double(v.negativity_lower_bound) + ',' +
           (v.within_bound13 ? bool_word(*v.within_bound13) : "") + ',' +
           format_double(report.negativity) + '\n';
  }
  return out;
}

BoundReport build_bound_report(const DensityMatrix& rho,
                               const OptimizerBudget& budget,
                               std::uint64_t seed) {
  BoundReport r;
  r.negativity = negativity(rho).value;
  r.fully_entangled_fraction = fully_entangled_fraction(rho).value;
  r.optimizer_max = max_over_orthogonal_settings(rho, budget, seed).value;
  r.horodecki_max = bellkit::horodecki_max(rho);
  r.slack_fidelity =
      kCirelsonBound * r.fully_entangled_fraction - r.optimizer_max;
  r.slack_fidelity_negativity =
      0.5 * (1.0 + r.negativity) - r.fully_entangled_fraction;
  r.slack_strengthened =
      std::numbers::sqrt2 * (1.0 + r.negativity) - r.optimizer_max;
  r.restarts = budget.restarts;
  r.iterations = budget.iterations;
  r.seed = seed;
  return r;
}

std::string bound_report_json(const BoundReport& r) {
  std::string out = "{\n";
  append(out, "  \"negativity\": " + format_double(r.negativity) + ",\n");
  append(out, "  \"fully_entangled_fraction\": " +
                  format_double(r.fully_entangled_fraction) + ",\n");
  append(out,
         "  \"optimizer_max\": " + format_double(r.optimizer_max) + ",\n");
  append(out,
         "  \"horodecki_max\": " + format_double(r.horodecki_max) + ",\n");
  append(out,
         "  \"slack_fidelity\": " + format_double(r.slack_fidelity) + ",\n");
  append(out, "  \"slack_fidelity_negativity\": " +
                  format_double(r.slack_fidelity_negativity) + ",\n");
  append(out, "  \"slack_strengthened\": " +
                  format_double(r.slack_strengthened) + ",\n");
  append(out, "  \"restarts\": " + std::to_string(r.restarts) + ",\n");
  append(out, "  \"iterations\": " + std::to_string(r.iterations) + ",\n");
  append(out, "  \"seed\": " + std::to_string(r.seed) + "\n");
  append(out, "}\n");
  return out;
}

std::string bound_report_csv(const BoundReport& r) {
  std::string out =
      "negativity,fully_entangled_fraction,optimizer_max,horodecki_max,"
      "slack_fidelity,slack_fidelity_negativity,slack_strengthened,restarts,"
      "iterations,seed\n";
  out += format_double(r.negativity) + ',' +
         format_double(r.fully_entangled_fraction) + ',' +
         format_double(r.optimizer_max) + ',' + format_double(r.horodecki_max) +
         ',' + format_double(r.slack_fidelity) + ',' +
         format_double(r.slack_fidelity_negativity) + ',' +
         format_double(r.slack_strengthened) + ',' +
         std::to_string(r.restarts) + ',' + std::to_string(r.iterations) +
         ',' + std::to_string(r.seed) + '\n';
  return out;
}

}  // namespace bellkit
