// Copyright 2026 The evlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The result of `evlogic run` for one input, and its JSON form.
//
// JSON schema (keys in this order):
//
//   {
//     "input":       string,
//     "verdict":     "sat" | "unsat",
//     "model":       {"positive": [string], "negative": [string]},
//     "plausible":   [string],
//     "witness":     null | {"rule": string, "consumed": [string]},
//     "trace":       [{"step": int, "rule": string, "consumed": [string],
//                      "inserted": [string], "removed": [string]}],
//     "stats":       {rule: int},
//     "duration_ms": number
//   }
//
// Formulas are rendered as in the text output, e.g. "t1:Attack" or
// "(t:Culprit(C,Attack))_{r1,r5}". "trace" is empty unless requested.

#ifndef EVLOGIC_CLI_REPORT_HPP_
#define EVLOGIC_CLI_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evlogic/engine.hpp"
#include "json.hpp"

namespace evlogic::cli {

struct TraceLine {
  std::size_t step = 0;
  std::string rule;
  std::vector<std::string> consumed;
  std::vector<std::string> inserted;
  std::vector<std::string> removed;

  friend bool operator==(const TraceLine&, const TraceLine&) = default;
};

struct Witness {
  std::string rule;
  std::vector<std::string> consumed;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct RunReport {
  std::string input;
  bool sat = false;
  std::vector<std::string> positive;
  std::vector<std::string> negative;
  std::vector<std::string> plausible;
  std::optional<Witness> witness;
  std::vector<TraceLine> trace;
  std::vector<std::pair<std::string, std::size_t>> stats;
  double duration_ms = 0.0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

RunReport make_report(const std::string& input, const RunResult& result,
                      double duration_ms, bool with_trace);

nlohmann::ordered_json to_json(const RunReport& report);

/// Throws nlohmann::json::exception or std::invalid_argument on a document
/// that does not follow the schema.
RunReport report_from_json(const nlohmann::ordered_json& json);

struct TextStyle {
  bool color = false;
  bool plausible_only = false;
};

std::string render_text(const RunReport& report, const TextStyle& style);

}  // namespace evlogic::cli

#endif  // EVLOGIC_CLI_REPORT_HPP_
