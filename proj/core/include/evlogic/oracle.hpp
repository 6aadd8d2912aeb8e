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

// Checks on the engine that do not trust the engine: random theories,
// shuffled firing order, output conditions, trace replay and a brute-force
// re-scan for applicable rules.

#ifndef EVLOGIC_ORACLE_HPP_
#define EVLOGIC_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evlogic/engine.hpp"
#include "evlogic/model.hpp"

namespace evlogic {

struct GenConfig {
  static constexpr std::size_t kMaxAgents = 4;
  static constexpr std::size_t kMaxTimes = 3;
  static constexpr std::size_t kMaxSimpleVars = 4;
  static constexpr std::size_t kMaxDerivedVars = 3;
  static constexpr std::size_t kMaxReasonings = 4;

  std::size_t agent_count = kMaxAgents;
  std::size_t time_count = kMaxTimes;
  std::size_t simple_var_count = kMaxSimpleVars;
  std::size_t derived_var_count = kMaxDerivedVars;
  std::size_t reasoning_count = kMaxReasonings;
  double conflict_bias = 0.2;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument when a count is 0 or above its cap, or the
  /// bias is outside [0, 1].
  void validate() const;
};

/// A valid layer-1 theory, deterministic in the config. Names are a0.., t0..,
/// s0.. (simple), d0.. (derived) and r0... With bias 0 every literal is
/// asserted at one instant only; with bias 1 and two or more instants there
/// is at least one D1 pair.
Theory generate_theory(const GenConfig& config);

/// generate_theory(config with bias 0) plus a contradiction that only `rule`
/// detects. X'C needs three instants. Throws std::invalid_argument for a
/// rule that is not a closure rule or a config that cannot host it.
Theory generate_closure_theory(RuleName rule, const GenConfig& config);

/// generate_theory(config with bias 0) plus a chain x0 -> x1 -> x2 of
/// reasonings at one instant where a more trusted reasoning contradicts x1.
/// Resolving the conflict must also drop the x2 fact built on x1.
Theory generate_cascade_theory(const GenConfig& config);

/// Shuffles each round with its own generator.
OrderPolicy random_order(std::uint64_t seed);

/// run_procedure with a shuffled order inside every phase.
RunResult run_randomized(Theory theory, std::uint64_t seed,
                         EngineOptions options = {});

struct Violation {
  std::string condition;
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string condition, std::string detail);
  void merge(const Report& other);
  std::string to_string() const;
};

/// Output conditions of a run on `before`:
///   open   - no agent asserts a literal at two instants; no head reasoning
///            concludes a literal at two instants; the trust relations of
///            `before`, closed, have no self-loop; no t:p with t:~p; the
///            theory is exhausted.
///   closed - the formula set is empty.
Report check_model_conditions(const Theory& before, const RunResult& result);

/// Replays the trace of `after` from `before`: inserted formulas were
/// absent, removed ones present, steps increase, the replay ends at
/// `after`. For an open result, no reasoning fact mentioning a reasoning
/// defeated by D2'' survives.
Report check_trace(const Theory& before, const Theory& after);

struct PhaseSnapshot {
  Phase phase;
  Theory theory;
  std::set<std::string> removed;
};

struct ObservedRun {
  RunResult result;
  std::vector<PhaseSnapshot> phases;
};

ObservedRun run_observed(Theory theory, EngineOptions options = {});

/// For each phase, no rule of that phase is applicable at its end (formulas
/// the phase removed do not count as missing conclusions). On the final
/// theory no elimination, closure or transitivity rule applies.
Report check_exhaustion(const ObservedRun& run);

/// Everything above plus randomized-order agreement and round-trip for one
/// theory.
struct CheckOptions {
  std::size_t orders = 5;
  bool delta_removal = true;
  std::uint64_t order_seed = 0;
};

struct CheckOutcome {
  bool sat = false;
  Report report;
};

CheckOutcome check_theory(const Theory& theory, const CheckOptions& options);

/// Golden expectations for the bundled corpus files.
Report check_golden_dnc(const RunResult& result);
Report check_golden_attribution(const RunResult& result);

struct FuzzOptions {
  GenConfig config;
  std::size_t seeds = 100;
  CheckOptions check;
  std::string corpus_dir;  // empty: skip the golden files
};

struct FuzzFailure {
  std::string source;  // "seed N" or a corpus file
  std::optional<std::uint64_t> seed;
  Report report;
  std::string minimized;  // theory text
};

struct FuzzSummary {
  std::size_t seeds_run = 0;
  std::size_t sat = 0;
  std::size_t unsat = 0;
  std::size_t golden_checked = 0;
  std::optional<FuzzFailure> failure;

  bool ok() const { return !failure.has_value(); }
  std::string to_string() const;
};

/// Seeds config.seed, config.seed + 1, ...; each seed checks the generated
/// theory and its cascade variant. Stops at the first failure and
/// shrinks it by dropping statements while the same check still fails.
FuzzSummary fuzz(const FuzzOptions& options);

/// Removes statements from `text` while `still_fails` holds for the parsed
/// theory.
std::string minimize(const std::string& text,
                     const std::function<bool(const Theory&)>& still_fails);

}  // namespace evlogic

#endif  // EVLOGIC_ORACLE_HPP_
