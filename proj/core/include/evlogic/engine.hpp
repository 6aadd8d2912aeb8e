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

// The rewriting procedure.
//
// Rules run in a fixed sequence of phases:
//
//   Trans      Trans<= and Trans< to a fixpoint
//   TrustCheck XT, X'T
//   T2         to a fixpoint
//   D          D1 / D2
//   XC
//   T1         to a fixpoint
//   Arrow      (->) to a fixpoint
//   DSingleton D1' / D2'  (singleton subscripts only)
//   ArrowPrime (->') to a fixpoint
//   DGeneral   D1'' / D2''
//   XpC        X'C
//   T1Prime    T1' to a fixpoint
//   XP
//
// A D-phase alternates an insertion closure of its D1 rule with one batch of
// D2 eliminations. The batch is matched against the state before the batch,
// so the removed set does not depend on firing order. A formula removed during
// a D-phase is not re-inserted in that phase. The phase ends when a batch
// removes nothing.
//
// The first closure rule that matches empties the theory and ends the run.

#ifndef EVLOGIC_ENGINE_HPP_
#define EVLOGIC_ENGINE_HPP_

#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "evlogic/model.hpp"

namespace evlogic {

enum class Phase {
  Trans,
  TrustCheck,
  T2,
  D,
  XC,
  T1,
  Arrow,
  DSingleton,
  ArrowPrime,
  DGeneral,
  XpC,
  T1Prime,
  XP,
};

std::string_view to_string(Phase phase);
const std::vector<Phase>& all_phases();
const std::vector<RuleName>& phase_rules(Phase phase);

/// One match of a rule. For insertion rules `inserted` holds only formulas
/// absent from the theory; for eliminations `removed` holds the formulas that
/// are present and would go.
struct RuleInstance {
  RuleName rule = RuleName::T1;
  std::vector<Formula> consumed;
  std::vector<Formula> inserted;
  std::vector<Formula> removed;
  std::string key;  // (rule, consumed keys); the default firing order
};

/// All applicable instances of `rule`, sorted by key. D1'/D2' look only at
/// singleton-subscript facts. `delta_removal` controls the cascade of D2''.
std::vector<RuleInstance> find_instances(RuleName rule, const Theory& theory,
                                         bool delta_removal = true);

/// Reorders the applicable instances of one round before they fire.
using OrderPolicy = std::function<void(std::vector<RuleInstance>&)>;

/// Called after each phase that leaves the theory open, with the canonical
/// keys of the formulas the phase removed.
using PhaseObserver = std::function<void(
    Phase, const Theory&, const std::set<std::string>& removed_in_phase)>;

struct EngineOptions {
  bool delta_removal = true;
  OrderPolicy order;  // empty: key order
  PhaseObserver observer;
};

struct Model {
  std::vector<TemporalFact> facts;

  std::vector<TemporalFact> plausible() const;
  std::vector<TemporalFact> negative() const;
};

struct Open {
  Model model;
};

struct Closed {
  TraceEntry witness;
};

using Verdict = std::variant<Open, Closed>;

inline bool is_open(const Verdict& v) { return std::holds_alternative<Open>(v); }

struct RunResult {
  Verdict verdict;
  Theory theory;
};

// Single phases. Each returns the theory after the phase; a closure check
// returns a closed theory when it fires.
Theory trans_closure_agents(Theory theory, const EngineOptions& options = {});
Theory trans_closure_reasonings(Theory theory,
                                const EngineOptions& options = {});
Theory check_trust_irreflexivity(Theory theory,
                                 const EngineOptions& options = {});
Theory apply_T2(Theory theory, const EngineOptions& options = {});
Theory apply_D1(Theory theory, const EngineOptions& options = {});
Theory apply_D2(Theory theory, const EngineOptions& options = {});
Theory check_XC(Theory theory, const EngineOptions& options = {});
Theory apply_T1(Theory theory, const EngineOptions& options = {});
Theory apply_arrow(Theory theory, const EngineOptions& options = {});
Theory apply_arrow_prime(Theory theory, const EngineOptions& options = {});

enum class Stage { Singleton, General };

Theory apply_D1_reasoning(Theory theory, Stage stage,
                          const EngineOptions& options = {});
Theory apply_D2_reasoning(Theory theory, Stage stage,
                          const EngineOptions& options = {});
Theory check_XpC(Theory theory, const EngineOptions& options = {});
Theory apply_T1_prime(Theory theory, const EngineOptions& options = {});
Theory check_XP(Theory theory, const EngineOptions& options = {});

/// Runs every phase in order.
RunResult run_procedure(Theory theory, const EngineOptions& options = {});

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The temporal facts of an open, exhausted theory. Throws ModelError
/// otherwise.
Model extract_model(const Theory& theory);

/// Number of trace entries per rule, in rule order, omitting zeros.
std::vector<std::pair<RuleName, std::size_t>> rule_stats(const Theory& theory);

}  // namespace evlogic

#endif  // EVLOGIC_ENGINE_HPP_
