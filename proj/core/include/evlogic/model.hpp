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

// Formula kinds of the three evidence-logic layers and the Theory that holds
// them while the rewrite engine runs.
//
//   layer 1 (evidence):        SimpleEvidence, DerivedEvidence,
//                              AgentTrust, ReasoningTrust
//   layer 2 (interpretation):  TemporalFact, Implication
//   layer 3 (reasoning):       ReasoningFact
//
// Formulas compare by a canonical key. The key ignores the premise order of
// an Implication and the order of the inherited (tail) reasonings of a
// ReasoningFact; everything else is significant.

#ifndef EVLOGIC_MODEL_HPP_
#define EVLOGIC_MODEL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace evlogic {

struct AgentId {
  std::string name;

  friend bool operator==(const AgentId&, const AgentId&) = default;
  friend auto operator<=>(const AgentId&, const AgentId&) = default;
};

// Two labels are the same label iff their names match; `index` is the
// position in the declared stream of instants.
struct TimeLabel {
  std::string name;
  std::size_t index = 0;

  friend bool operator==(const TimeLabel& a, const TimeLabel& b) {
    return a.name == b.name;
  }
  friend std::strong_ordering operator<=>(const TimeLabel& a,
                                          const TimeLabel& b) {
    return a.name <=> b.name;
  }
};

enum class VarKind { Simple, Derived };

struct PropVar {
  std::string name;
  VarKind kind = VarKind::Simple;

  friend bool operator==(const PropVar&, const PropVar&) = default;
  friend auto operator<=>(const PropVar&, const PropVar&) = default;
};

// A variable or its negation. There is no representation of a double
// negation: negate() flips `positive`.
struct Literal {
  PropVar var;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

Literal negate(const Literal& lit);

struct ReasoningId {
  std::string name;

  friend bool operator==(const ReasoningId&, const ReasoningId&) = default;
  friend auto operator<=>(const ReasoningId&, const ReasoningId&) = default;
};

/// agent@time:lit as seen by a source. Used for the premises of derived
/// evidence.
struct Assertion {
  AgentId agent;
  TimeLabel time;
  Literal lit;

  friend bool operator==(const Assertion&, const Assertion&) = default;
};

/// time:lit without a source.
struct TimedLiteral {
  TimeLabel time;
  Literal lit;

  friend bool operator==(const TimedLiteral&, const TimedLiteral&) = default;
};

// ---- layer 1 --------------------------------------------------------------

struct SimpleEvidence {
  AgentId agent;
  TimeLabel time;
  Literal lit;
};

struct DerivedEvidence {
  AgentId agent;
  TimeLabel time;
  Literal lit;
  ReasoningId reasoning;
  std::vector<Assertion> premises;
};

/// less ⊑_subject more: `more` is trusted more than `less` about `subject`.
struct AgentTrust {
  AgentId less;
  AgentId more;
  PropVar subject;
};

/// less ≺ more.
struct ReasoningTrust {
  ReasoningId less;
  ReasoningId more;
};

// ---- layer 2 --------------------------------------------------------------

struct TemporalFact {
  TimeLabel time;
  Literal lit;
};

struct Implication {
  std::vector<TimedLiteral> premises;
  ReasoningId reasoning;
  TimedLiteral head;
};

// ---- layer 3 --------------------------------------------------------------

// reasonings[0] concluded the fact; the rest were inherited from premises.
struct ReasoningFact {
  TimeLabel time;
  Literal lit;
  std::vector<ReasoningId> reasonings;

  const ReasoningId& head() const { return reasonings.front(); }
  bool singleton() const { return reasonings.size() == 1; }
  bool mentions(const ReasoningId& r) const;
};

using Formula =
    std::variant<SimpleEvidence, DerivedEvidence, AgentTrust, ReasoningTrust,
                 TemporalFact, Implication, ReasoningFact>;

enum class Layer { Evidence = 1, Interpretation = 2, Reasoning = 3 };

Layer layer_of(const Formula& f);

/// Canonical identity of a formula; equal keys mean equal formulas.
std::string canonical_key(const Formula& f);

/// Human-readable rendering, e.g. `TF@t2:~SpeedTr`, `(t1:Attack)_{r1,r2}`.
std::string to_string(const Literal& lit);
std::string to_string(const Assertion& a);
std::string to_string(const TimedLiteral& tl);
std::string to_string(const Formula& f);

bool same_formula(const Formula& a, const Formula& b);

Implication implication_of(const DerivedEvidence& d);

// ---- rules and trace ------------------------------------------------------

enum class RuleName {
  T1,
  T1p,
  T2,
  Arrow,
  ArrowP,
  TransAgent,
  TransReasoning,
  D1,
  D1p,
  D1pp,
  D2,
  D2p,
  D2pp,
  XC,
  XpC,
  XT,
  XpT,
  XP,
};

inline constexpr std::size_t kRuleCount = 18;

std::string_view to_string(RuleName rule);
std::optional<RuleName> parse_rule_name(std::string_view text);
const std::vector<RuleName>& all_rules();
bool is_closure_rule(RuleName rule);

struct TraceEntry {
  RuleName rule = RuleName::T1;
  std::vector<Formula> consumed;
  std::vector<Formula> inserted;
  std::vector<Formula> removed;
  std::size_t step = 0;
};

bool operator==(const TraceEntry& a, const TraceEntry& b);

// ---- theory ---------------------------------------------------------------

/// Formula set keyed by canonical_key.
class FormulaSet {
 public:
  using Map = std::map<std::string, Formula>;
  using const_iterator = Map::const_iterator;

  bool insert(Formula f);
  bool erase(const Formula& f);
  bool erase_key(const std::string& key);
  bool contains(const Formula& f) const;
  bool contains_key(const std::string& key) const;
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  void clear() { items_.clear(); }

  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }

  std::vector<Formula> to_vector() const;
  std::set<std::string> keys() const;

  template <typename T>
  std::vector<T> of() const {
    std::vector<T> out;
    for (const auto& [key, f] : items_) {
      if (const T* p = std::get_if<T>(&f)) out.push_back(*p);
    }
    return out;
  }

  friend bool operator==(const FormulaSet& a, const FormulaSet& b);

 private:
  Map items_;
};

enum class VerdictState { Open, Closed };

class Theory {
 public:
  Theory() = default;

  // Alphabets. Agents and times keep declaration order.
  const std::vector<AgentId>& agents() const { return agents_; }
  const std::vector<TimeLabel>& times() const { return times_; }
  const std::map<std::string, PropVar>& vars() const { return vars_; }
  const std::set<ReasoningId>& reasonings() const { return reasonings_; }

  void add_agent(AgentId a);
  void add_time(std::string name);
  void add_var(PropVar v);
  void add_reasoning(ReasoningId r);

  std::optional<TimeLabel> find_time(std::string_view name) const;
  std::size_t count_vars(VarKind kind) const;

  const FormulaSet& formulas() const { return formulas_; }
  bool contains(const Formula& f) const { return formulas_.contains(f); }

  // Raw mutation, no trace. Returns false when the set did not change.
  bool insert(Formula f);
  bool erase(const Formula& f);

  VerdictState verdict() const { return verdict_; }
  bool closed() const { return verdict_ == VerdictState::Closed; }
  bool exhausted() const { return exhausted_; }
  void mark_exhausted() { exhausted_ = true; }

  const std::vector<TraceEntry>& trace() const { return trace_; }

  /// Appends an entry, assigning the next step number.
  const TraceEntry& record(TraceEntry entry);

  /// Derives ⊥: records a closure entry that removes every formula, then
  /// empties the set.
  const TraceEntry& close(RuleName rule, std::vector<Formula> consumed);

  friend bool operator==(const Theory& a, const Theory& b);

 private:
  std::vector<AgentId> agents_;
  std::vector<TimeLabel> times_;
  std::map<std::string, PropVar> vars_;
  std::set<ReasoningId> reasonings_;
  FormulaSet formulas_;
  VerdictState verdict_ = VerdictState::Open;
  bool exhausted_ = false;
  std::vector<TraceEntry> trace_;
};

/// Upper bound on the number of distinct formulas constructible from the
/// theory's alphabets. Rewriting never grows the formula set past it.
std::uint64_t universe_bound(const Theory& theory);

}  // namespace evlogic

#endif  // EVLOGIC_MODEL_HPP_
