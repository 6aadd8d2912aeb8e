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

#include "evlogic/model.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <utility>

namespace evlogic {

namespace {

constexpr char kSep = '\x1f';

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string lit_key(const Literal& lit) {
  std::string out;
  out += lit.positive ? '+' : '-';
  out += lit.var.kind == VarKind::Simple ? 'S' : 'D';
  out += lit.var.name;
  return out;
}

std::string timed_key(const TimedLiteral& tl) {
  return tl.time.name + kSep + lit_key(tl.lit);
}

std::string assertion_key(const Assertion& a) {
  return a.agent.name + kSep + a.time.name + kSep + lit_key(a.lit);
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

Literal negate(const Literal& lit) { return Literal{lit.var, !lit.positive}; }

bool ReasoningFact::mentions(const ReasoningId& r) const {
  return std::find(reasonings.begin(), reasonings.end(), r) != reasonings.end();
}

Layer layer_of(const Formula& f) {
  switch (f.index()) {
    case 0:
    case 1:
    case 2:
    case 3:
      return Layer::Evidence;
    case 4:
    case 5:
      return Layer::Interpretation;
    default:
      return Layer::Reasoning;
  }
}

std::string canonical_key(const Formula& f) {
  return std::visit(
      Overloaded{
          [](const SimpleEvidence& e) {
            return "1E" + std::string(1, kSep) + e.agent.name + kSep +
                   e.time.name + kSep + lit_key(e.lit);
          },
          [](const DerivedEvidence& d) {
            std::vector<std::string> ps;
            for (const auto& p : d.premises) ps.push_back(assertion_key(p));
            return "1D" + std::string(1, kSep) + d.agent.name + kSep +
                   d.time.name + kSep + lit_key(d.lit) + kSep +
                   d.reasoning.name + kSep + "[" +
                   join(ps, std::string(1, '\x1e')) + "]";
          },
          [](const AgentTrust& t) {
            return "1A" + std::string(1, kSep) + t.subject.name + kSep +
                   t.less.name + kSep + t.more.name;
          },
          [](const ReasoningTrust& t) {
            return "1R" + std::string(1, kSep) + t.less.name + kSep +
                   t.more.name;
          },
          [](const TemporalFact& t) {
            return "2T" + std::string(1, kSep) + t.time.name + kSep +
                   lit_key(t.lit);
          },
          [](const Implication& i) {
            std::vector<std::string> ps;
            for (const auto& p : i.premises) ps.push_back(timed_key(p));
            std::sort(ps.begin(), ps.end());
            return "2I" + std::string(1, kSep) + i.reasoning.name + kSep +
                   timed_key(i.head) + kSep + "[" +
                   join(ps, std::string(1, '\x1e')) + "]";
          },
          [](const ReasoningFact& r) {
            std::vector<std::string> tail;
            for (std::size_t i = 1; i < r.reasonings.size(); ++i) {
              tail.push_back(r.reasonings[i].name);
            }
            std::sort(tail.begin(), tail.end());
            tail.erase(std::unique(tail.begin(), tail.end()), tail.end());
            return "3F" + std::string(1, kSep) + r.time.name + kSep +
                   lit_key(r.lit) + kSep + r.head().name + kSep + "{" +
                   join(tail, std::string(1, '\x1e')) + "}";
          },
      },
      f);
}

std::string to_string(const Literal& lit) {
  return (lit.positive ? "" : "~") + lit.var.name;
}

std::string to_string(const Assertion& a) {
  return a.agent.name + "@" + a.time.name + ":" + to_string(a.lit);
}

std::string to_string(const TimedLiteral& tl) {
  return tl.time.name + ":" + to_string(tl.lit);
}

std::string to_string(const Formula& f) {
  return std::visit(
      Overloaded{
          [](const SimpleEvidence& e) {
            return to_string(Assertion{e.agent, e.time, e.lit});
          },
          [](const DerivedEvidence& d) {
            std::vector<std::string> ps;
            for (const auto& p : d.premises) ps.push_back(to_string(p));
            return to_string(Assertion{d.agent, d.time, d.lit}) + " <- " +
                   d.reasoning.name + " [" + join(ps, " | ") + "]";
          },
          [](const AgentTrust& t) {
            return "trust(" + t.subject.name + "): " + t.less.name + " < " +
                   t.more.name;
          },
          [](const ReasoningTrust& t) {
            return t.less.name + " < " + t.more.name;
          },
          [](const TemporalFact& t) {
            return to_string(TimedLiteral{t.time, t.lit});
          },
          [](const Implication& i) {
            std::vector<std::string> ps;
            for (const auto& p : i.premises) ps.push_back(to_string(p));
            return join(ps, " & ") + " ->" + i.reasoning.name + " " +
                   to_string(i.head);
          },
          [](const ReasoningFact& r) {
            std::vector<std::string> names;
            for (const auto& id : r.reasonings) names.push_back(id.name);
            return "(" + to_string(TimedLiteral{r.time, r.lit}) + ")_{" +
                   join(names, ",") + "}";
          },
      },
      f);
}

bool same_formula(const Formula& a, const Formula& b) {
  return a.index() == b.index() && canonical_key(a) == canonical_key(b);
}

Implication implication_of(const DerivedEvidence& d) {
  Implication imp;
  imp.reasoning = d.reasoning;
  imp.head = TimedLiteral{d.time, d.lit};
  for (const auto& p : d.premises) {
    imp.premises.push_back(TimedLiteral{p.time, p.lit});
  }
  return imp;
}

// ---- rules ----------------------------------------------------------------

namespace {

constexpr std::array<std::pair<RuleName, std::string_view>, kRuleCount>
    kRuleNames{{
        {RuleName::T1, "T1"},
        {RuleName::T1p, "T1'"},
        {RuleName::T2, "T2"},
        {RuleName::Arrow, "->"},
        {RuleName::ArrowP, "->'"},
        {RuleName::TransAgent, "Trans<="},
        {RuleName::TransReasoning, "Trans<"},
        {RuleName::D1, "D1"},
        {RuleName::D1p, "D1'"},
        {RuleName::D1pp, "D1''"},
        {RuleName::D2, "D2"},
        {RuleName::D2p, "D2'"},
        {RuleName::D2pp, "D2''"},
        {RuleName::XC, "XC"},
        {RuleName::XpC, "X'C"},
        {RuleName::XT, "XT"},
        {RuleName::XpT, "X'T"},
        {RuleName::XP, "XP"},
    }};

}  // namespace

std::string_view to_string(RuleName rule) {
  for (const auto& [r, name] : kRuleNames) {
    if (r == rule) return name;
  }
  throw std::logic_error("unknown rule");
}

std::optional<RuleName> parse_rule_name(std::string_view text) {
  for (const auto& [r, name] : kRuleNames) {
    if (name == text) return r;
  }
  return std::nullopt;
}

const std::vector<RuleName>& all_rules() {
  static const std::vector<RuleName> rules = [] {
    std::vector<RuleName> out;
    for (const auto& [r, name] : kRuleNames) out.push_back(r);
    return out;
  }();
  return rules;
}

bool is_closure_rule(RuleName rule) {
  switch (rule) {
    case RuleName::XC:
    case RuleName::XpC:
    case RuleName::XT:
    case RuleName::XpT:
    case RuleName::XP:
      return true;
    default:
      return false;
  }
}

namespace {

bool same_formulas(const std::vector<Formula>& a,
                   const std::vector<Formula>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_formula(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace

bool operator==(const TraceEntry& a, const TraceEntry& b) {
  return a.rule == b.rule && a.step == b.step &&
         same_formulas(a.consumed, b.consumed) &&
         same_formulas(a.inserted, b.inserted) &&
         same_formulas(a.removed, b.removed);
}

// ---- FormulaSet -----------------------------------------------------------

bool FormulaSet::insert(Formula f) {
  std::string key = canonical_key(f);
  return items_.emplace(std::move(key), std::move(f)).second;
}

bool FormulaSet::erase(const Formula& f) { return erase_key(canonical_key(f)); }

bool FormulaSet::erase_key(const std::string& key) {
  return items_.erase(key) > 0;
}

bool FormulaSet::contains(const Formula& f) const {
  return contains_key(canonical_key(f));
}

bool FormulaSet::contains_key(const std::string& key) const {
  return items_.find(key) != items_.end();
}

std::vector<Formula> FormulaSet::to_vector() const {
  std::vector<Formula> out;
  out.reserve(items_.size());
  for (const auto& [key, f] : items_) out.push_back(f);
  return out;
}

std::set<std::string> FormulaSet::keys() const {
  std::set<std::string> out;
  for (const auto& [key, f] : items_) out.insert(key);
  return out;
}

bool operator==(const FormulaSet& a, const FormulaSet& b) {
  if (a.items_.size() != b.items_.size()) return false;
  return std::equal(a.items_.begin(), a.items_.end(), b.items_.begin(),
                    [](const auto& x, const auto& y) {
                      return x.first == y.first;
                    });
}

// ---- Theory ---------------------------------------------------------------

void Theory::add_agent(AgentId a) {
  if (std::find(agents_.begin(), agents_.end(), a) == agents_.end()) {
    agents_.push_back(std::move(a));
  }
}

void Theory::add_time(std::string name) {
  if (find_time(name)) return;
  std::size_t index = times_.size();
  times_.push_back(TimeLabel{std::move(name), index});
}

void Theory::add_var(PropVar v) {
  auto [it, inserted] = vars_.emplace(v.name, v);
  if (!inserted && it->second.kind != v.kind) {
    throw std::invalid_argument("variable '" + v.name +
                                "' used with two kinds");
  }
}

void Theory::add_reasoning(ReasoningId r) { reasonings_.insert(std::move(r)); }

std::optional<TimeLabel> Theory::find_time(std::string_view name) const {
  for (const auto& t : times_) {
    if (t.name == name) return t;
  }
  return std::nullopt;
}

std::size_t Theory::count_vars(VarKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(vars_.begin(), vars_.end(),
                    [kind](const auto& kv) { return kv.second.kind == kind; }));
}

bool Theory::insert(Formula f) {
  if (closed()) throw std::logic_error("insert into a closed theory");
  return formulas_.insert(std::move(f));
}

bool Theory::erase(const Formula& f) { return formulas_.erase(f); }

const TraceEntry& Theory::record(TraceEntry entry) {
  entry.step = trace_.empty() ? 1 : trace_.back().step + 1;
  trace_.push_back(std::move(entry));
  return trace_.back();
}

const TraceEntry& Theory::close(RuleName rule, std::vector<Formula> consumed) {
  TraceEntry entry;
  entry.rule = rule;
  entry.consumed = std::move(consumed);
  entry.removed = formulas_.to_vector();
  formulas_.clear();
  verdict_ = VerdictState::Closed;
  return record(std::move(entry));
}

bool operator==(const Theory& a, const Theory& b) {
  auto agent_set = [](const Theory& t) {
    return std::set<AgentId>(t.agents_.begin(), t.agents_.end());
  };
  auto time_names = [](const Theory& t) {
    std::vector<std::string> out;
    for (const auto& tl : t.times_) out.push_back(tl.name);
    return out;
  };
  return agent_set(a) == agent_set(b) && time_names(a) == time_names(b) &&
         a.vars_ == b.vars_ && a.reasonings_ == b.reasonings_ &&
         a.formulas_ == b.formulas_ && a.verdict_ == b.verdict_ &&
         a.exhausted_ == b.exhausted_ && a.trace_ == b.trace_;
}

std::uint64_t universe_bound(const Theory& theory) {
  const std::uint64_t agents = theory.agents().size();
  const std::uint64_t times = theory.times().size();
  const std::uint64_t vars = theory.vars().size();
  const std::uint64_t simple_vars = theory.count_vars(VarKind::Simple);
  const std::uint64_t derived_vars = theory.count_vars(VarKind::Derived);
  const std::uint64_t reasonings = theory.reasonings().size();
  if (reasonings >= 48) return std::numeric_limits<std::uint64_t>::max();

  const std::uint64_t simple_facts = agents * times * 2 * vars;
  const std::uint64_t temporal_facts = times * 2 * vars;
  // A reasoning fact is (instant, literal, head, set of reasonings).
  const std::uint64_t reasoning_facts =
      times * 2 * derived_vars * reasonings * (std::uint64_t{1} << reasonings);
  const std::uint64_t trust =
      agents * agents * simple_vars + reasonings * reasonings;

  std::uint64_t derived = 0;
  std::uint64_t implications = 0;
  for (const auto& [key, f] : theory.formulas()) {
    if (std::holds_alternative<DerivedEvidence>(f)) ++derived;
    if (std::holds_alternative<Implication>(f)) ++implications;
  }
  // Each derived evidence contributes at most one implication.
  return simple_facts + temporal_facts + reasoning_facts + trust + derived +
         implications + derived;
}

}  // namespace evlogic
