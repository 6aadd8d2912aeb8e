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

#include "evlogic/engine.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <utility>

namespace evlogic {

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::Trans: return "Trans";
    case Phase::TrustCheck: return "TrustCheck";
    case Phase::T2: return "T2";
    case Phase::D: return "D";
    case Phase::XC: return "XC";
    case Phase::T1: return "T1";
    case Phase::Arrow: return "Arrow";
    case Phase::DSingleton: return "DSingleton";
    case Phase::ArrowPrime: return "ArrowPrime";
    case Phase::DGeneral: return "DGeneral";
    case Phase::XpC: return "XpC";
    case Phase::T1Prime: return "T1Prime";
    case Phase::XP: return "XP";
  }
  return "?";
}

const std::vector<Phase>& all_phases() {
  static const std::vector<Phase> phases{
      Phase::Trans,     Phase::TrustCheck, Phase::T2,         Phase::D,
      Phase::XC,        Phase::T1,         Phase::Arrow,      Phase::DSingleton,
      Phase::ArrowPrime, Phase::DGeneral,  Phase::XpC,        Phase::T1Prime,
      Phase::XP,
  };
  return phases;
}

const std::vector<RuleName>& phase_rules(Phase phase) {
  using R = RuleName;
  static const std::map<Phase, std::vector<RuleName>> rules{
      {Phase::Trans, {R::TransAgent, R::TransReasoning}},
      {Phase::TrustCheck, {R::XT, R::XpT}},
      {Phase::T2, {R::T2}},
      {Phase::D, {R::D1, R::D2}},
      {Phase::XC, {R::XC}},
      {Phase::T1, {R::T1}},
      {Phase::Arrow, {R::Arrow}},
      {Phase::DSingleton, {R::D1p, R::D2p}},
      {Phase::ArrowPrime, {R::ArrowP}},
      {Phase::DGeneral, {R::D1pp, R::D2pp}},
      {Phase::XpC, {R::XpC}},
      {Phase::T1Prime, {R::T1p}},
      {Phase::XP, {R::XP}},
  };
  return rules.at(phase);
}

std::vector<TemporalFact> Model::plausible() const {
  std::vector<TemporalFact> out;
  for (const auto& f : facts) {
    if (f.lit.positive) out.push_back(f);
  }
  return out;
}

std::vector<TemporalFact> Model::negative() const {
  std::vector<TemporalFact> out;
  for (const auto& f : facts) {
    if (!f.lit.positive) out.push_back(f);
  }
  return out;
}

// ---- matchers -------------------------------------------------------------

namespace {

std::string instance_key(RuleName rule, const std::vector<Formula>& consumed) {
  std::string key(to_string(rule));
  for (const auto& f : consumed) {
    key += '\x1d';
    key += canonical_key(f);
  }
  return key;
}

class Matcher {
 public:
  Matcher(RuleName rule, const Theory& theory) : rule_(rule), th_(theory) {}

  // Insertion instance: keeps only conclusions that are absent.
  void insertion(std::vector<Formula> consumed,
                 const std::vector<Formula>& conclusions) {
    RuleInstance inst;
    std::set<std::string> seen;
    for (const auto& f : conclusions) {
      std::string key = canonical_key(f);
      if (th_.formulas().contains_key(key) || !seen.insert(key).second) {
        continue;
      }
      inst.inserted.push_back(f);
    }
    if (inst.inserted.empty()) return;
    inst.consumed = std::move(consumed);
    push(std::move(inst));
  }

  void elimination(std::vector<Formula> consumed, std::vector<Formula> removed) {
    RuleInstance inst;
    inst.consumed = std::move(consumed);
    inst.removed = std::move(removed);
    push(std::move(inst));
  }

  void closure(std::vector<Formula> consumed) {
    RuleInstance inst;
    inst.consumed = std::move(consumed);
    push(std::move(inst));
  }

  std::vector<RuleInstance> take() {
    std::sort(out_.begin(), out_.end(),
              [](const RuleInstance& a, const RuleInstance& b) {
                return a.key < b.key;
              });
    return std::move(out_);
  }

 private:
  void push(RuleInstance inst) {
    inst.rule = rule_;
    inst.key = instance_key(rule_, inst.consumed);
    out_.push_back(std::move(inst));
  }

  RuleName rule_;
  const Theory& th_;
  std::vector<RuleInstance> out_;
};

bool has_tf(const Theory& th, const TimeLabel& t, const Literal& lit) {
  return th.contains(TemporalFact{t, lit});
}

// Pairs (x, y) with key(x) < key(y).
template <class T, class F>
void for_pairs(const std::vector<T>& items, F&& f) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) f(items[i], items[j]);
  }
}

template <class Trust, class Node>
void trans_instances(Matcher& m, const std::vector<Trust>& edges,
                     Node Trust::*less, Node Trust::*more,
                     bool (*same_subject)(const Trust&, const Trust&),
                     Trust (*make)(const Trust&, const Trust&)) {
  for (const auto& e1 : edges) {
    for (const auto& e2 : edges) {
      if (!(e1.*more == e2.*less) || !same_subject(e1, e2)) continue;
      m.insertion({e1, e2}, {make(e1, e2)});
    }
  }
}

bool same_agent_subject(const AgentTrust& a, const AgentTrust& b) {
  return a.subject == b.subject;
}
AgentTrust chain_agent(const AgentTrust& a, const AgentTrust& b) {
  return AgentTrust{a.less, b.more, a.subject};
}
bool any_reasoning_subject(const ReasoningTrust&, const ReasoningTrust&) {
  return true;
}
ReasoningTrust chain_reasoning(const ReasoningTrust& a,
                               const ReasoningTrust& b) {
  return ReasoningTrust{a.less, b.more};
}

std::vector<ReasoningFact> reasoning_facts(const Theory& th, bool singleton) {
  std::vector<ReasoningFact> out;
  for (auto& f : th.formulas().of<ReasoningFact>()) {
    if (!singleton || f.singleton()) out.push_back(std::move(f));
  }
  return out;
}

void arrow_prime_instances(Matcher& m, const Theory& th,
                           const Implication& imp) {
  // Per premise: the ways it can be satisfied.
  std::vector<std::vector<std::optional<ReasoningFact>>> options;
  const auto rfs = th.formulas().of<ReasoningFact>();
  for (const auto& p : imp.premises) {
    std::vector<std::optional<ReasoningFact>> choices;
    if (has_tf(th, p.time, p.lit)) choices.emplace_back(std::nullopt);
    for (const auto& rf : rfs) {
      if (rf.time == p.time && rf.lit == p.lit) choices.emplace_back(rf);
    }
    if (choices.empty()) return;
    options.push_back(std::move(choices));
  }

  std::vector<std::size_t> pick(options.size(), 0);
  for (;;) {
    std::vector<Formula> consumed{imp};
    ReasoningFact head{imp.head.time, imp.head.lit, {imp.reasoning}};
    bool any_reasoning = false;
    for (std::size_t i = 0; i < options.size(); ++i) {
      const auto& choice = options[i][pick[i]];
      if (!choice) {
        consumed.push_back(TemporalFact{imp.premises[i].time,
                                        imp.premises[i].lit});
        continue;
      }
      any_reasoning = true;
      consumed.push_back(*choice);
      for (const auto& r : choice->reasonings) {
        if (std::find(head.reasonings.begin(), head.reasonings.end(), r) ==
            head.reasonings.end()) {
          head.reasonings.push_back(r);
        }
      }
    }
    if (any_reasoning) m.insertion(std::move(consumed), {head});

    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) return;
  }
}

}  // namespace

std::vector<RuleInstance> find_instances(RuleName rule, const Theory& th,
                                         bool delta_removal) {
  Matcher m(rule, th);
  if (th.closed()) return m.take();
  const auto& fs = th.formulas();

  switch (rule) {
    case RuleName::TransAgent:
      trans_instances(m, fs.of<AgentTrust>(), &AgentTrust::less,
                      &AgentTrust::more, &same_agent_subject, &chain_agent);
      break;

    case RuleName::TransReasoning:
      trans_instances(m, fs.of<ReasoningTrust>(), &ReasoningTrust::less,
                      &ReasoningTrust::more, &any_reasoning_subject,
                      &chain_reasoning);
      break;

    case RuleName::XT:
      for (const auto& t : fs.of<AgentTrust>()) {
        if (t.less == t.more) m.closure({t});
      }
      break;

    case RuleName::XpT:
      for (const auto& t : fs.of<ReasoningTrust>()) {
        if (t.less == t.more) m.closure({t});
      }
      break;

    case RuleName::T2:
      for (const auto& d : fs.of<DerivedEvidence>()) {
        std::vector<Formula> out{implication_of(d)};
        for (const auto& p : d.premises) {
          if (p.lit.var.kind == VarKind::Simple) {
            out.push_back(SimpleEvidence{p.agent, p.time, p.lit});
          }
        }
        m.insertion({d}, out);
      }
      break;

    case RuleName::D1:
      for_pairs(fs.of<SimpleEvidence>(), [&](const auto& a, const auto& b) {
        if (a.lit != b.lit || a.time == b.time) return;
        m.insertion({a, b}, {SimpleEvidence{a.agent, b.time, negate(a.lit)},
                             SimpleEvidence{b.agent, a.time, negate(b.lit)}});
      });
      break;

    case RuleName::D2: {
      const auto evidence = fs.of<SimpleEvidence>();
      for (const auto& t : fs.of<AgentTrust>()) {
        for (const auto& win : evidence) {
          if (win.agent != t.more || win.lit.var != t.subject) continue;
          SimpleEvidence lose{t.less, win.time, negate(win.lit)};
          if (!th.contains(lose)) continue;
          m.elimination({t, win, lose}, {lose});
        }
      }
      break;
    }

    case RuleName::XC:
      for_pairs(fs.of<SimpleEvidence>(), [&](const auto& a, const auto& b) {
        if (a.agent == b.agent && a.lit == b.lit && a.time != b.time) {
          m.closure({a, b});
        }
      });
      break;

    case RuleName::T1:
      for (const auto& e : fs.of<SimpleEvidence>()) {
        m.insertion({e}, {TemporalFact{e.time, e.lit}});
      }
      break;

    case RuleName::Arrow:
      for (const auto& imp : fs.of<Implication>()) {
        std::vector<Formula> consumed{imp};
        bool all = true;
        for (const auto& p : imp.premises) {
          if (!has_tf(th, p.time, p.lit)) {
            all = false;
            break;
          }
          consumed.push_back(TemporalFact{p.time, p.lit});
        }
        if (!all) continue;
        m.insertion(std::move(consumed),
                    {ReasoningFact{imp.head.time, imp.head.lit, {imp.reasoning}}});
      }
      break;

    case RuleName::ArrowP:
      for (const auto& imp : fs.of<Implication>()) {
        arrow_prime_instances(m, th, imp);
      }
      break;

    case RuleName::D1p:
    case RuleName::D1pp:
      for_pairs(reasoning_facts(th, rule == RuleName::D1p),
                [&](const auto& a, const auto& b) {
                  if (a.lit != b.lit || a.time == b.time) return;
                  m.insertion({a, b},
                              {ReasoningFact{b.time, negate(a.lit), a.reasonings},
                               ReasoningFact{a.time, negate(b.lit), b.reasonings}});
                });
      break;

    case RuleName::D2p:
    case RuleName::D2pp: {
      const bool singleton = rule == RuleName::D2p;
      const bool delta = !singleton && delta_removal;
      const auto rfs = reasoning_facts(th, singleton);
      for (const auto& t : fs.of<ReasoningTrust>()) {
        for (const auto& win : rfs) {
          if (win.head() != t.more) continue;
          for (const auto& lose : rfs) {
            if (lose.head() != t.less || lose.time != win.time ||
                lose.lit != negate(win.lit)) {
              continue;
            }
            std::vector<Formula> removed{lose};
            if (delta) {
              const std::string lose_key = canonical_key(lose);
              for (const auto& f : fs.of<ReasoningFact>()) {
                if (f.mentions(t.less) && canonical_key(f) != lose_key) {
                  removed.push_back(f);
                }
              }
            }
            m.elimination({t, win, lose}, std::move(removed));
          }
        }
      }
      break;
    }

    case RuleName::XpC:
      for_pairs(fs.of<ReasoningFact>(), [&](const auto& a, const auto& b) {
        if (a.head() == b.head() && a.lit == b.lit && a.time != b.time) {
          m.closure({a, b});
        }
      });
      break;

    case RuleName::T1p:
      for (const auto& f : fs.of<ReasoningFact>()) {
        m.insertion({f}, {TemporalFact{f.time, f.lit}});
      }
      break;

    case RuleName::XP:
      for (const auto& f : fs.of<TemporalFact>()) {
        if (!f.lit.positive) continue;
        TemporalFact neg{f.time, negate(f.lit)};
        if (th.contains(neg)) m.closure({f, neg});
      }
      break;
  }
  return m.take();
}

// ---- runner ---------------------------------------------------------------

namespace {

class Runner {
 public:
  Runner(Theory& theory, const EngineOptions& options)
      : th_(theory), opt_(options) {}

  void begin_phase() {
    banned_.clear();
    removed_.clear();
  }

  void end_phase(Phase phase) {
    if (!th_.closed() && opt_.observer) opt_.observer(phase, th_, removed_);
  }

  // Fires insertion rules until none applies.
  void saturate(const std::vector<RuleName>& rules) {
    for (;;) {
      auto round = collect(rules);
      std::erase_if(round, [&](RuleInstance& inst) {
        std::erase_if(inst.inserted, [&](const Formula& f) {
          return banned_.count(canonical_key(f)) != 0;
        });
        return inst.inserted.empty();
      });
      if (round.empty()) return;
      order(round);
      for (auto& inst : round) {
        TraceEntry entry;
        entry.rule = inst.rule;
        for (auto& f : inst.inserted) {
          std::string key = canonical_key(f);
          if (banned_.count(key) != 0 || th_.formulas().contains_key(key)) {
            continue;
          }
          th_.insert(f);
          entry.inserted.push_back(std::move(f));
        }
        if (entry.inserted.empty()) continue;
        entry.consumed = std::move(inst.consumed);
        th_.record(std::move(entry));
      }
    }
  }

  // One batch of eliminations matched on the current state. Returns whether
  // anything was removed.
  bool eliminate(const std::vector<RuleName>& rules) {
    auto batch = collect(rules);
    if (batch.empty()) return false;
    order(batch);
    bool any = false;
    for (auto& inst : batch) {
      TraceEntry entry;
      entry.rule = inst.rule;
      for (auto& f : inst.removed) {
        std::string key = canonical_key(f);
        if (!th_.formulas().contains_key(key)) continue;
        th_.erase(f);
        banned_.insert(key);
        removed_.insert(key);
        entry.removed.push_back(std::move(f));
      }
      if (entry.removed.empty()) continue;
      entry.consumed = std::move(inst.consumed);
      th_.record(std::move(entry));
      any = true;
    }
    return any;
  }

  void eliminate_all(const std::vector<RuleName>& rules) {
    while (eliminate(rules)) {
    }
  }

  void discordance(RuleName insert_rule, RuleName eliminate_rule) {
    for (;;) {
      saturate({insert_rule});
      if (!eliminate({eliminate_rule})) return;
    }
  }

  // Returns true when a closure rule fired.
  bool check(const std::vector<RuleName>& rules) {
    auto found = collect(rules);
    if (found.empty()) return false;
    order(found);
    th_.close(found.front().rule, std::move(found.front().consumed));
    return true;
  }

 private:
  std::vector<RuleInstance> collect(const std::vector<RuleName>& rules) {
    std::vector<RuleInstance> out;
    for (RuleName r : rules) {
      auto found = find_instances(r, th_, opt_.delta_removal);
      std::move(found.begin(), found.end(), std::back_inserter(out));
    }
    return out;
  }

  void order(std::vector<RuleInstance>& instances) {
    if (opt_.order) {
      opt_.order(instances);
    } else {
      std::sort(instances.begin(), instances.end(),
                [](const RuleInstance& a, const RuleInstance& b) {
                  return a.key < b.key;
                });
    }
  }

  Theory& th_;
  const EngineOptions& opt_;
  std::set<std::string> banned_;
  std::set<std::string> removed_;
};

template <class F>
Theory single_phase(Theory theory, const EngineOptions& options, F&& body) {
  if (theory.closed()) return theory;
  Runner run(theory, options);
  run.begin_phase();
  body(run);
  return theory;
}

}  // namespace

Theory trans_closure_agents(Theory theory, const EngineOptions& options) {
  return single_phase(std::move(theory), options,
                      [](Runner& r) { r.saturate({RuleName::TransAgent}); });
}

Theory trans_closure_reasonings(Theory theory, const EngineOptions& options) {
  return single_phase(std::move(theory), options, [](Runner& r) {
    r.saturate({RuleName::TransReasoning});
  });
}

Theory check_trust_irreflexivity(Theory theory, const EngineOptions& options) {
  return single_phase(std::move(theory), options, [](Runner& r) {
    r.check({RuleName::XT, RuleName::XpT});
  });
}

Theory apply_T2(Theory theory, const EngineOptions& options) {
  return single_phase(std::move(theory), options,
                      [](Runner& r) { r.saturate({RuleName::T2}); });
}

Theory apply_D1(Theory theory, const EngineOptions& options) {
  return single_phase(std::move(theory), options,
                      [](Runner& r) { r.saturate({RuleName::D1}); });
}

Theory apply_D2(Theory theory, const EngineOptions& options) {
  return single_phase(std::move(theory), options,
                      [](Runner& r) { r.eliminate_all({RuleName::D2}); });
}

Theory check_XC(Theory theory, const EngineOptions& options) {
  return single_phase(std::move(theory), options,
                      [](Runner& r) { r.check({RuleName::XC}); });
}

Theory apply_T1(Theory theory, const EngineOptions& options) {
  return single_phase(std::move(theory), options,
                      [](Runner& r) { r.saturate({RuleName::T1}); });
}

Theory apply_arrow(Theory theory, const EngineOptions& options) {
  return single_phase(std::move(theory), options,
                      [](Runner& r) { r.saturate({RuleName::Arrow}); });
}

Theory apply_arrow_prime(Theory theory, const EngineOptions& options) {
  return single_phase(std::move(theory), options,
                      [](Runner& r) { r.saturate({RuleName::ArrowP}); });
}

Theory apply_D1_reasoning(Theory theory, Stage stage,
                          const EngineOptions& options) {
  RuleName rule = stage == Stage::Singleton ? RuleName::D1p : RuleName::D1pp;
  return single_phase(std::move(theory), options,
                      [rule](Runner& r) { r.saturate({rule}); });
}

Theory apply_D2_reasoning(Theory theory, Stage stage,
                          const EngineOptions& options) {
  RuleName rule = stage == Stage::Singleton ? RuleName::D2p : RuleName::D2pp;
  return single_phase(std::move(theory), options,
                      [rule](Runner& r) { r.eliminate_all({rule}); });
}

Theory check_XpC(Theory theory, const EngineOptions& options) {
  return single_phase(std::move(theory), options,
                      [](Runner& r) { r.check({RuleName::XpC}); });
}

Theory apply_T1_prime(Theory theory, const EngineOptions& options) {
  return single_phase(std::move(theory), options,
                      [](Runner& r) { r.saturate({RuleName::T1p}); });
}

Theory check_XP(Theory theory, const EngineOptions& options) {
  return single_phase(std::move(theory), options,
                      [](Runner& r) { r.check({RuleName::XP}); });
}

RunResult run_procedure(Theory theory, const EngineOptions& options) {
  Runner run(theory, options);
  for (Phase phase : all_phases()) {
    if (theory.closed()) break;
    run.begin_phase();
    const auto& rules = phase_rules(phase);
    switch (phase) {
      case Phase::TrustCheck:
      case Phase::XC:
      case Phase::XpC:
      case Phase::XP:
        run.check(rules);
        break;
      case Phase::D:
      case Phase::DSingleton:
      case Phase::DGeneral:
        run.discordance(rules[0], rules[1]);
        break;
      default:
        run.saturate(rules);
        break;
    }
    run.end_phase(phase);
  }

  if (theory.closed()) {
    TraceEntry witness = theory.trace().back();
    return RunResult{Closed{std::move(witness)}, std::move(theory)};
  }
  theory.mark_exhausted();
  Model model = extract_model(theory);
  return RunResult{Open{std::move(model)}, std::move(theory)};
}

Model extract_model(const Theory& theory) {
  if (theory.closed()) throw ModelError("a closed theory has no model");
  if (!theory.exhausted()) {
    throw ModelError("the theory has not been rewritten to a fixpoint");
  }
  return Model{theory.formulas().of<TemporalFact>()};
}

std::vector<std::pair<RuleName, std::size_t>> rule_stats(const Theory& theory) {
  std::map<RuleName, std::size_t> counts;
  for (const auto& e : theory.trace()) ++counts[e.rule];
  std::vector<std::pair<RuleName, std::size_t>> out;
  for (RuleName r : all_rules()) {
    auto it = counts.find(r);
    if (it != counts.end()) out.emplace_back(r, it->second);
  }
  return out;
}

}  // namespace evlogic
