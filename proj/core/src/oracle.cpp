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

#include "evlogic/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "evlogic/parser.hpp"

namespace evlogic {

// ---- generation -----------------------------------------------------------

void GenConfig::validate() const {
  auto check = [](std::size_t value, std::size_t cap, const char* name) {
    if (value == 0 || value > cap) {
      throw std::invalid_argument(std::string(name) + " must be in [1, " +
                                  std::to_string(cap) + "], got " +
                                  std::to_string(value));
    }
  };
  check(agent_count, kMaxAgents, "agent_count");
  check(time_count, kMaxTimes, "time_count");
  check(simple_var_count, kMaxSimpleVars, "simple_var_count");
  check(derived_var_count, kMaxDerivedVars, "derived_var_count");
  check(reasoning_count, kMaxReasonings, "reasoning_count");
  if (!(conflict_bias >= 0.0 && conflict_bias <= 1.0)) {
    throw std::invalid_argument("conflict_bias must be in [0, 1]");
  }
}

namespace {

std::string name(char prefix, std::size_t i) {
  return std::string(1, prefix) + std::to_string(i);
}

class Generator {
 public:
  explicit Generator(const GenConfig& c) : c_(c), rng_(c.seed), b_("<generated>") {}

  TheoryBuilder& builder() { return b_; }

  void populate() {
    for (std::size_t i = 0; i < c_.agent_count; ++i) {
      b_.declare_agent(name('a', i), span());
    }
    for (std::size_t i = 0; i < c_.time_count; ++i) {
      b_.declare_time(name('t', i), span());
    }
    for (std::size_t i = 0; i < c_.simple_var_count; ++i) {
      simple_.push_back(Plan{pick(c_.time_count), coin(0.5)});
    }
    for (std::size_t i = 0; i < c_.derived_var_count; ++i) {
      derived_.push_back(Plan{pick(c_.time_count), coin(0.5)});
    }
    reasonings();
    simple_evidence();
    agent_trust();
    reasoning_trust();
  }

 private:
  struct Plan {
    std::size_t time;
    bool positive;
  };

  struct Head {
    std::size_t var;
    std::size_t time;
    bool positive;
  };

  static SourceSpan span() { return SourceSpan{"<generated>", 1, 1}; }

  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  bool coin(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
  }

  // (time, positive) for one assertion about a variable.
  Plan assertion_plan(const Plan& canonical) {
    if (coin(c_.conflict_bias)) return Plan{pick(c_.time_count), coin(0.5)};
    return canonical;
  }

  TheoryBuilder::RawAssertion simple_assertion(std::size_t agent,
                                               std::size_t var) {
    Plan p = assertion_plan(simple_[var]);
    return TheoryBuilder::RawAssertion{name('a', agent), name('t', p.time),
                                       {name('s', var), p.positive}, span()};
  }

  void reasonings() {
    std::vector<std::size_t> head_vars;
    for (std::size_t i = 0; i < c_.reasoning_count; ++i) {
      head_vars.push_back(pick(c_.derived_var_count));
    }
    std::sort(head_vars.begin(), head_vars.end());

    std::vector<Head> heads;
    for (std::size_t i = 0; i < c_.reasoning_count; ++i) {
      Head head;
      if (i > 0 && coin(c_.conflict_bias)) {
        // Contradict an earlier conclusion at the same instant.
        const Head& other = heads[pick(i)];
        head = Head{other.var, other.time, !other.positive};
      } else {
        Plan hp = assertion_plan(derived_[head_vars[i]]);
        head = Head{head_vars[i], hp.time, hp.positive};
      }

      std::vector<std::size_t> earlier;
      for (std::size_t j = 0; j < i; ++j) {
        if (heads[j].var < head.var) earlier.push_back(j);
      }
      std::vector<TheoryBuilder::RawAssertion> premises;
      std::size_t n = 1 + pick(3);
      for (std::size_t k = 0; k < n; ++k) {
        if (!earlier.empty() && coin(0.5)) {
          const Head& h = heads[earlier[pick(earlier.size())]];
          premises.push_back({name('a', pick(c_.agent_count)),
                              name('t', h.time),
                              {name('d', h.var), h.positive},
                              span()});
        } else {
          premises.push_back(
              simple_assertion(pick(c_.agent_count), pick(c_.simple_var_count)));
        }
      }

      std::vector<std::size_t> agents(c_.agent_count);
      for (std::size_t a = 0; a < agents.size(); ++a) agents[a] = a;
      std::shuffle(agents.begin(), agents.end(), rng_);
      std::size_t speakers = 1 + pick(std::min<std::size_t>(2, c_.agent_count));
      for (std::size_t s = 0; s < speakers; ++s) {
        b_.add_derived({name('a', agents[s]), name('t', head.time),
                        {name('d', head.var), head.positive}, span()},
                       name('r', i), premises, span());
      }
      heads.push_back(head);
    }
  }

  void simple_evidence() {
    std::size_t n = 1 + pick(2 * c_.simple_var_count);
    for (std::size_t i = 0; i < n; ++i) {
      b_.add_simple(
          simple_assertion(pick(c_.agent_count), pick(c_.simple_var_count)));
    }
    if (c_.time_count >= 2 && coin(c_.conflict_bias)) {
      std::size_t var = pick(c_.simple_var_count);
      std::size_t a1 = pick(c_.agent_count);
      std::size_t a2 = c_.agent_count >= 2
                           ? (a1 + 1 + pick(c_.agent_count - 1)) % c_.agent_count
                           : a1;
      std::size_t t1 = pick(c_.time_count);
      std::size_t t2 = (t1 + 1 + pick(c_.time_count - 1)) % c_.time_count;
      bool positive = coin(0.5);
      b_.add_simple({name('a', a1), name('t', t1), {name('s', var), positive},
                     span()});
      b_.add_simple({name('a', a2), name('t', t2), {name('s', var), positive},
                     span()});
    }
  }

  // Edges that agree with a random ranking, plus the odd reversed edge.
  std::vector<std::pair<std::size_t, std::size_t>> ranked_edges(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (n < 2) return out;
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[i] = i;
    std::shuffle(rank.begin(), rank.end(), rng_);
    std::size_t edges = 1 + pick(n - 1);
    for (std::size_t e = 0; e < edges; ++e) {
      std::size_t i = pick(n - 1);
      std::size_t j = i + 1 + pick(n - 1 - i);
      out.emplace_back(rank[i], rank[j]);
    }
    if (coin(0.15 * c_.conflict_bias)) {
      std::size_t i = pick(n - 1);
      std::size_t j = i + 1 + pick(n - 1 - i);
      out.emplace_back(rank[j], rank[i]);
    }
    return out;
  }

  void agent_trust() {
    for (std::size_t v = 0; v < c_.simple_var_count; ++v) {
      if (!coin(0.5)) continue;
      for (auto [less, more] : ranked_edges(c_.agent_count)) {
        b_.add_agent_trust(name('s', v), name('a', less), name('a', more),
                           span());
      }
    }
  }

  void reasoning_trust() {
    for (auto [less, more] : ranked_edges(c_.reasoning_count)) {
      b_.add_reasoning_trust(name('r', less), name('r', more), span());
    }
  }

  const GenConfig& c_;
  std::mt19937_64 rng_;
  TheoryBuilder b_;
  std::vector<Plan> simple_;
  std::vector<Plan> derived_;
};

Theory finish(TheoryBuilder&& builder) {
  ParseResult result = std::move(builder).finish();
  if (!result) {
    std::string msg = "generated theory is invalid:";
    for (const auto& e : result.errors()) msg += "\n  " + to_string(e);
    throw std::logic_error(msg);
  }
  return std::move(result).theory();
}

}  // namespace

Theory generate_theory(const GenConfig& config) {
  config.validate();
  Generator gen(config);
  gen.populate();
  return finish(std::move(gen.builder()));
}

Theory generate_closure_theory(RuleName rule, const GenConfig& config) {
  if (!is_closure_rule(rule)) {
    throw std::invalid_argument(std::string(to_string(rule)) +
                                " is not a closure rule");
  }
  GenConfig base = config;
  base.conflict_bias = 0.0;
  base.validate();
  if (rule == RuleName::XC && base.time_count < 2) {
    throw std::invalid_argument("XC needs two instants");
  }
  if (rule == RuleName::XpC && base.time_count < 3) {
    throw std::invalid_argument("X'C needs three instants");
  }

  Generator gen(base);
  gen.populate();
  TheoryBuilder& b = gen.builder();
  const SourceSpan at{"<generated>", 1, 1};
  const std::string last_agent = name('a', base.agent_count - 1);

  switch (rule) {
    case RuleName::XC:
      b.add_simple({"a0", "t0", {"xc", true}, at});
      b.add_simple({"a0", "t1", {"xc", true}, at});
      break;
    case RuleName::XpC:
      for (std::size_t i = 0; i < 3; ++i) {
        b.add_derived({"a0", name('t', i), {"xd", true}, at}, name('x', i),
                      {{"a0", name('t', i), {"xq" + std::to_string(i), true}, at}},
                      at);
      }
      break;
    case RuleName::XT:
      b.add_agent_trust("xt", "a0", "a0", at);
      break;
    case RuleName::XpT:
      b.add_reasoning_trust("rx", "rx", at);
      break;
    case RuleName::XP:
      b.add_simple({"a0", "t0", {"xp", true}, at});
      b.add_simple({last_agent, "t0", {"xp", false}, at});
      break;
    default:
      break;
  }
  return finish(std::move(b));
}

Theory generate_cascade_theory(const GenConfig& config) {
  GenConfig base = config;
  base.conflict_bias = 0.0;
  base.validate();
  Generator gen(base);
  gen.populate();
  TheoryBuilder& b = gen.builder();
  const SourceSpan at{"<generated>", 1, 1};
  const std::string other = name('a', base.agent_count - 1);

  b.add_derived({"a0", "t0", {"y0", true}, at}, "x0",
                {{"a0", "t0", {"ys0", true}, at}}, at);
  b.add_derived({"a0", "t0", {"y1", true}, at}, "x1",
                {{"a0", "t0", {"y0", true}, at}}, at);
  b.add_derived({other, "t0", {"y1", false}, at}, "x3",
                {{other, "t0", {"ys1", true}, at}}, at);
  b.add_derived({"a0", "t0", {"y2", true}, at}, "x2",
                {{"a0", "t0", {"y1", true}, at}}, at);
  b.add_reasoning_trust("x1", "x3", at);
  return finish(std::move(b));
}

// ---- randomized order -----------------------------------------------------

OrderPolicy random_order(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](std::vector<RuleInstance>& instances) {
    std::shuffle(instances.begin(), instances.end(), *rng);
  };
}

RunResult run_randomized(Theory theory, std::uint64_t seed,
                         EngineOptions options) {
  options.order = random_order(seed);
  return run_procedure(std::move(theory), options);
}

// ---- reports --------------------------------------------------------------

void Report::add(std::string condition, std::string detail) {
  violations.push_back(Violation{std::move(condition), std::move(detail)});
}

void Report::merge(const Report& other) {
  violations.insert(violations.end(), other.violations.begin(),
                    other.violations.end());
}

std::string Report::to_string() const {
  std::string out;
  for (const auto& v : violations) {
    out += "[" + v.condition + "] " + v.detail + "\n";
  }
  return out;
}

namespace {

std::string str(const Formula& f) { return to_string(f); }

template <class T>
std::string str(const T& f) {
  return to_string(Formula{f});
}

// Per-key transitive closure of a relation given as (key, less, more).
template <class Key, class Node>
std::map<Key, std::set<std::pair<Node, Node>>> transitive_closure(
    std::map<Key, std::set<std::pair<Node, Node>>> rel) {
  for (auto& [key, edges] : rel) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::pair<Node, Node>> add;
      for (const auto& [a, b] : edges) {
        for (const auto& [c, d] : edges) {
          if (b == c && edges.count({a, d}) == 0) add.emplace_back(a, d);
        }
      }
      for (auto& e : add) grew |= edges.insert(e).second;
    }
  }
  return rel;
}

}  // namespace

Report check_model_conditions(const Theory& before, const RunResult& result) {
  Report report;
  const Theory& th = result.theory;

  if (!is_open(result.verdict)) {
    if (!th.closed()) report.add("closed-verdict", "theory not marked closed");
    if (!th.formulas().empty()) {
      report.add("closed-empty", std::to_string(th.formulas().size()) +
                                     " formulas remain after closure");
    }
    return report;
  }
  if (th.closed()) report.add("open-verdict", "theory is marked closed");
  if (!th.exhausted()) report.add("exhausted", "theory not marked exhausted");

  // One instant per (agent, literal).
  std::map<std::pair<std::string, std::string>, std::set<std::string>> said;
  for (const auto& e : th.formulas().of<SimpleEvidence>()) {
    said[{e.agent.name, to_string(e.lit)}].insert(e.time.name);
  }
  for (const auto& [who, times] : said) {
    if (times.size() > 1) {
      report.add("agent-consistency",
                 who.first + " asserts " + who.second + " at " +
                     std::to_string(times.size()) + " instants");
    }
  }

  // One instant per (head reasoning, literal).
  std::map<std::pair<std::string, std::string>, std::set<std::string>> concl;
  for (const auto& f : th.formulas().of<ReasoningFact>()) {
    concl[{f.head().name, to_string(f.lit)}].insert(f.time.name);
  }
  for (const auto& [who, times] : concl) {
    if (times.size() > 1) {
      report.add("reasoning-consistency",
                 who.first + " concludes " + who.second + " at " +
                     std::to_string(times.size()) + " instants");
    }
  }

  // Trust relations of the input, closed, must be irreflexive.
  std::map<std::string, std::set<std::pair<std::string, std::string>>> agents;
  for (const auto& t : before.formulas().of<AgentTrust>()) {
    agents[t.subject.name].insert({t.less.name, t.more.name});
  }
  for (const auto& [subject, edges] : transitive_closure(agents)) {
    for (const auto& [a, b] : edges) {
      if (a == b) report.add("agent-trust-irreflexive", a + " about " + subject);
    }
  }
  std::map<int, std::set<std::pair<std::string, std::string>>> reasons;
  for (const auto& t : before.formulas().of<ReasoningTrust>()) {
    reasons[0].insert({t.less.name, t.more.name});
  }
  const auto closed_reasons = transitive_closure(reasons);
  for (const auto& [k, edges] : closed_reasons) {
    for (const auto& [a, b] : edges) {
      if (a == b) report.add("reasoning-trust-irreflexive", a);
    }
  }

  // The output relations are the closure of the input ones.
  std::set<std::pair<std::string, std::string>> out_reasons;
  for (const auto& t : th.formulas().of<ReasoningTrust>()) {
    out_reasons.insert({t.less.name, t.more.name});
  }
  auto expected = closed_reasons.count(0) ? closed_reasons.at(0)
                                          : std::set<std::pair<std::string, std::string>>{};
  if (out_reasons != expected) {
    report.add("reasoning-trust-closed",
               "output relation has " + std::to_string(out_reasons.size()) +
                   " pairs, closure has " + std::to_string(expected.size()));
  }
  std::map<std::string, std::set<std::pair<std::string, std::string>>> out_agents;
  for (const auto& t : th.formulas().of<AgentTrust>()) {
    out_agents[t.subject.name].insert({t.less.name, t.more.name});
  }
  if (out_agents != transitive_closure(agents)) {
    report.add("agent-trust-closed", "output relation is not the closure");
  }

  // No t:p together with t:~p.
  for (const auto& f : th.formulas().of<TemporalFact>()) {
    if (f.lit.positive && th.contains(TemporalFact{f.time, negate(f.lit)})) {
      report.add("factual-consistency", str(f) + " and its negation");
    }
  }

  // The model is exactly the temporal facts.
  const auto& model = std::get<Open>(result.verdict).model;
  std::set<std::string> in_model;
  for (const auto& f : model.facts) in_model.insert(canonical_key(Formula{f}));
  std::set<std::string> in_theory;
  for (const auto& f : th.formulas().of<TemporalFact>()) {
    in_theory.insert(canonical_key(Formula{f}));
  }
  if (in_model != in_theory) {
    report.add("model", "model differs from the theory's temporal facts");
  }
  return report;
}

Report check_trace(const Theory& before, const Theory& after) {
  Report report;
  FormulaSet replay = before.formulas();
  std::size_t last_step = 0;
  bool closed = false;
  std::set<std::string> defeated;
  // An elimination batch is matched before any of it fires, so its entries
  // may cite formulas an earlier entry of the same batch removed.
  FormulaSet batch_removed;

  for (const auto& e : after.trace()) {
    std::string where = "step " + std::to_string(e.step) + " (" +
                        std::string(to_string(e.rule)) + ")";
    if (e.step <= last_step) report.add("trace-steps", where + " not increasing");
    last_step = e.step;
    if (closed) report.add("trace-after-closure", where);

    if (is_closure_rule(e.rule)) {
      FormulaSet removed;
      for (const auto& f : e.removed) removed.insert(f);
      if (!(removed == replay)) {
        report.add("trace-closure", where + " does not remove every formula");
      }
      if (!e.inserted.empty()) report.add("trace-closure", where + " inserts");
      replay.clear();
      closed = true;
      continue;
    }

    if (e.inserted.empty() == e.removed.empty()) {
      report.add("trace-shape", where + " must either insert or remove");
    }
    if (!e.inserted.empty()) batch_removed.clear();
    for (const auto& f : e.consumed) {
      if (!replay.contains(f) && !batch_removed.contains(f)) {
        report.add("trace-consumed", where + " uses absent " + str(f));
      }
    }
    for (const auto& f : e.inserted) {
      if (!replay.insert(f)) {
        report.add("trace-insert", where + " re-inserts " + str(f));
      }
    }
    for (const auto& f : e.removed) {
      if (!replay.erase(f)) {
        report.add("trace-remove", where + " removes absent " + str(f));
      }
      batch_removed.insert(f);
    }
    if (e.rule == RuleName::D2pp && e.consumed.size() == 3) {
      if (const auto* lose = std::get_if<ReasoningFact>(&e.consumed[2])) {
        defeated.insert(lose->head().name);
      }
    }
  }

  if (closed != after.closed()) {
    report.add("trace-verdict", "closure entries disagree with the verdict");
  }
  if (!(replay == after.formulas())) {
    report.add("trace-replay", "replayed set differs from the final set");
  }
  if (!after.closed()) {
    for (const auto& f : after.formulas().of<ReasoningFact>()) {
      for (const auto& r : f.reasonings) {
        if (defeated.count(r.name) != 0) {
          report.add("defeated-reasoning",
                     str(f) + " survives although " + r.name + " was defeated");
        }
      }
    }
  }
  return report;
}

// ---- exhaustion -----------------------------------------------------------

ObservedRun run_observed(Theory theory, EngineOptions options) {
  auto phases = std::make_shared<std::vector<PhaseSnapshot>>();
  options.observer = [phases](Phase p, const Theory& th,
                              const std::set<std::string>& removed) {
    phases->push_back(PhaseSnapshot{p, th, removed});
  };
  RunResult result = run_procedure(std::move(theory), options);
  return ObservedRun{std::move(result), std::move(*phases)};
}

namespace {

// Brute-force matchers, written against the rule definitions rather than
// the engine's indexing.
class Scan {
 public:
  Scan(const Theory& th, const std::set<std::string>& banned)
      : th_(th), banned_(banned) {}

  std::optional<std::string> operator()(RuleName rule) const {
    const auto& fs = th_.formulas();
    const auto se = fs.of<SimpleEvidence>();
    const auto rf = fs.of<ReasoningFact>();
    const auto tf = fs.of<TemporalFact>();
    const auto at = fs.of<AgentTrust>();
    const auto rt = fs.of<ReasoningTrust>();

    switch (rule) {
      case RuleName::TransAgent:
        for (const auto& x : at) {
          for (const auto& y : at) {
            if (x.more == y.less && x.subject == y.subject &&
                missing(AgentTrust{x.less, y.more, x.subject})) {
              return str(x) + " ; " + str(y);
            }
          }
        }
        break;
      case RuleName::TransReasoning:
        for (const auto& x : rt) {
          for (const auto& y : rt) {
            if (x.more == y.less && missing(ReasoningTrust{x.less, y.more})) {
              return str(x) + " ; " + str(y);
            }
          }
        }
        break;
      case RuleName::XT:
        for (const auto& x : at) {
          if (x.less == x.more) return str(x);
        }
        break;
      case RuleName::XpT:
        for (const auto& x : rt) {
          if (x.less == x.more) return str(x);
        }
        break;
      case RuleName::T2:
        for (const auto& d : fs.of<DerivedEvidence>()) {
          Implication imp;
          imp.reasoning = d.reasoning;
          imp.head = TimedLiteral{d.time, d.lit};
          for (const auto& p : d.premises) {
            imp.premises.push_back(TimedLiteral{p.time, p.lit});
            if (p.lit.var.kind == VarKind::Simple &&
                missing(SimpleEvidence{p.agent, p.time, p.lit})) {
              return str(d);
            }
          }
          if (missing(imp)) return str(d);
        }
        break;
      case RuleName::D1:
        for (const auto& x : se) {
          for (const auto& y : se) {
            if (x.lit == y.lit && !(x.time == y.time) &&
                (missing(SimpleEvidence{x.agent, y.time, negate(x.lit)}) ||
                 missing(SimpleEvidence{y.agent, x.time, negate(y.lit)}))) {
              return str(x) + " ; " + str(y);
            }
          }
        }
        break;
      case RuleName::D2:
        for (const auto& t : at) {
          for (const auto& x : se) {
            for (const auto& y : se) {
              if (x.agent == t.more && y.agent == t.less &&
                  x.lit.var == t.subject && x.time == y.time &&
                  y.lit == negate(x.lit)) {
                return str(t) + " ; " + str(x) + " ; " + str(y);
              }
            }
          }
        }
        break;
      case RuleName::XC:
        for (const auto& x : se) {
          for (const auto& y : se) {
            if (x.agent == y.agent && x.lit == y.lit && !(x.time == y.time)) {
              return str(x) + " ; " + str(y);
            }
          }
        }
        break;
      case RuleName::T1:
        for (const auto& x : se) {
          if (missing(TemporalFact{x.time, x.lit})) return str(x);
        }
        break;
      case RuleName::Arrow:
        for (const auto& imp : fs.of<Implication>()) {
          bool all = std::all_of(
              imp.premises.begin(), imp.premises.end(), [&](const auto& p) {
                return th_.contains(TemporalFact{p.time, p.lit});
              });
          if (all && missing(ReasoningFact{imp.head.time, imp.head.lit,
                                           {imp.reasoning}})) {
            return str(imp);
          }
        }
        break;
      case RuleName::ArrowP:
        for (const auto& imp : fs.of<Implication>()) {
          std::vector<ReasoningId> subscript{imp.reasoning};
          if (arrow_prime(imp, rf, 0, false, subscript)) return str(imp);
        }
        break;
      case RuleName::D1p:
      case RuleName::D1pp:
        for (const auto& x : rf) {
          for (const auto& y : rf) {
            if (rule == RuleName::D1p &&
                (x.reasonings.size() != 1 || y.reasonings.size() != 1)) {
              continue;
            }
            if (x.lit == y.lit && !(x.time == y.time) &&
                (missing(ReasoningFact{y.time, negate(x.lit), x.reasonings}) ||
                 missing(ReasoningFact{x.time, negate(y.lit), y.reasonings}))) {
              return str(x) + " ; " + str(y);
            }
          }
        }
        break;
      case RuleName::D2p:
      case RuleName::D2pp:
        for (const auto& t : rt) {
          for (const auto& x : rf) {
            for (const auto& y : rf) {
              if (rule == RuleName::D2p &&
                  (x.reasonings.size() != 1 || y.reasonings.size() != 1)) {
                continue;
              }
              if (x.reasonings[0] == t.more && y.reasonings[0] == t.less &&
                  x.time == y.time && y.lit == negate(x.lit)) {
                return str(t) + " ; " + str(x) + " ; " + str(y);
              }
            }
          }
        }
        break;
      case RuleName::XpC:
        for (const auto& x : rf) {
          for (const auto& y : rf) {
            if (x.reasonings[0] == y.reasonings[0] && x.lit == y.lit &&
                !(x.time == y.time)) {
              return str(x) + " ; " + str(y);
            }
          }
        }
        break;
      case RuleName::T1p:
        for (const auto& x : rf) {
          if (missing(TemporalFact{x.time, x.lit})) return str(x);
        }
        break;
      case RuleName::XP:
        for (const auto& x : tf) {
          for (const auto& y : tf) {
            if (x.time == y.time && y.lit == negate(x.lit)) {
              return str(x) + " ; " + str(y);
            }
          }
        }
        break;
    }
    return std::nullopt;
  }

 private:
  bool missing(const Formula& f) const {
    std::string key = canonical_key(f);
    return !th_.formulas().contains_key(key) && banned_.count(key) == 0;
  }

  // Tries every way of meeting premises i.. of `imp`.
  bool arrow_prime(const Implication& imp, const std::vector<ReasoningFact>& rf,
                   std::size_t i, bool used_reasoning,
                   std::vector<ReasoningId>& subscript) const {
    if (i == imp.premises.size()) {
      return used_reasoning &&
             missing(ReasoningFact{imp.head.time, imp.head.lit, subscript});
    }
    const auto& p = imp.premises[i];
    if (th_.contains(TemporalFact{p.time, p.lit}) &&
        arrow_prime(imp, rf, i + 1, used_reasoning, subscript)) {
      return true;
    }
    for (const auto& f : rf) {
      if (!(f.time == p.time) || f.lit != p.lit) continue;
      std::size_t mark = subscript.size();
      for (const auto& r : f.reasonings) {
        if (std::find(subscript.begin(), subscript.end(), r) == subscript.end()) {
          subscript.push_back(r);
        }
      }
      bool found = arrow_prime(imp, rf, i + 1, true, subscript);
      subscript.resize(mark);
      if (found) return true;
    }
    return false;
  }

  const Theory& th_;
  const std::set<std::string>& banned_;
};

const std::vector<std::pair<Phase, std::vector<RuleName>>>& oracle_phases() {
  using R = RuleName;
  static const std::vector<std::pair<Phase, std::vector<RuleName>>> phases{
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
  return phases;
}

}  // namespace

Report check_exhaustion(const ObservedRun& run) {
  Report report;
  if (!is_open(run.result.verdict)) return report;

  const auto& phases = oracle_phases();
  if (run.phases.size() != phases.size()) {
    report.add("exhaustion", "observed " + std::to_string(run.phases.size()) +
                                 " phases, expected " +
                                 std::to_string(phases.size()));
    return report;
  }
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const auto& snap = run.phases[i];
    if (snap.phase != phases[i].first) {
      report.add("exhaustion", "phase " + std::string(to_string(snap.phase)) +
                                   " out of order");
      continue;
    }
    Scan scan(snap.theory, snap.removed);
    for (RuleName rule : phases[i].second) {
      if (auto hit = scan(rule)) {
        report.add("exhaustion", std::string(to_string(rule)) +
                                     " still applies after phase " +
                                     std::string(to_string(snap.phase)) +
                                     ": " + *hit);
      }
    }
  }

  const std::set<std::string> none;
  Scan final_scan(run.result.theory, none);
  using R = RuleName;
  for (RuleName rule : {R::TransAgent, R::TransReasoning, R::XT, R::XpT, R::D2,
                        R::XC, R::D2p, R::D2pp, R::XpC, R::XP}) {
    if (auto hit = final_scan(rule)) {
      report.add("exhaustion", std::string(to_string(rule)) +
                                   " applies to the final theory: " + *hit);
    }
  }
  return report;
}

// ---- whole-theory check ---------------------------------------------------

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

CheckOutcome check_theory(const Theory& theory, const CheckOptions& options) {
  CheckOutcome out;

  ParseResult parsed = parse_theory(render_theory(theory), "<rendered>");
  if (!parsed) {
    std::string errs;
    for (const auto& e : parsed.errors()) errs += to_string(e) + "; ";
    out.report.add("round-trip", "rendered text does not parse: " + errs);
  } else if (!(parsed.theory() == theory)) {
    out.report.add("round-trip", "rendered text parses to a different theory");
  }

  EngineOptions engine;
  engine.delta_removal = options.delta_removal;
  ObservedRun observed = run_observed(theory, engine);
  const RunResult& det = observed.result;
  out.sat = is_open(det.verdict);
  out.report.merge(check_model_conditions(theory, det));
  out.report.merge(check_trace(theory, det.theory));
  out.report.merge(check_exhaustion(observed));

  for (std::size_t k = 0; k < options.orders; ++k) {
    std::uint64_t seed = mix(options.order_seed * 31 + k);
    RunResult rnd = run_randomized(theory, seed, engine);
    if (is_open(rnd.verdict) != out.sat) {
      out.report.add("order-invariance",
                     "order seed " + std::to_string(seed) +
                         " changes the verdict");
    } else if (!(rnd.theory.formulas() == det.theory.formulas())) {
      out.report.add("order-invariance",
                     "order seed " + std::to_string(seed) +
                         " changes the final formula set");
    }
    out.report.merge(check_model_conditions(theory, rnd));
  }
  return out;
}

// ---- golden files ---------------------------------------------------------

namespace {

Report check_model_exact(const RunResult& result,
                         const std::set<std::string>& expected) {
  Report report;
  const auto* open = std::get_if<Open>(&result.verdict);
  if (open == nullptr) {
    report.add("golden-verdict", "expected sat, got unsat");
    return report;
  }
  std::set<std::string> got;
  for (const auto& f : open->model.facts) got.insert(str(f));
  for (const auto& e : expected) {
    if (got.count(e) == 0) report.add("golden-model", "missing " + e);
  }
  for (const auto& g : got) {
    if (expected.count(g) == 0) report.add("golden-model", "unexpected " + g);
  }
  return report;
}

// Index of the first entry of `rule` that removes `formula`, or npos.
std::size_t find_removal(const Theory& th, RuleName rule,
                         const std::string& formula, std::size_t from = 0) {
  const auto& trace = th.trace();
  for (std::size_t i = from; i < trace.size(); ++i) {
    if (trace[i].rule != rule) continue;
    for (const auto& f : trace[i].removed) {
      if (str(f) == formula) return i;
    }
  }
  return std::string::npos;
}

}  // namespace

Report check_golden_dnc(const RunResult& result) {
  Report report = check_model_exact(
      result, {"t1:Attack", "t1:SucPhish", "t1:SpPhish", "t1:LinkCl",
               "t1:FFill", "t1:DStolen", "t2:MetaC", "t2:SpeedTr(23MB/s)"});
  if (find_removal(result.theory, RuleName::D2, "TF@t2:~SpeedTr(23MB/s)") ==
      std::string::npos) {
    report.add("golden-trace", "no D2 removal of TF@t2:~SpeedTr(23MB/s)");
  }
  return report;
}

Report check_golden_attribution(const RunResult& result) {
  Report report = check_model_exact(
      result,
      {"t:sIP(Attack,IP)", "t:Geoloc(IP,C)", "t:~Fin(C,Attack)",
       "t:Spoofed(IP)", "t1:Admit(C,Attack')", "t:Sim(Attack,Attack')",
       "t:EConf(C,Victim)", "t:Cap(C,Attack)", "t:Motive(C,Attack)",
       "t:Culprit(C,Attack)"});
  const Theory& th = result.theory;

  std::set<std::string> trans;
  std::size_t last_trans = 0;
  for (std::size_t i = 0; i < th.trace().size(); ++i) {
    const auto& e = th.trace()[i];
    if (e.rule != RuleName::TransReasoning) continue;
    for (const auto& f : e.inserted) trans.insert(str(f));
    last_trans = i;
  }
  if (trans != std::set<std::string>{"r1 < r2", "r1 < r3", "r4 < r3"}) {
    report.add("golden-trace", "Trans< insertions differ");
  }
  std::size_t sim = find_removal(th, RuleName::D2, "S5@t:~Sim(Attack,Attack')");
  std::size_t first = find_removal(th, RuleName::D2pp,
                                   "(t:Culprit(C,Attack))_{r1,r5}");
  std::size_t second = find_removal(th, RuleName::D2pp,
                                    "(t:~Culprit(C,Attack))_{r4}");
  if (sim == std::string::npos || first == std::string::npos ||
      second == std::string::npos) {
    report.add("golden-trace", "an expected removal is missing");
  } else if (!(last_trans < sim && sim < first && first < second)) {
    report.add("golden-trace", "expected removals are out of order");
  }
  return report;
}

// ---- fuzzing --------------------------------------------------------------

std::string minimize(const std::string& text,
                     const std::function<bool(const Theory&)>& still_fails) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);

  auto is_statement = [](const std::string& line) {
    return line.rfind("evidence ", 0) == 0 || line.rfind("trust(", 0) == 0 ||
           line.rfind("rtrust:", 0) == 0;
  };
  auto join = [](const std::vector<std::string>& ls) {
    std::string out;
    for (const auto& l : ls) out += l + "\n";
    return out;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (!is_statement(lines[i])) continue;
      std::vector<std::string> candidate = lines;
      candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
      ParseResult parsed = parse_theory(join(candidate), "<minimize>");
      if (parsed && still_fails(parsed.theory())) {
        lines = std::move(candidate);
        changed = true;
        --i;
      }
    }
  }
  return join(lines);
}

FuzzSummary fuzz(const FuzzOptions& options) {
  options.config.validate();
  FuzzSummary summary;

  for (std::size_t i = 0; i < options.seeds; ++i) {
    GenConfig config = options.config;
    config.seed = options.config.seed + i;
    Theory theory = generate_theory(config);
    CheckOptions check = options.check;
    check.order_seed = config.seed;
    CheckOutcome outcome = check_theory(theory, check);
    ++summary.seeds_run;
    ++(outcome.sat ? summary.sat : summary.unsat);
    std::string source = "seed " + std::to_string(config.seed);
    if (outcome.report.ok()) {
      source += " (cascade variant)";
      theory = generate_cascade_theory(config);
      outcome = check_theory(theory, check);
      if (outcome.report.ok()) continue;
    }

    const std::string condition = outcome.report.violations.front().condition;
    auto still_fails = [&](const Theory& t) {
      const auto r = check_theory(t, check).report;
      return std::any_of(r.violations.begin(), r.violations.end(),
                         [&](const Violation& v) {
                           return v.condition == condition;
                         });
    };
    summary.failure = FuzzFailure{source, config.seed, outcome.report,
                                  minimize(render_theory(theory), still_fails)};
    return summary;
  }

  if (options.corpus_dir.empty()) return summary;
  using Golden = Report (*)(const RunResult&);
  for (auto [file, golden] : {std::pair<const char*, Golden>{"dnc.el", &check_golden_dnc},
                              {"attribution.el", &check_golden_attribution}}) {
    std::string path = options.corpus_dir + "/" + file;
    std::ifstream in(path, std::ios::binary);
    Report report;
    if (!in) {
      report.add("golden-file", "cannot read " + path);
    } else {
      std::stringstream buf;
      buf << in.rdbuf();
      ParseResult parsed = parse_theory(buf.str(), path);
      if (!parsed) {
        report.add("golden-file", path + " does not parse");
      } else {
        EngineOptions engine;
        engine.delta_removal = options.check.delta_removal;
        RunResult result = run_procedure(parsed.theory(), engine);
        report.merge(golden(result));
        report.merge(check_model_conditions(parsed.theory(), result));
        report.merge(check_trace(parsed.theory(), result.theory));
      }
    }
    ++summary.golden_checked;
    if (!report.ok()) {
      summary.failure = FuzzFailure{path, std::nullopt, report, ""};
      return summary;
    }
  }
  return summary;
}

std::string FuzzSummary::to_string() const {
  std::ostringstream out;
  out << "fuzz: " << seeds_run << " seeds (sat " << sat << ", unsat " << unsat
      << "), " << golden_checked << " golden files: "
      << (ok() ? "ok" : "FAILED") << "\n";
  if (failure) {
    out << "first failure: " << failure->source << "\n" << failure->report.to_string();
    if (!failure->minimized.empty()) {
      out << "minimized theory:\n" << failure->minimized;
    }
  }
  return out.str();
}

}  // namespace evlogic
