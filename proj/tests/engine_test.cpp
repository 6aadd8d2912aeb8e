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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "evlogic/oracle.hpp"
#include "test_support.hpp"

namespace evlogic {
namespace {

using testing::has;
using testing::load_corpus;
using testing::parse_ok;
using testing::rendered;
using testing::rfact;

// End-of-phase snapshots of a full run.
std::map<Phase, Theory> phase_snapshots(const Theory& theory) {
  std::map<Phase, Theory> out;
  EngineOptions opts;
  opts.observer = [&](Phase p, const Theory& now, const std::set<std::string>&) {
    out.insert_or_assign(p, now);
  };
  run_procedure(theory, opts);
  return out;
}

// A theory over instants t, t1, t2 with the given derived vars and
// reasonings, for rules whose premises only the engine can produce.
Theory alphabet(const std::vector<std::string>& derived,
                const std::vector<std::string>& reasonings) {
  Theory t;
  t.add_agent(AgentId{"a"});
  for (const char* name : {"t", "t1", "t2"}) t.add_time(name);
  for (const auto& v : derived) t.add_var(PropVar{v, VarKind::Derived});
  for (const auto& r : reasonings) t.add_reasoning(ReasoningId{r});
  return t;
}

void add_rtrust(Theory& t, const std::string& less, const std::string& more) {
  t.insert(ReasoningTrust{ReasoningId{less}, ReasoningId{more}});
}

std::set<std::string> inserted_by(const Theory& t, RuleName rule) {
  std::set<std::string> out;
  for (const auto& e : t.trace()) {
    if (e.rule != rule) continue;
    for (const auto& f : e.inserted) out.insert(to_string(f));
  }
  return out;
}

TEST(TransAgents, ChainsPerSubject) {
  Theory t = parse_ok(
      "agents a1, a2, a3; times t;\n"
      "evidence a1 @ t : p. evidence a1 @ t : q.\n"
      "trust(p): a1 < a2. trust(p): a2 < a3. trust(q): a1 < a2.\n");
  Theory out = trans_closure_agents(t);
  EXPECT_EQ(inserted_by(out, RuleName::TransAgent),
            (std::set<std::string>{"trust(p): a1 < a3"}));
}

TEST(TransAgents, DifferentSubjectsDoNotChain) {
  Theory t = parse_ok(
      "agents a1, a2, a3; times t;\n"
      "evidence a1 @ t : p. evidence a1 @ t : q.\n"
      "trust(p): a1 < a2. trust(q): a2 < a3.\n");
  EXPECT_EQ(trans_closure_agents(t).formulas(), t.formulas());
}

TEST(TransAgents, AttributionHasNothingToClose) {
  Theory t = load_corpus("attribution.el");
  EXPECT_EQ(trans_closure_agents(t).formulas(), t.formulas());
}

TEST(TransReasonings, AttributionChain) {
  Theory t = alphabet({}, {"r1", "r2", "r3", "r4"});
  add_rtrust(t, "r1", "r4");
  add_rtrust(t, "r4", "r2");
  add_rtrust(t, "r2", "r3");
  Theory out = trans_closure_reasonings(t);
  EXPECT_EQ(inserted_by(out, RuleName::TransReasoning),
            (std::set<std::string>{"r1 < r2", "r1 < r3", "r4 < r3"}));
  EXPECT_EQ(out.formulas().size(), 6u);
}

TEST(TransReasonings, NothingToChain) {
  Theory empty = alphabet({}, {"r1", "r2"});
  EXPECT_TRUE(trans_closure_reasonings(empty).trace().empty());
  Theory one = alphabet({}, {"r1", "r2"});
  add_rtrust(one, "r1", "r2");
  EXPECT_TRUE(trans_closure_reasonings(one).trace().empty());
}

TEST(TrustIrreflexivity, CycleCloses) {
  Theory t = alphabet({}, {"r1", "r2"});
  add_rtrust(t, "r1", "r2");
  add_rtrust(t, "r2", "r1");
  t = trans_closure_reasonings(t);
  EXPECT_TRUE(has(t, "r1 < r1"));
  Theory out = check_trust_irreflexivity(t);
  ASSERT_TRUE(out.closed());
  EXPECT_TRUE(out.formulas().empty());
  EXPECT_EQ(out.trace().back().rule, RuleName::XpT);
}

TEST(TrustIrreflexivity, AgentSelfLoopCloses) {
  Theory t = parse_ok(
      "agents a, b; times t; evidence a @ t : p.\n"
      "trust(p): a < b. trust(p): b < a.\n");
  Theory out = check_trust_irreflexivity(trans_closure_agents(t));
  ASSERT_TRUE(out.closed());
  EXPECT_EQ(out.trace().back().rule, RuleName::XT);
}

TEST(TrustIrreflexivity, AcyclicIsUnchanged) {
  Theory t = parse_ok(
      "agents a, b; times t; evidence a @ t : p. trust(p): a < b.");
  Theory out = check_trust_irreflexivity(t);
  EXPECT_FALSE(out.closed());
  EXPECT_EQ(out, t);

  Theory attribution = trans_closure_reasonings(load_corpus("attribution.el"));
  EXPECT_FALSE(check_trust_irreflexivity(attribution).closed());
}

TEST(T2, SplitsDerivedEvidence) {
  Theory out = apply_T2(load_corpus("dnc.el"));
  EXPECT_TRUE(has(out, "CS@t1:SpPhish"));
  EXPECT_TRUE(has(out, "t1:SpPhish & t1:SucPhish ->r1 t1:Attack"));
  EXPECT_FALSE(has(out, "CS@t1:SucPhish"));
  EXPECT_TRUE(has(out, "TF@t2:~SpeedTr(23MB/s)"));
  // The derived evidence stays.
  EXPECT_EQ(out.formulas().of<DerivedEvidence>().size(), 4u);
}

TEST(T2, AttributionPremiseShapes) {
  Theory out = apply_T2(load_corpus("attribution.el"));
  for (const auto& e : out.trace()) {
    ASSERT_EQ(e.rule, RuleName::T2);
    ASSERT_EQ(e.consumed.size(), 1u);
    const auto& d = std::get<DerivedEvidence>(e.consumed[0]);
    if (d.agent.name == "A2") {
      ASSERT_EQ(e.inserted.size(), 1u);
      EXPECT_TRUE(std::holds_alternative<Implication>(e.inserted[0]));
    }
  }
  EXPECT_TRUE(has(out, "S1@t:sIP(Attack,IP)"));
  EXPECT_TRUE(has(out, "S1@t:Geoloc(IP,C)"));
  EXPECT_TRUE(has(out, "t:sIP(Attack,IP) & t:Geoloc(IP,C) & t:Cap(C,Attack) ->r1 t:Culprit(C,Attack)"));
}

TEST(D1, CrossTimePair) {
  Theory t = parse_ok(
      "agents a1, a2; times t1, t2;\n"
      "evidence a1 @ t1 : p. evidence a2 @ t2 : p.\n");
  Theory out = apply_D1(t);
  EXPECT_EQ(rendered(out), (std::set<std::string>{
                               "a1@t1:p", "a2@t2:p", "a1@t2:~p", "a2@t1:~p"}));
  // Applying again only re-derives what is present.
  EXPECT_EQ(apply_D1(out).formulas(), out.formulas());
}

TEST(D1, SameInstantIsNotDiscordant) {
  Theory t = parse_ok(
      "agents a1, a2; times t1, t2;\n"
      "evidence a1 @ t1 : p. evidence a2 @ t1 : p.\n");
  EXPECT_EQ(apply_D1(t), t);
}

TEST(D2, TrustedSourceWins) {
  Theory out = apply_D2(apply_T2(load_corpus("dnc.el")));
  EXPECT_FALSE(has(out, "TF@t2:~SpeedTr(23MB/s)"));
  EXPECT_TRUE(has(out, "FE@t2:SpeedTr(23MB/s)"));
  ASSERT_FALSE(out.trace().empty());
  EXPECT_EQ(out.trace().back().rule, RuleName::D2);
}

TEST(D2, NoTrustNoRemoval) {
  Theory t = parse_ok(
      "agents a, b; times t;\n"
      "evidence a @ t : p. evidence b @ t : ~p.\n");
  EXPECT_EQ(apply_D2(t), t);
}

TEST(D2, AttributionSimilarity) {
  Theory out = apply_D2(apply_T2(load_corpus("attribution.el")));
  EXPECT_FALSE(has(out, "S5@t:~Sim(Attack,Attack')"));
  EXPECT_TRUE(has(out, "S1@t:Sim(Attack,Attack')"));
}

TEST(XC, SameAgentTwoInstants) {
  Theory t = parse_ok(
      "agents a; times t1, t2;\n"
      "evidence a @ t1 : p. evidence a @ t2 : p.\n");
  Theory out = check_XC(t);
  ASSERT_TRUE(out.closed());
  EXPECT_TRUE(out.formulas().empty());
  EXPECT_EQ(out.trace().back().rule, RuleName::XC);
}

TEST(XC, OppositeLiteralsDoNotClose) {
  Theory t = parse_ok(
      "agents a; times t1, t2;\n"
      "evidence a @ t1 : p. evidence a @ t2 : ~p.\n");
  EXPECT_FALSE(check_XC(t).closed());
}

TEST(XC, DncAfterDiscordance) {
  auto snaps = phase_snapshots(load_corpus("dnc.el"));
  const Theory& after_d = snaps.at(Phase::D);
  EXPECT_EQ(check_XC(after_d), after_d);
}

TEST(T1, SimpleEvidenceBecomesFact) {
  Theory t = parse_ok(
      "agents TF, FE; times t1, t2; evidence FE @ t2 : SpeedTr(23MB/s).");
  EXPECT_TRUE(has(apply_T1(t), "t2:SpeedTr(23MB/s)"));
}

TEST(T1, NoSimpleEvidence) {
  Theory t = parse_ok("agents a; times t; evidence a @ t : D <- r [a @ t : s].");
  EXPECT_EQ(apply_T1(t), t);
}

TEST(T1, AttributionFacts) {
  auto snaps = phase_snapshots(load_corpus("attribution.el"));
  std::set<std::string> facts =
      rendered(snaps.at(Phase::T1).formulas().of<TemporalFact>());
  EXPECT_EQ(facts, (std::set<std::string>{
                       "t:sIP(Attack,IP)", "t:Geoloc(IP,C)",
                       "t:~Fin(C,Attack)", "t:Spoofed(IP)",
                       "t1:Admit(C,Attack')", "t:Sim(Attack,Attack')",
                       "t:EConf(C,Victim)"}));
}

TEST(Arrow, FiresOnBareFacts) {
  auto snaps = phase_snapshots(load_corpus("dnc.el"));
  const Theory& t = snaps.at(Phase::Arrow);
  EXPECT_TRUE(has(t, "(t1:SucPhish)_{r2}"));
  // TF's premise went away in the discordance phase.
  EXPECT_FALSE(has(t, "(t2:PhysA)_{r4}"));
  EXPECT_EQ(t.formulas().of<ReasoningFact>().size(), 1u);

  auto attribution = phase_snapshots(load_corpus("attribution.el"));
  EXPECT_TRUE(has(attribution.at(Phase::Arrow), "(t:Motive(C,Attack))_{r7}"));
}

TEST(Arrow, WithoutDiscordanceTfFires) {
  Theory t = apply_arrow(apply_T1(apply_T2(load_corpus("dnc.el"))));
  EXPECT_TRUE(has(t, "(t2:PhysA)_{r4}"));
}

TEST(ArrowPrime, ChainsSubscripts) {
  auto dnc = phase_snapshots(load_corpus("dnc.el"));
  const Theory& t = dnc.at(Phase::ArrowPrime);
  EXPECT_TRUE(has(t, "(t1:Attack)_{r1,r2}"));
  EXPECT_FALSE(has(t, "(t2:Attack)_{r3,r4}"));

  auto attribution = phase_snapshots(load_corpus("attribution.el"));
  EXPECT_TRUE(has(attribution.at(Phase::ArrowPrime),
                  "(t:Culprit(C,Attack))_{r2,r7,r5}"));
  // A3's ~Cap premise never became available.
  for (const auto& f :
       attribution.at(Phase::ArrowPrime).formulas().of<ReasoningFact>()) {
    EXPECT_NE(f.head().name, "r3") << to_string(Formula{f});
  }
}

TEST(ArrowPrime, NeedsAReasoningPremise) {
  Theory t = apply_arrow(apply_T1(apply_T2(parse_ok(
      "agents a; times t;\nevidence a @ t : D <- r [a @ t : s].\n"))));
  EXPECT_EQ(apply_arrow_prime(t), t);
}

TEST(D1Reasoning, CrossTimeChains) {
  Theory t = alphabet({"Attack"}, {"r1", "r2", "r3", "r4"});
  t.insert(rfact(t, "t1", "Attack", true, {"r1", "r2"}));
  t.insert(rfact(t, "t2", "Attack", true, {"r3", "r4"}));
  Theory out = apply_D1_reasoning(t, Stage::General);
  EXPECT_TRUE(has(out, "(t2:~Attack)_{r1,r2}"));
  EXPECT_TRUE(has(out, "(t1:~Attack)_{r3,r4}"));
  EXPECT_EQ(out.formulas().size(), 4u);
}

TEST(D1Reasoning, NeedsTwoInstants) {
  Theory one = alphabet({"p"}, {"r1", "r2"});
  one.insert(rfact(one, "t1", "p", true, {"r1"}));
  EXPECT_EQ(apply_D1_reasoning(one, Stage::Singleton), one);
  EXPECT_EQ(apply_D1_reasoning(one, Stage::General), one);

  Theory same = alphabet({"p"}, {"r1", "r2"});
  same.insert(rfact(same, "t1", "p", true, {"r1"}));
  same.insert(rfact(same, "t1", "p", true, {"r2"}));
  EXPECT_EQ(apply_D1_reasoning(same, Stage::Singleton), same);
}

TEST(D1Reasoning, SingletonStageIgnoresChains) {
  Theory t = alphabet({"p"}, {"r1", "r2", "r3"});
  t.insert(rfact(t, "t1", "p", true, {"r1", "r3"}));
  t.insert(rfact(t, "t2", "p", true, {"r2"}));
  EXPECT_EQ(apply_D1_reasoning(t, Stage::Singleton), t);
  t.insert(rfact(t, "t1", "p", true, {"r1"}));
  EXPECT_TRUE(has(apply_D1_reasoning(t, Stage::Singleton), "(t1:~p)_{r2}"));
}

TEST(D2Reasoning, AttributionCulprit) {
  Theory t = alphabet({"Culprit(C,Attack)"}, {"r1", "r2", "r4", "r5", "r7"});
  add_rtrust(t, "r1", "r4");
  t.insert(rfact(t, "t", "Culprit(C,Attack)", true, {"r1", "r5"}));
  t.insert(rfact(t, "t", "Culprit(C,Attack)", false, {"r4"}));
  Theory out = apply_D2_reasoning(t, Stage::General);
  EXPECT_FALSE(has(out, "(t:Culprit(C,Attack))_{r1,r5}"));
  EXPECT_TRUE(has(out, "(t:~Culprit(C,Attack))_{r4}"));

  add_rtrust(out, "r4", "r2");
  out.insert(rfact(out, "t", "Culprit(C,Attack)", true, {"r2", "r7", "r5"}));
  out = apply_D2_reasoning(out, Stage::General);
  EXPECT_FALSE(has(out, "(t:~Culprit(C,Attack))_{r4}"));
  EXPECT_TRUE(has(out, "(t:Culprit(C,Attack))_{r2,r7,r5}"));
}

TEST(D2Reasoning, DeltaCascade) {
  Theory t = alphabet({"q", "psi"}, {"r1", "r2", "r5"});
  add_rtrust(t, "r2", "r1");
  t.insert(rfact(t, "t", "q", true, {"r2"}));
  t.insert(rfact(t, "t", "q", false, {"r1"}));
  t.insert(rfact(t, "t1", "psi", true, {"r5", "r2"}));
  t.insert(rfact(t, "t1", "psi", false, {"r5"}));

  Theory with_delta = apply_D2_reasoning(t, Stage::General);
  EXPECT_FALSE(has(with_delta, "(t:q)_{r2}"));
  EXPECT_FALSE(has(with_delta, "(t1:psi)_{r5,r2}"));
  EXPECT_TRUE(has(with_delta, "(t1:~psi)_{r5}"));

  EngineOptions no_delta;
  no_delta.delta_removal = false;
  Theory without = apply_D2_reasoning(t, Stage::General, no_delta);
  EXPECT_FALSE(has(without, "(t:q)_{r2}"));
  EXPECT_TRUE(has(without, "(t1:psi)_{r5,r2}"));
}

TEST(D2Reasoning, CascadeThroughFullRun) {
  Theory t = generate_cascade_theory(GenConfig{});
  RunResult on = run_procedure(t);
  EngineOptions off_opts;
  off_opts.delta_removal = false;
  RunResult off = run_procedure(t, off_opts);

  auto survivors = [](const Theory& th) {
    std::set<std::string> out;
    for (const auto& f : th.formulas().of<ReasoningFact>()) {
      if (f.mentions(ReasoningId{"x1"})) out.insert(to_string(Formula{f}));
    }
    return out;
  };
  ASSERT_TRUE(is_open(on.verdict));
  EXPECT_TRUE(survivors(on.theory).empty());
  EXPECT_FALSE(survivors(off.theory).empty());
}

TEST(XpC, SameHeadTwoInstants) {
  Theory t = alphabet({"p"}, {"r", "ri", "rj"});
  t.insert(rfact(t, "t1", "p", true, {"r", "ri"}));
  t.insert(rfact(t, "t2", "p", true, {"r", "rj"}));
  Theory out = check_XpC(t);
  ASSERT_TRUE(out.closed());
  EXPECT_TRUE(out.formulas().empty());
  EXPECT_EQ(out.trace().back().rule, RuleName::XpC);
}

TEST(XpC, SameInstantOrDifferentHeads) {
  Theory same = alphabet({"p"}, {"r", "ri", "rj"});
  same.insert(rfact(same, "t1", "p", true, {"r", "ri"}));
  same.insert(rfact(same, "t1", "p", true, {"r", "rj"}));
  EXPECT_FALSE(check_XpC(same).closed());

  Theory heads = alphabet({"p"}, {"r", "ri", "rj"});
  heads.insert(rfact(heads, "t1", "p", true, {"ri"}));
  heads.insert(rfact(heads, "t2", "p", true, {"rj"}));
  EXPECT_FALSE(check_XpC(heads).closed());
}

TEST(T1Prime, DropsSubscripts) {
  Theory t = alphabet({"Attack"}, {"r1", "r2"});
  t.insert(rfact(t, "t1", "Attack", true, {"r1", "r2"}));
  EXPECT_TRUE(has(apply_T1_prime(t), "t1:Attack"));

  Theory none = alphabet({"p"}, {});
  EXPECT_EQ(apply_T1_prime(none), none);
}

TEST(T1Prime, AttributionConclusions) {
  auto snaps = phase_snapshots(load_corpus("attribution.el"));
  const Theory& before = snaps.at(Phase::XpC);
  const Theory& after = snaps.at(Phase::T1Prime);
  for (const char* fact :
       {"t:Cap(C,Attack)", "t:Motive(C,Attack)", "t:Culprit(C,Attack)"}) {
    EXPECT_FALSE(has(before, fact)) << fact;
    EXPECT_TRUE(has(after, fact)) << fact;
  }
}

TEST(XP, FactualContradiction) {
  Theory t = alphabet({"p"}, {});
  t.insert(TemporalFact{testing::at(t, "t"), testing::lit(t, "p")});
  t.insert(TemporalFact{testing::at(t, "t"), testing::lit(t, "p", false)});
  Theory out = check_XP(t);
  ASSERT_TRUE(out.closed());
  EXPECT_EQ(out.trace().back().rule, RuleName::XP);

  Theory apart = alphabet({"p"}, {});
  apart.insert(TemporalFact{testing::at(apart, "t1"), testing::lit(apart, "p")});
  apart.insert(
      TemporalFact{testing::at(apart, "t2"), testing::lit(apart, "p", false)});
  EXPECT_FALSE(check_XP(apart).closed());
}

TEST(XP, UntrustedConflictClosesEndToEnd) {
  RunResult r = run_procedure(parse_ok(
      "agents a, b; times t;\nevidence a @ t : p. evidence b @ t : ~p.\n"));
  ASSERT_FALSE(is_open(r.verdict));
  EXPECT_EQ(std::get<Closed>(r.verdict).witness.rule, RuleName::XP);
  EXPECT_TRUE(r.theory.formulas().empty());
}

TEST(Run, Dnc) {
  RunResult r = run_procedure(load_corpus("dnc.el"));
  ASSERT_TRUE(is_open(r.verdict));
  auto facts = rendered(std::get<Open>(r.verdict).model.facts);
  EXPECT_TRUE(facts.count("t1:Attack"));
  EXPECT_FALSE(facts.count("t2:Attack"));
  EXPECT_TRUE(r.theory.exhausted());
}

TEST(Run, AttributionCulprit) {
  RunResult r = run_procedure(load_corpus("attribution.el"));
  ASSERT_TRUE(is_open(r.verdict));
  const Model& m = std::get<Open>(r.verdict).model;
  EXPECT_EQ(m.facts.size(), 10u);
  EXPECT_TRUE(rendered(m.plausible()).count("t:Culprit(C,Attack)"));
  EXPECT_EQ(rendered(m.negative()), (std::set<std::string>{"t:~Fin(C,Attack)"}));
}

TEST(Run, SameAgentTwoInstantsClosesAtXC) {
  RunResult r = run_procedure(parse_ok(
      "agents a; times t1, t2;\nevidence a @ t1 : p. evidence a @ t2 : p.\n"));
  ASSERT_FALSE(is_open(r.verdict));
  EXPECT_EQ(std::get<Closed>(r.verdict).witness.rule, RuleName::XC);
  EXPECT_TRUE(r.theory.formulas().empty());
}

TEST(Run, PhasesComeInOrder) {
  std::vector<Phase> seen;
  EngineOptions opts;
  opts.observer = [&](Phase p, const Theory&, const std::set<std::string>&) {
    seen.push_back(p);
  };
  run_procedure(load_corpus("attribution.el"), opts);
  EXPECT_EQ(seen, all_phases());
}

TEST(Run, TraceStepsIncrease) {
  RunResult r = run_procedure(load_corpus("attribution.el"));
  for (std::size_t i = 1; i < r.theory.trace().size(); ++i) {
    EXPECT_LT(r.theory.trace()[i - 1].step, r.theory.trace()[i].step);
  }
}

// Every ordering of up to six instances inside each round of the DNC run.
TEST(Run, DncAllIntraPhaseOrders) {
  const Theory input = load_corpus("dnc.el");
  const RunResult reference = run_procedure(input);
  const auto expected = rendered(reference.theory);

  std::vector<int> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<std::string>> traces;
  std::size_t runs = 0;
  do {
    EngineOptions opts;
    opts.order = [&perm](std::vector<RuleInstance>& round) {
      if (round.size() < 2 || round.size() > perm.size()) return;
      std::vector<std::size_t> idx(round.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(),
                [&](std::size_t a, std::size_t b) { return perm[a] < perm[b]; });
      std::vector<RuleInstance> reordered;
      for (std::size_t i : idx) reordered.push_back(round[i]);
      round = std::move(reordered);
    };
    RunResult r = run_procedure(input, opts);
    ASSERT_TRUE(is_open(r.verdict));
    ASSERT_EQ(rendered(r.theory), expected);
    std::vector<std::string> trace;
    for (const auto& e : r.theory.trace()) {
      for (const auto& f : e.inserted) trace.push_back(to_string(f));
    }
    traces.insert(trace);
    ++runs;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(runs, 720u);
  EXPECT_GT(traces.size(), 1u);
}

TEST(ExtractModel, RejectsClosedAndUnfinished) {
  Theory t = load_corpus("dnc.el");
  EXPECT_THROW(extract_model(t), ModelError);
  t.close(RuleName::XP, {});
  EXPECT_THROW(extract_model(t), ModelError);
}

TEST(ExtractModel, DncPositives) {
  RunResult r = run_procedure(load_corpus("dnc.el"));
  auto positives = rendered(extract_model(r.theory).plausible());
  for (const char* f : {"t1:Attack", "t1:SucPhish", "t2:SpeedTr(23MB/s)"}) {
    EXPECT_TRUE(positives.count(f)) << f;
  }
}

TEST(Stats, CountRulesFired) {
  RunResult r = run_procedure(load_corpus("dnc.el"));
  std::map<RuleName, std::size_t> stats;
  for (const auto& [rule, n] : rule_stats(r.theory)) stats[rule] = n;
  EXPECT_EQ(stats[RuleName::T2], 4u);
  EXPECT_EQ(stats[RuleName::D2], 1u);
  std::size_t total = 0;
  for (const auto& [rule, n] : stats) total += n;
  EXPECT_EQ(total, r.theory.trace().size());
}

}  // namespace
}  // namespace evlogic
