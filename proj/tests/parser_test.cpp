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

#include "evlogic/parser.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace evlogic {
namespace {

using testing::load_corpus;
using testing::parse_ok;
using testing::read_text;
using testing::at;

std::vector<ParseError> errors_of(std::string_view source) {
  ParseResult r = parse_theory(source, "in.el");
  if (r) return {};
  return r.errors();
}

TEST(Parse, SingleSimpleEvidence) {
  Theory t = parse_ok(
      "agents CS, TF, FE; times t1, t2; evidence FE @ t2 : SpeedTr23.");
  ASSERT_EQ(t.formulas().size(), 1u);
  auto simple = t.formulas().of<SimpleEvidence>();
  ASSERT_EQ(simple.size(), 1u);
  EXPECT_EQ(simple[0].agent.name, "FE");
  EXPECT_EQ(simple[0].time.name, "t2");
  EXPECT_EQ(simple[0].time.index, 1u);
  EXPECT_TRUE(simple[0].lit.positive);
  EXPECT_EQ(t.agents().size(), 3u);
  EXPECT_FALSE(t.closed());
  EXPECT_TRUE(t.trace().empty());
}

TEST(Parse, EmptyInput) {
  ParseResult r = parse_theory("");
  ASSERT_FALSE(r);
  EXPECT_TRUE(r.has_error(ParseErrorKind::EmptyTheory));
  EXPECT_TRUE(parse_theory("agents a; times t;").has_error(
      ParseErrorKind::EmptyTheory));
}

TEST(Parse, DerivationCycle) {
  ParseResult r = parse_theory(
      "agents a; times t;\n"
      "evidence a @ t : A <- r [a @ t : B | a @ t : s].\n"
      "evidence a @ t : B <- q [a @ t : A].\n");
  ASSERT_FALSE(r);
  EXPECT_TRUE(r.has_error(ParseErrorKind::DerivationCycle));
}

TEST(Parse, SelfCycle) {
  EXPECT_TRUE(parse_theory("agents a; times t;\n"
                           "evidence a @ t : A <- r [a @ t : A].\n")
                  .has_error(ParseErrorKind::DerivationCycle));
  // Edges are between literals, so A resting on ~A is not a cycle.
  EXPECT_TRUE(parse_theory("agents a; times t1, t2;\n"
                           "evidence a @ t2 : A <- r [a @ t1 : ~A].\n"));
}

TEST(Parse, KindConflict) {
  ParseResult r = parse_theory(
      "agents a; times t;\n"
      "evidence a @ t : A <- r [a @ t : s].\n"
      "evidence a @ t : A.\n");
  ASSERT_FALSE(r);
  EXPECT_TRUE(r.has_error(ParseErrorKind::KindConflict));
  const auto& e = r.errors().front();
  EXPECT_EQ(e.span.line, 3u);
}

TEST(Parse, TrustOnDerivedVarIsKindConflict) {
  EXPECT_TRUE(parse_theory("agents a, b; times t;\n"
                           "evidence a @ t : A <- r [a @ t : s].\n"
                           "trust(A): a < b.\n")
                  .has_error(ParseErrorKind::KindConflict));
}

TEST(Parse, ReasoningShapeMismatch) {
  ParseResult r = parse_theory(
      "agents a, b; times t;\n"
      "evidence a @ t : A <- r [a @ t : s].\n"
      "evidence b @ t : A <- r [b @ t : q].\n");
  ASSERT_FALSE(r);
  EXPECT_TRUE(r.has_error(ParseErrorKind::ReasoningShapeMismatch));
}

TEST(Parse, SameShapeFromTwoAgents) {
  Theory t = parse_ok(
      "agents a, b; times t;\n"
      "evidence a @ t : A <- r [a @ t : s | a @ t : q].\n"
      "evidence b @ t : A <- r [a @ t : q | a @ t : s].\n");
  EXPECT_EQ(t.formulas().of<DerivedEvidence>().size(), 2u);
  EXPECT_EQ(t.reasonings().size(), 1u);
}

TEST(Parse, UnknownAndDuplicateSymbols) {
  auto errs = errors_of("agents a, a; times t;\nevidence b @ u : p.\n");
  std::set<ParseErrorKind> kinds;
  for (const auto& e : errs) kinds.insert(e.kind);
  EXPECT_TRUE(kinds.count(ParseErrorKind::DuplicateDecl));
  EXPECT_TRUE(kinds.count(ParseErrorKind::UnknownSymbol));
}

TEST(Parse, SyntaxErrorSpan) {
  auto errs = errors_of("agents a;\ntimes t;\nevidence a @ t p.\n");
  ASSERT_FALSE(errs.empty());
  EXPECT_EQ(errs[0].kind, ParseErrorKind::Syntax);
  EXPECT_EQ(errs[0].span.file, "in.el");
  EXPECT_EQ(errs[0].span.line, 3u);
  EXPECT_EQ(errs[0].span.column, 16u);
  EXPECT_EQ(to_string(errs[0]).rfind("in.el:3:16: error[Syntax]: ", 0), 0u);
}

TEST(Parse, RecoversAfterSyntaxError) {
  auto errs = errors_of(
      "agents a; times t;\n"
      "evidence a @ t p.\n"
      "evidence a @ : q.\n"
      "evidence a @ t : ok.\n");
  ASSERT_EQ(errs.size(), 2u);
  EXPECT_EQ(errs[0].span.line, 2u);
  EXPECT_EQ(errs[1].span.line, 3u);
}

TEST(Parse, LexicalError) {
  auto errs = errors_of("agents a; times t; evidence a @ t : p $.");
  ASSERT_FALSE(errs.empty());
  EXPECT_EQ(errs[0].kind, ParseErrorKind::Lexical);
  EXPECT_EQ(errs[0].span.column, 39u);
}

TEST(Parse, ColumnsCountCodePoints) {
  auto errs = errors_of("agents \"\xC3\xA9t\xC3\xA9\"; times t; evidence x @ t : p.");
  ASSERT_FALSE(errs.empty());
  EXPECT_EQ(errs[0].kind, ParseErrorKind::UnknownSymbol);
  EXPECT_EQ(errs[0].span.column, 33u);
}

TEST(Parse, LaterLayersAreRejected) {
  for (const char* stmt : {"t : p.", "(t : p)_{r}.", "evidence a @ t : ~~p."}) {
    std::string src = std::string("agents a; times t; evidence a @ t : q.\n") + stmt;
    auto errs = errors_of(src);
    ASSERT_FALSE(errs.empty()) << stmt;
    EXPECT_TRUE(errs[0].kind == ParseErrorKind::Syntax ||
                errs[0].kind == ParseErrorKind::Lexical)
        << stmt;
    EXPECT_EQ(errs[0].span.line, 2u) << stmt;
  }
}

TEST(Parse, CrlfBomAndComments) {
  std::string unix_text =
      "agents a, b; # sources\ntimes t1, t2;\nevidence a @ t1 : p.\n"
      "trust(p): a < b.\n";
  std::string dos_text =
      "\xEF\xBB\xBF" "agents a, b; # sources\r\ntimes t1, t2;\r\n"
      "evidence a @ t1 : p.\r\ntrust(p): a < b.\r\n";
  EXPECT_EQ(parse_ok(unix_text), parse_ok(dos_text));

  auto errs = errors_of("\xEF\xBB\xBF" "agents a;\r\ntimes t;\r\nevidence a @ t p.");
  ASSERT_FALSE(errs.empty());
  EXPECT_EQ(errs[0].span.line, 3u);
  EXPECT_EQ(errs[0].span.column, 16u);
}

TEST(Parse, TimeIndicesFollowDeclaration) {
  Theory t = parse_ok("agents a; times late, early; evidence a @ early : p.");
  EXPECT_EQ(at(t, "late").index, 0u);
  EXPECT_EQ(at(t, "early").index, 1u);
}

TEST(Parse, StatementOrderDoesNotMatter) {
  Theory a = parse_ok(
      "agents a, b; times t;\n"
      "evidence a @ t : p.\n"
      "evidence b @ t : D <- r [b @ t : q].\n"
      "trust(p): a < b.\n");
  Theory b = parse_ok(
      "agents a, b; times t;\n"
      "trust(p): a < b.\n"
      "evidence b @ t : D <- r [b @ t : q].\n"
      "evidence a @ t : p.\n");
  EXPECT_EQ(a, b);
}

TEST(Parse, AttributionCounts) {
  Theory t = load_corpus("attribution.el");
  std::size_t evidence = t.formulas().of<SimpleEvidence>().size() +
                         t.formulas().of<DerivedEvidence>().size();
  EXPECT_EQ(evidence, 9u);
  EXPECT_EQ(t.formulas().of<AgentTrust>().size(), 1u);
  EXPECT_EQ(t.formulas().of<ReasoningTrust>().size(), 3u);
  auto trust = t.formulas().of<AgentTrust>().front();
  EXPECT_EQ(trust.less.name, "S5");
  EXPECT_EQ(trust.more.name, "S1");
  EXPECT_EQ(trust.subject.name, "Sim(Attack,Attack')");
}

TEST(Parse, VarKindsAreInferred) {
  Theory t = load_corpus("dnc.el");
  EXPECT_EQ(t.vars().at("Attack").kind, VarKind::Derived);
  EXPECT_EQ(t.vars().at("PhysA").kind, VarKind::Derived);
  EXPECT_EQ(t.vars().at("SpeedTr(23MB/s)").kind, VarKind::Simple);
  EXPECT_EQ(t.count_vars(VarKind::Derived), 3u);
  EXPECT_EQ(t.count_vars(VarKind::Simple), 6u);
}

TEST(Render, SingleEvidence) {
  Theory t = parse_ok("agents a; times t; evidence a @ t : ~p.");
  std::string text = render_theory(t);
  std::size_t statements = 0;
  for (std::size_t pos = 0; (pos = text.find("evidence", pos)) != std::string::npos;
       ++pos) {
    ++statements;
  }
  EXPECT_EQ(statements, 1u);
  EXPECT_EQ(parse_ok(text), t);
}

TEST(Render, CorpusRoundTrip) {
  for (const char* name : {"dnc.el", "attribution.el"}) {
    Theory t = load_corpus(name);
    EXPECT_EQ(parse_ok(render_theory(t)), t) << name;
    EXPECT_EQ(render_theory(parse_ok(render_theory(t))), render_theory(t)) << name;
  }
}

TEST(Render, ClosedTheory) {
  Theory t = parse_ok("agents a; times t1, t2; evidence a @ t1 : p.");
  t.close(RuleName::XC, {});
  std::string text = render_theory(t);
  EXPECT_NE(text.find("\xE2\x8A\xA5 (closed theory)"), std::string::npos);
  EXPECT_EQ(text.find("evidence"), std::string::npos);
}

TEST(Render, AwkwardNamesAreQuoted) {
  EXPECT_EQ(render_name("plain"), "plain");
  EXPECT_EQ(render_name("Sim(Attack,Attack')"), "Sim(Attack,Attack')");
  EXPECT_NE(render_name("two words"), "two words");
  EXPECT_NE(render_name("agents"), "agents");
  Theory t = parse_ok(
      "agents \"two words\", \"evidence\"; times \"t 1\";\n"
      "evidence \"two words\" @ \"t 1\" : \"odd var\".\n"
      "trust(\"odd var\"): \"two words\" < \"evidence\".\n");
  EXPECT_EQ(parse_ok(render_theory(t)), t);
}

}  // namespace
}  // namespace evlogic
