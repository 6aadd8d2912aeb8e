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

// The `.el` theory language.
//
//   theory   := decl* stmt+
//   decl     := "agents" idlist ";" | "times" idlist ";"
//   stmt     := simple | derived | atrust | rtrust
//   simple   := "evidence" agent "@" time ":" lit "."
//   derived  := "evidence" agent "@" time ":" lit "<-" rid
//               "[" premise ("|" premise)* "]" "."
//   premise  := agent "@" time ":" lit
//   atrust   := "trust" "(" var ")" ":" agent "<" agent "."
//   rtrust   := "rtrust" ":" rid "<" rid "."
//   lit      := ["~"] var
//
// Identifiers are words ([A-Za-z_][A-Za-z0-9_/]*) optionally followed by one
// parenthesised group and trailing primes, e.g. `Admit(C, Attack')`, or any
// text in double quotes. `#` starts a line comment. Agents and times must be
// declared before use; variables and reasonings are introduced by use, and a
// variable is derived iff it heads some derived evidence.

#ifndef EVLOGIC_PARSER_HPP_
#define EVLOGIC_PARSER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "evlogic/model.hpp"

namespace evlogic {

struct SourceSpan {
  std::string file;
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ParseErrorKind {
  Lexical,
  Syntax,
  DuplicateDecl,
  UnknownSymbol,
  KindConflict,
  DerivationCycle,
  ReasoningShapeMismatch,
  EmptyTheory,
};

std::string_view to_string(ParseErrorKind kind);

struct ParseError {
  SourceSpan span;
  ParseErrorKind kind = ParseErrorKind::Syntax;
  std::string message;
};

/// `file:line:col: error[Kind]: message`
std::string to_string(const ParseError& error);

class ParseResult {
 public:
  explicit ParseResult(Theory theory) : value_(std::move(theory)) {}
  explicit ParseResult(std::vector<ParseError> errors)
      : value_(std::move(errors)) {}

  bool ok() const { return std::holds_alternative<Theory>(value_); }
  explicit operator bool() const { return ok(); }

  const Theory& theory() const& { return std::get<Theory>(value_); }
  Theory&& theory() && { return std::get<Theory>(std::move(value_)); }

  /// Empty on success.
  const std::vector<ParseError>& errors() const;

  bool has_error(ParseErrorKind kind) const;

 private:
  std::variant<Theory, std::vector<ParseError>> value_;
};

/// Validating constructor for layer-1 theories. The parser feeds it; the
/// random theory generator uses it directly.
class TheoryBuilder {
 public:
  struct RawLiteral {
    std::string var;
    bool positive = true;
  };

  struct RawAssertion {
    std::string agent;
    std::string time;
    RawLiteral lit;
    SourceSpan span;
  };

  explicit TheoryBuilder(std::string file = "<input>");

  void declare_agent(const std::string& name, SourceSpan span);
  void declare_time(const std::string& name, SourceSpan span);

  void add_simple(RawAssertion evidence);
  void add_derived(RawAssertion head, std::string reasoning,
                   std::vector<RawAssertion> premises, SourceSpan span);
  void add_agent_trust(std::string subject, std::string less,
                       std::string more, SourceSpan span);
  void add_reasoning_trust(std::string less, std::string more,
                           SourceSpan span);

  void add_error(ParseError error);

  /// Runs the whole-theory checks (kinds, shapes, cycles, emptiness).
  ParseResult finish() &&;

  SourceSpan span_at(std::size_t line, std::size_t column) const {
    return SourceSpan{file_, line, column};
  }

 private:
  struct DerivedStmt {
    RawAssertion head;
    std::string reasoning;
    std::vector<RawAssertion> premises;
    SourceSpan span;
  };
  struct AgentTrustStmt {
    std::string subject, less, more;
    SourceSpan span;
  };
  struct ReasoningTrustStmt {
    std::string less, more;
    SourceSpan span;
  };

  bool check_assertion(const RawAssertion& a);
  void error(ParseErrorKind kind, const SourceSpan& span, std::string message);

  std::string file_;
  std::vector<std::pair<std::string, SourceSpan>> agents_;
  std::vector<std::pair<std::string, SourceSpan>> times_;
  std::vector<RawAssertion> simple_;
  std::vector<DerivedStmt> derived_;
  std::vector<AgentTrustStmt> agent_trust_;
  std::vector<ReasoningTrustStmt> reasoning_trust_;
  std::vector<ParseError> errors_;
  bool syntax_failed_ = false;
};

ParseResult parse_theory(std::string_view source,
                         const std::string& file = "<input>");

/// Canonical text. Layer-1 formulas become statements; engine products are
/// listed as comments, so the text parses back to the layer-1 part.
std::string render_theory(const Theory& theory);

/// Name as it must be written in `.el` text (quoted when needed).
std::string render_name(const std::string& name);

}  // namespace evlogic

#endif  // EVLOGIC_PARSER_HPP_
