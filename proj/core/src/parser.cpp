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

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

namespace evlogic {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Lexical:
      return "Lexical";
    case ParseErrorKind::Syntax:
      return "Syntax";
    case ParseErrorKind::DuplicateDecl:
      return "DuplicateDecl";
    case ParseErrorKind::UnknownSymbol:
      return "UnknownSymbol";
    case ParseErrorKind::KindConflict:
      return "KindConflict";
    case ParseErrorKind::DerivationCycle:
      return "DerivationCycle";
    case ParseErrorKind::ReasoningShapeMismatch:
      return "ReasoningShapeMismatch";
    case ParseErrorKind::EmptyTheory:
      return "EmptyTheory";
  }
  return "?";
}

std::string to_string(const ParseError& error) {
  std::ostringstream out;
  out << error.span.file << ':' << error.span.line << ':' << error.span.column
      << ": error[" << to_string(error.kind) << "]: " << error.message;
  return out.str();
}

const std::vector<ParseError>& ParseResult::errors() const {
  static const std::vector<ParseError> kNone;
  if (const auto* e = std::get_if<std::vector<ParseError>>(&value_)) return *e;
  return kNone;
}

bool ParseResult::has_error(ParseErrorKind kind) const {
  const auto& errs = errors();
  return std::any_of(errs.begin(), errs.end(),
                     [kind](const ParseError& e) { return e.kind == kind; });
}

// ---- lexer ----------------------------------------------------------------

namespace {

enum class Tok {
  Ident,
  KwAgents,
  KwTimes,
  KwEvidence,
  KwTrust,
  KwRtrust,
  At,
  Colon,
  Dot,
  LBracket,
  RBracket,
  Bar,
  Less,
  LeftArrow,
  Semi,
  Comma,
  LParen,
  RParen,
  Tilde,
  End,
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident:
      return "identifier";
    case Tok::KwAgents:
      return "'agents'";
    case Tok::KwTimes:
      return "'times'";
    case Tok::KwEvidence:
      return "'evidence'";
    case Tok::KwTrust:
      return "'trust'";
    case Tok::KwRtrust:
      return "'rtrust'";
    case Tok::At:
      return "'@'";
    case Tok::Colon:
      return "':'";
    case Tok::Dot:
      return "'.'";
    case Tok::LBracket:
      return "'['";
    case Tok::RBracket:
      return "']'";
    case Tok::Bar:
      return "'|'";
    case Tok::Less:
      return "'<'";
    case Tok::LeftArrow:
      return "'<-'";
    case Tok::Semi:
      return "';'";
    case Tok::Comma:
      return "','";
    case Tok::LParen:
      return "'('";
    case Tok::RParen:
      return "')'";
    case Tok::Tilde:
      return "'~'";
    case Tok::End:
      return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

const std::map<std::string, Tok, std::less<>>& keywords() {
  static const std::map<std::string, Tok, std::less<>> kw{
      {"agents", Tok::KwAgents},     {"times", Tok::KwTimes},
      {"evidence", Tok::KwEvidence}, {"trust", Tok::KwTrust},
      {"rtrust", Tok::KwRtrust},
  };
  return kw;
}

bool is_word_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_word_char(char c) {
  return is_word_start(c) || (c >= '0' && c <= '9') || c == '/';
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

struct LexError {
  std::size_t line, column;
  std::string message;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {
    if (src_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
  }

  std::vector<Token> run(std::vector<LexError>& errors) {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      Token tok;
      tok.line = line_;
      tok.column = column_;
      if (pos_ >= src_.size()) {
        tok.kind = Tok::End;
        out.push_back(tok);
        return out;
      }
      char c = src_[pos_];
      if (is_word_start(c)) {
        if (auto t = word(errors)) out.push_back(std::move(*t));
        continue;
      }
      if (c == '"') {
        if (auto t = quoted(errors)) out.push_back(std::move(*t));
        continue;
      }
      switch (c) {
        case '@': tok.kind = Tok::At; break;
        case ':': tok.kind = Tok::Colon; break;
        case '.': tok.kind = Tok::Dot; break;
        case '[': tok.kind = Tok::LBracket; break;
        case ']': tok.kind = Tok::RBracket; break;
        case '|': tok.kind = Tok::Bar; break;
        case ';': tok.kind = Tok::Semi; break;
        case ',': tok.kind = Tok::Comma; break;
        case '(': tok.kind = Tok::LParen; break;
        case ')': tok.kind = Tok::RParen; break;
        case '~': tok.kind = Tok::Tilde; break;
        case '<':
          if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
            tok.kind = Tok::LeftArrow;
            advance();
          } else {
            tok.kind = Tok::Less;
          }
          break;
        default: {
          std::string shown = static_cast<unsigned char>(c) < 0x80
                                  ? std::string(1, c)
                                  : std::string("non-ASCII byte");
          errors.push_back({line_, column_, "unexpected character '" + shown + "'"});
          advance_codepoint();
          continue;
        }
      }
      advance();
      out.push_back(tok);
    }
  }

  // Scans an identifier starting at src_[pos_]; returns the canonical name
  // and sets `consumed` to the number of bytes read.
  static std::optional<std::string> scan_name(std::string_view s,
                                              std::size_t& consumed,
                                              std::string& error) {
    std::size_t i = 0;
    std::string name;
    if (i >= s.size() || !is_word_start(s[i])) {
      error = "expected identifier";
      return std::nullopt;
    }
    while (i < s.size() && is_word_char(s[i])) name += s[i++];
    if (keywords().count(name) != 0) {
      consumed = i;
      return name;
    }
    while (i < s.size() && s[i] == '\'') name += s[i++];
    if (i < s.size() && s[i] == '(') {
      int depth = 0;
      for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '\n' || c == '\r' || c == '#' || c == '"') break;
        if (is_space(c)) continue;
        name += c;
        if (c == '(') ++depth;
        if (c == ')' && --depth == 0) {
          ++i;
          break;
        }
      }
      if (depth != 0) {
        error = "unbalanced parentheses in identifier";
        return std::nullopt;
      }
      while (i < s.size() && s[i] == '\'') name += s[i++];
    }
    consumed = i;
    return name;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
      ++column_;
    }
    ++pos_;
  }

  void advance_codepoint() {
    advance();
    while (pos_ < src_.size() &&
           (static_cast<unsigned char>(src_[pos_]) & 0xC0) == 0x80) {
      ++pos_;
    }
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (is_space(c)) {
        advance();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::optional<Token> word(std::vector<LexError>& errors) {
    Token tok;
    tok.line = line_;
    tok.column = column_;
    std::size_t consumed = 0;
    std::string error;
    auto name = scan_name(src_.substr(pos_), consumed, error);
    if (!name) {
      errors.push_back({line_, column_, error});
      while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      return std::nullopt;
    }
    for (std::size_t i = 0; i < consumed; ++i) advance();
    auto kw = keywords().find(*name);
    tok.kind = kw != keywords().end() ? kw->second : Tok::Ident;
    tok.text = std::move(*name);
    return tok;
  }

  std::optional<Token> quoted(std::vector<LexError>& errors) {
    Token tok;
    tok.kind = Tok::Ident;
    tok.line = line_;
    tok.column = column_;
    advance();  // opening quote
    while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
      tok.text += src_[pos_];
      advance();
    }
    if (pos_ >= src_.size() || src_[pos_] != '"') {
      errors.push_back({tok.line, tok.column, "unterminated quoted name"});
      return std::nullopt;
    }
    advance();
    if (tok.text.empty()) {
      errors.push_back({tok.line, tok.column, "empty quoted name"});
      return std::nullopt;
    }
    return tok;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// ---- parser ---------------------------------------------------------------

struct SyntaxError {
  Token at;
  std::string message;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, TheoryBuilder& builder)
      : toks_(std::move(tokens)), b_(builder) {}

  void run() {
    while (peek().kind != Tok::End) {
      try {
        statement();
      } catch (const SyntaxError& e) {
        b_.add_error(ParseError{b_.span_at(e.at.line, e.at.column),
                                ParseErrorKind::Syntax, e.message});
        recover();
      }
    }
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  Token take() {
    Token t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  Token expect(Tok kind, std::string_view what) {
    if (peek().kind != kind) {
      std::string found = peek().kind == Tok::Ident
                              ? "'" + peek().text + "'"
                              : std::string(describe(peek().kind));
      throw SyntaxError{peek(), "expected " + std::string(what) + ", found " +
                                    found};
    }
    return take();
  }

  void recover() {
    while (peek().kind != Tok::End) {
      Tok k = take().kind;
      if (k == Tok::Dot || k == Tok::Semi) return;
    }
  }

  SourceSpan span(const Token& t) const { return b_.span_at(t.line, t.column); }

  void statement() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::KwAgents:
      case Tok::KwTimes:
        declaration();
        return;
      case Tok::KwEvidence:
        evidence();
        return;
      case Tok::KwTrust:
        agent_trust();
        return;
      case Tok::KwRtrust:
        reasoning_trust();
        return;
      default:
        throw SyntaxError{t, "expected 'agents', 'times', 'evidence', 'trust' "
                             "or 'rtrust'; interpretation and reasoning "
                             "formulas cannot be written in input"};
    }
  }

  void declaration() {
    bool agents = take().kind == Tok::KwAgents;
    for (;;) {
      Token name = expect(Tok::Ident, agents ? "agent name" : "time label");
      if (agents) {
        b_.declare_agent(name.text, span(name));
      } else {
        b_.declare_time(name.text, span(name));
      }
      if (peek().kind == Tok::Comma) {
        take();
        continue;
      }
      expect(Tok::Semi, "',' or ';'");
      return;
    }
  }

  TheoryBuilder::RawAssertion assertion() {
    TheoryBuilder::RawAssertion a;
    Token agent = expect(Tok::Ident, "agent name");
    a.span = span(agent);
    a.agent = agent.text;
    expect(Tok::At, "'@'");
    a.time = expect(Tok::Ident, "time label").text;
    expect(Tok::Colon, "':'");
    a.lit = literal();
    return a;
  }

  TheoryBuilder::RawLiteral literal() {
    TheoryBuilder::RawLiteral lit;
    if (peek().kind == Tok::Tilde) {
      take();
      lit.positive = false;
      if (peek().kind == Tok::Tilde) {
        throw SyntaxError{peek(), "double negation is not a literal"};
      }
    }
    lit.var = expect(Tok::Ident, "variable name").text;
    return lit;
  }

  void evidence() {
    Token kw = take();
    TheoryBuilder::RawAssertion head = assertion();
    if (peek().kind != Tok::LeftArrow) {
      expect(Tok::Dot, "'.' or '<-'");
      b_.add_simple(std::move(head));
      return;
    }
    take();
    std::string reasoning = expect(Tok::Ident, "reasoning name").text;
    expect(Tok::LBracket, "'['");
    std::vector<TheoryBuilder::RawAssertion> premises;
    premises.push_back(assertion());
    while (peek().kind == Tok::Bar) {
      take();
      premises.push_back(assertion());
    }
    expect(Tok::RBracket, "'|' or ']'");
    expect(Tok::Dot, "'.'");
    b_.add_derived(std::move(head), std::move(reasoning), std::move(premises),
                   span(kw));
  }

  void agent_trust() {
    Token kw = take();
    expect(Tok::LParen, "'('");
    std::string subject = expect(Tok::Ident, "variable name").text;
    expect(Tok::RParen, "')'");
    expect(Tok::Colon, "':'");
    std::string less = expect(Tok::Ident, "agent name").text;
    expect(Tok::Less, "'<'");
    std::string more = expect(Tok::Ident, "agent name").text;
    expect(Tok::Dot, "'.'");
    b_.add_agent_trust(std::move(subject), std::move(less), std::move(more),
                       span(kw));
  }

  void reasoning_trust() {
    Token kw = take();
    expect(Tok::Colon, "':'");
    std::string less = expect(Tok::Ident, "reasoning name").text;
    expect(Tok::Less, "'<'");
    std::string more = expect(Tok::Ident, "reasoning name").text;
    expect(Tok::Dot, "'.'");
    b_.add_reasoning_trust(std::move(less), std::move(more), span(kw));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  TheoryBuilder& b_;
};

}  // namespace

// ---- builder --------------------------------------------------------------

TheoryBuilder::TheoryBuilder(std::string file) : file_(std::move(file)) {}

void TheoryBuilder::error(ParseErrorKind kind, const SourceSpan& span,
                          std::string message) {
  errors_.push_back(ParseError{span, kind, std::move(message)});
}

void TheoryBuilder::add_error(ParseError e) {
  if (e.kind == ParseErrorKind::Lexical || e.kind == ParseErrorKind::Syntax) {
    syntax_failed_ = true;
  }
  errors_.push_back(std::move(e));
}

namespace {

template <class Decls>
const SourceSpan* find_decl(const Decls& decls, const std::string& name) {
  for (const auto& [n, span] : decls) {
    if (n == name) return &span;
  }
  return nullptr;
}

}  // namespace

void TheoryBuilder::declare_agent(const std::string& name, SourceSpan span) {
  if (find_decl(agents_, name) || find_decl(times_, name)) {
    error(ParseErrorKind::DuplicateDecl, span,
          "'" + name + "' is already declared");
    return;
  }
  agents_.emplace_back(name, std::move(span));
}

void TheoryBuilder::declare_time(const std::string& name, SourceSpan span) {
  if (find_decl(agents_, name) || find_decl(times_, name)) {
    error(ParseErrorKind::DuplicateDecl, span,
          "'" + name + "' is already declared");
    return;
  }
  times_.emplace_back(name, std::move(span));
}

bool TheoryBuilder::check_assertion(const RawAssertion& a) {
  bool ok = true;
  if (!find_decl(agents_, a.agent)) {
    error(ParseErrorKind::UnknownSymbol, a.span,
          "agent '" + a.agent + "' is not declared");
    ok = false;
  }
  if (!find_decl(times_, a.time)) {
    error(ParseErrorKind::UnknownSymbol, a.span,
          "time label '" + a.time + "' is not declared");
    ok = false;
  }
  return ok;
}

void TheoryBuilder::add_simple(RawAssertion evidence) {
  if (check_assertion(evidence)) simple_.push_back(std::move(evidence));
}

void TheoryBuilder::add_derived(RawAssertion head, std::string reasoning,
                                std::vector<RawAssertion> premises,
                                SourceSpan span) {
  bool ok = check_assertion(head);
  for (const auto& p : premises) ok = check_assertion(p) && ok;
  if (ok) {
    derived_.push_back(DerivedStmt{std::move(head), std::move(reasoning),
                                   std::move(premises), std::move(span)});
  }
}

void TheoryBuilder::add_agent_trust(std::string subject, std::string less,
                                    std::string more, SourceSpan span) {
  bool ok = true;
  for (const auto* name : {&less, &more}) {
    if (!find_decl(agents_, *name)) {
      error(ParseErrorKind::UnknownSymbol, span,
            "agent '" + *name + "' is not declared");
      ok = false;
    }
  }
  if (ok) {
    agent_trust_.push_back(AgentTrustStmt{std::move(subject), std::move(less),
                                          std::move(more), std::move(span)});
  }
}

void TheoryBuilder::add_reasoning_trust(std::string less, std::string more,
                                        SourceSpan span) {
  reasoning_trust_.push_back(
      ReasoningTrustStmt{std::move(less), std::move(more), std::move(span)});
}

namespace {

// Literal-level derivation graph: head literal -> derived premise literals.
// Returns a head literal that lies on a cycle, if any.
std::optional<std::string> find_cycle(
    const std::map<std::string, std::set<std::string>>& edges) {
  std::map<std::string, int> indegree;
  for (const auto& [from, tos] : edges) {
    indegree.try_emplace(from, 0);
    for (const auto& to : tos) ++indegree[to];
  }
  std::vector<std::string> ready;
  for (const auto& [node, deg] : indegree) {
    if (deg == 0) ready.push_back(node);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    std::string node = ready.back();
    ready.pop_back();
    ++visited;
    auto it = edges.find(node);
    if (it == edges.end()) continue;
    for (const auto& to : it->second) {
      if (--indegree[to] == 0) ready.push_back(to);
    }
  }
  if (visited == indegree.size()) return std::nullopt;
  for (const auto& [node, deg] : indegree) {
    if (deg > 0 && edges.count(node) != 0) return node;
  }
  return indegree.begin()->first;
}

std::string lit_name(const TheoryBuilder::RawLiteral& lit) {
  return (lit.positive ? "" : "~") + lit.var;
}

}  // namespace

ParseResult TheoryBuilder::finish() && {
  // Variable kinds: a variable is derived iff it heads a derived evidence.
  std::set<std::string> derived_vars;
  for (const auto& d : derived_) derived_vars.insert(d.head.lit.var);

  for (const auto& s : simple_) {
    if (derived_vars.count(s.lit.var) != 0) {
      error(ParseErrorKind::KindConflict, s.span,
            "variable '" + s.lit.var +
                "' heads a derived evidence and cannot be simple evidence");
    }
  }
  for (const auto& t : agent_trust_) {
    if (derived_vars.count(t.subject) != 0) {
      error(ParseErrorKind::KindConflict, t.span,
            "trust subject '" + t.subject +
                "' is a derived variable; agent trust is about simple ones");
    }
  }

  // One shape per reasoning id.
  std::map<std::string, std::string> shapes;
  auto shape_of = [](const DerivedStmt& d) {
    std::vector<std::string> ps;
    for (const auto& p : d.premises) {
      ps.push_back(p.agent + "@" + p.time + ":" + lit_name(p.lit));
    }
    std::sort(ps.begin(), ps.end());
    std::string s = d.head.time + ":" + lit_name(d.head.lit) + " <- [";
    for (const auto& p : ps) s += p + "|";
    return s + "]";
  };
  for (const auto& d : derived_) {
    auto [it, inserted] = shapes.emplace(d.reasoning, shape_of(d));
    if (!inserted && it->second != shape_of(d)) {
      error(ParseErrorKind::ReasoningShapeMismatch, d.span,
            "reasoning '" + d.reasoning +
                "' is used with a different conclusion or premises than in "
                "an earlier statement");
    }
  }

  std::map<std::string, std::set<std::string>> graph;
  std::map<std::string, SourceSpan> head_span;
  for (const auto& d : derived_) {
    std::string head = lit_name(d.head.lit);
    head_span.try_emplace(head, d.span);
    auto& out = graph[head];
    for (const auto& p : d.premises) {
      if (derived_vars.count(p.lit.var) != 0) out.insert(lit_name(p.lit));
    }
  }
  if (auto node = find_cycle(graph)) {
    auto it = head_span.find(*node);
    SourceSpan where =
        it != head_span.end() ? it->second : SourceSpan{file_, 1, 1};
    error(ParseErrorKind::DerivationCycle, where,
          "derivations through '" + *node + "' form a cycle");
  }

  if (!syntax_failed_ && simple_.empty() && derived_.empty()) {
    error(ParseErrorKind::EmptyTheory, SourceSpan{file_, 1, 1},
          "a theory needs at least one evidence statement");
  }

  if (!errors_.empty()) return ParseResult(std::move(errors_));

  Theory theory;
  for (const auto& [name, span] : agents_) theory.add_agent(AgentId{name});
  for (const auto& [name, span] : times_) theory.add_time(name);

  auto var = [&](const std::string& name) {
    PropVar v{name, derived_vars.count(name) != 0 ? VarKind::Derived
                                                  : VarKind::Simple};
    theory.add_var(v);
    return v;
  };
  auto lit = [&](const RawLiteral& l) { return Literal{var(l.var), l.positive}; };
  auto time = [&](const std::string& name) { return *theory.find_time(name); };

  for (const auto& s : simple_) {
    theory.insert(SimpleEvidence{AgentId{s.agent}, time(s.time), lit(s.lit)});
  }
  for (const auto& d : derived_) {
    DerivedEvidence f;
    f.agent = AgentId{d.head.agent};
    f.time = time(d.head.time);
    f.lit = lit(d.head.lit);
    f.reasoning = ReasoningId{d.reasoning};
    for (const auto& p : d.premises) {
      f.premises.push_back(Assertion{AgentId{p.agent}, time(p.time), lit(p.lit)});
    }
    theory.add_reasoning(f.reasoning);
    theory.insert(std::move(f));
  }
  for (const auto& t : agent_trust_) {
    theory.insert(AgentTrust{AgentId{t.less}, AgentId{t.more}, var(t.subject)});
  }
  for (const auto& t : reasoning_trust_) {
    theory.add_reasoning(ReasoningId{t.less});
    theory.add_reasoning(ReasoningId{t.more});
    theory.insert(ReasoningTrust{ReasoningId{t.less}, ReasoningId{t.more}});
  }
  return ParseResult(std::move(theory));
}

ParseResult parse_theory(std::string_view source, const std::string& file) {
  TheoryBuilder builder(file);
  std::vector<LexError> lex_errors;
  std::vector<Token> tokens = Lexer(source).run(lex_errors);
  for (const auto& e : lex_errors) {
    builder.add_error(ParseError{builder.span_at(e.line, e.column),
                                 ParseErrorKind::Lexical, e.message});
  }
  Parser(std::move(tokens), builder).run();
  return std::move(builder).finish();
}

// ---- rendering ------------------------------------------------------------

std::string render_name(const std::string& name) {
  std::size_t consumed = 0;
  std::string error;
  auto scanned = Lexer::scan_name(name, consumed, error);
  bool plain = scanned && consumed == name.size() && *scanned == name &&
               keywords().count(name) == 0;
  return plain ? name : "\"" + name + "\"";
}

namespace {

std::string render_lit(const Literal& lit) {
  return (lit.positive ? "" : "~") + render_name(lit.var.name);
}

std::string render_assertion(const AgentId& a, const TimeLabel& t,
                             const Literal& lit) {
  return render_name(a.name) + " @ " + render_name(t.name) + " : " +
         render_lit(lit);
}

}  // namespace

std::string render_theory(const Theory& theory) {
  if (theory.closed()) return "# ⊥ (closed theory)\n";

  std::ostringstream out;
  auto list = [&](std::string_view kw, const auto& items) {
    if (items.empty()) return;
    out << kw << ' ';
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i != 0) out << ", ";
      out << render_name(items[i].name);
    }
    out << ";\n";
  };
  list("agents", theory.agents());
  list("times", theory.times());
  out << '\n';

  std::vector<std::string> products;
  for (const auto& [key, f] : theory.formulas()) {
    if (const auto* e = std::get_if<SimpleEvidence>(&f)) {
      out << "evidence " << render_assertion(e->agent, e->time, e->lit)
          << ".\n";
    } else if (const auto* d = std::get_if<DerivedEvidence>(&f)) {
      out << "evidence " << render_assertion(d->agent, d->time, d->lit)
          << " <- " << render_name(d->reasoning.name) << " [";
      for (std::size_t i = 0; i < d->premises.size(); ++i) {
        const auto& p = d->premises[i];
        if (i != 0) out << " | ";
        out << render_assertion(p.agent, p.time, p.lit);
      }
      out << "].\n";
    } else if (const auto* t = std::get_if<AgentTrust>(&f)) {
      out << "trust(" << render_name(t->subject.name)
          << "): " << render_name(t->less.name) << " < "
          << render_name(t->more.name) << ".\n";
    } else if (const auto* r = std::get_if<ReasoningTrust>(&f)) {
      out << "rtrust: " << render_name(r->less.name) << " < "
          << render_name(r->more.name) << ".\n";
    } else {
      products.push_back(to_string(f));
    }
  }
  if (!products.empty()) {
    out << "\n# interpretation and reasoning formulas\n";
    for (const auto& p : products) out << "#   " << p << '\n';
  }
  return out.str();
}

}  // namespace evlogic
