// SPDX-License-Identifier: Apache-2.0
#pragma once

// Concrete syntax of formulas, sequents and n-sequents.
//
//   formula := disj
//   disj    := conj ('|' conj)*
//   conj    := unary ('&' unary)*
//   unary   := ('~' | '#')* atom
//   atom    := var | '(' formula ')'
//
// '~' is ¬, '#' is ∇; the Unicode symbols ¬ ∇ ∧ ∨ ⇒ are accepted on input.
// Sequents are written `Γ => Δ` with comma-separated sides. n-sequents over
// the six values are either six cells separated by `||` (order 0, 1/3, n, b,
// 2/3, 1) or a signed list `0:φ; 1/3:ψ; ...`.

#include <cctype>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sixlogic/error.hpp"
#include "sixlogic/formula.hpp"
#include "sixlogic/sequent.hpp"
#include "sixlogic/truth_value.hpp"

namespace six {

enum class Notation { Ascii, Unicode };

namespace detail {

inline int precedence(const Formula& f) noexcept {
  switch (f.kind()) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    default: return 3;
  }
}

inline void print_formula(const Formula& f, Notation n, std::string& out) {
  const bool uni = n == Notation::Unicode;
  auto wrapped = [&](const Formula& g, bool parens) {
    if (parens) out += '(';
    print_formula(g, n, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Formula::Kind::Var: out += f.name(); return;
    case Formula::Kind::Neg:
      out += uni ? "¬" : "~";
      wrapped(f.operand(), precedence(f.operand()) < 3);
      return;
    case Formula::Kind::Nabla:
      out += uni ? "∇" : "#";
      wrapped(f.operand(), precedence(f.operand()) < 3);
      return;
    case Formula::Kind::And:
      wrapped(f.lhs(), precedence(f.lhs()) < 2);
      out += uni ? " ∧ " : " & ";
      wrapped(f.rhs(), precedence(f.rhs()) <= 2);
      return;
    case Formula::Kind::Or:
      wrapped(f.lhs(), false);
      out += uni ? " ∨ " : " | ";
      wrapped(f.rhs(), precedence(f.rhs()) <= 1);
      return;
  }
}

}  // namespace detail

inline std::string to_string(const Formula& f, Notation n = Notation::Ascii) {
  std::string out;
  detail::print_formula(f, n, out);
  return out;
}

inline std::string to_string(const FormulaSet& fs, Notation n = Notation::Ascii) {
  std::string out;
  bool first = true;
  for (const auto& f : fs) {
    if (!first) out += ", ";
    first = false;
    out += to_string(f, n);
  }
  return out;
}

inline std::string to_string(const Sequent& s, Notation n = Notation::Ascii) {
  std::string arrow = n == Notation::Unicode ? "⇒" : "=>";
  std::string l = to_string(s.left, n);
  std::string r = to_string(s.right, n);
  std::string out;
  if (!l.empty()) out += l + " ";
  out += arrow;
  if (!r.empty()) out += " " + r;
  return out;
}

/// Cell form `Γ₀ || Γ₁ || ...`; empty cells print as nothing.
inline std::string to_string(const NSequent& s, Notation n = Notation::Ascii) {
  std::string out;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    if (i > 0) out += " ||";
    std::string c = to_string(s.cells[i], n);
    if (!c.empty()) out += (i > 0 ? " " : "") + c;
  }
  return out;
}

struct ParseOptions {
  /// Accept single upper-case letters as metavariables (schematic rules).
  bool metavariables = false;
};

namespace detail {

class Lexer {
 public:
  enum class Tok { End, Var, Neg, Nabla, And, Or, LParen, RParen, Comma, Arrow, Turnstile, Bars, Semi, Colon, Slash, Number };

  struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
  };

  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const noexcept { return cur_; }
  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  bool starts(std::string_view s) const noexcept { return src_.substr(pos_, s.size()) == s; }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    auto emit = [&](Tok k, std::size_t len) {
      cur_ = {k, std::string(src_.substr(start, len)), start};
      pos_ += len;
    };
    if (pos_ >= src_.size()) {
      cur_ = {Tok::End, "", pos_};
      return;
    }
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_ + 1;
      while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) ++end;
      emit(Tok::Var, end - pos_);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_ + 1;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      emit(Tok::Number, end - pos_);
      return;
    }
    if (starts("=>")) return emit(Tok::Arrow, 2);
    if (starts("⇒")) return emit(Tok::Arrow, std::string_view("⇒").size());
    if (starts("|-")) return emit(Tok::Turnstile, 2);
    if (starts("⊢")) return emit(Tok::Turnstile, std::string_view("⊢").size());
    if (starts("||")) return emit(Tok::Bars, 2);
    if (starts("¬")) return emit(Tok::Neg, std::string_view("¬").size());
    if (starts("∇")) return emit(Tok::Nabla, std::string_view("∇").size());
    if (starts("∧")) return emit(Tok::And, std::string_view("∧").size());
    if (starts("∨")) return emit(Tok::Or, std::string_view("∨").size());
    switch (c) {
      case '~': return emit(Tok::Neg, 1);
      case '#': return emit(Tok::Nabla, 1);
      case '&': return emit(Tok::And, 1);
      case '|': return emit(Tok::Or, 1);
      case '(': return emit(Tok::LParen, 1);
      case ')': return emit(Tok::RParen, 1);
      case ',': return emit(Tok::Comma, 1);
      case ';': return emit(Tok::Semi, 1);
      case ':': return emit(Tok::Colon, 1);
      case '/': return emit(Tok::Slash, 1);
      default: break;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, "", 0};
};

class Parser {
 public:
  using Tok = Lexer::Tok;

  Parser(std::string_view src, ParseOptions opts) : lex_(src), opts_(opts) {}

  Formula formula() {
    Formula f = conj();
    while (lex_.peek().kind == Tok::Or) {
      lex_.next();
      f = Formula::disj(f, conj());
    }
    return f;
  }

  /// Comma-separated formulas up to (not including) a token outside `stop`.
  FormulaSet formula_list() {
    FormulaSet out;
    if (!starts_formula()) return out;
    out.insert(formula());
    while (lex_.peek().kind == Tok::Comma) {
      lex_.next();
      out.insert(formula());
    }
    return out;
  }

  Sequent sequent() {
    Sequent s;
    s.left = formula_list();
    expect(Tok::Arrow, "'=>'");
    s.right = formula_list();
    expect_end();
    return s;
  }

  bool starts_formula() const noexcept {
    switch (lex_.peek().kind) {
      case Tok::Var:
      case Tok::Neg:
      case Tok::Nabla:
      case Tok::LParen: return true;
      default: return false;
    }
  }

  Lexer& lexer() noexcept { return lex_; }

  void expect(Tok k, const char* what) {
    if (lex_.peek().kind != k) fail(std::string("expected ") + what);
    lex_.next();
  }

  void expect_end() {
    if (lex_.peek().kind != Tok::End) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& what) const {
    const auto& t = lex_.peek();
    throw ParseError(what + (t.kind == Tok::End ? " but reached end of input" : ", found '" + t.text + "'"), t.pos);
  }

 private:
  Formula conj() {
    Formula f = unary();
    while (lex_.peek().kind == Tok::And) {
      lex_.next();
      f = Formula::conj(f, unary());
    }
    return f;
  }

  Formula unary() {
    const auto k = lex_.peek().kind;
    if (k == Tok::Neg) {
      lex_.next();
      return Formula::neg(unary());
    }
    if (k == Tok::Nabla) {
      lex_.next();
      return Formula::nabla(unary());
    }
    return atom();
  }

  Formula atom() {
    const auto& t = lex_.peek();
    if (t.kind == Tok::Var) {
      if (is_object_variable_name(t.text) || (opts_.metavariables && is_metavariable_name(t.text)))
        return Formula::var(lex_.next().text);
      fail("invalid variable name");
    }
    if (t.kind == Tok::LParen) {
      lex_.next();
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    fail("expected a formula");
  }

  Lexer lex_;
  ParseOptions opts_;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text, ParseOptions opts = {}) {
  detail::Parser p(text, opts);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

inline Sequent parse_sequent(std::string_view text, ParseOptions opts = {}) {
  detail::Parser p(text, opts);
  return p.sequent();
}

/// Comma-separated formula list (either side of a sequent).
inline FormulaSet parse_formula_list(std::string_view text, ParseOptions opts = {}) {
  detail::Parser p(text, opts);
  FormulaSet out = p.formula_list();
  p.expect_end();
  return out;
}

namespace detail {

inline TruthValue parse_value_label(Parser& p) {
  using Tok = Lexer::Tok;
  auto& lex = p.lexer();
  auto t = lex.peek();
  std::string label;
  if (t.kind == Tok::Var) {
    label = lex.next().text;
  } else if (t.kind == Tok::Number) {
    label = lex.next().text;
    if (lex.peek().kind == Tok::Slash) {
      lex.next();
      if (lex.peek().kind != Tok::Number) p.fail("expected a denominator");
      label += "/" + lex.next().text;
    }
  } else {
    p.fail("expected a truth value");
  }
  auto v = parse_truth_value(label);
  if (!v) throw ParseError("unknown truth value '" + label + "'", t.pos);
  return *v;
}

}  // namespace detail

/// Six-valued n-sequent, in cell form or signed-list form (see file comment).
inline NSequent parse_nsequent(std::string_view text, ParseOptions opts = {}) {
  using Tok = detail::Lexer::Tok;
  const bool cell_form = text.find("||") != std::string_view::npos ||
                         text.find(':') == std::string_view::npos;
  NSequent out(kAllTruthValues.size());
  detail::Parser p(text, opts);
  if (cell_form) {
    std::size_t cell = 0;
    while (true) {
      out.cells[cell] = p.formula_list();
      if (p.lexer().peek().kind != Tok::Bars) break;
      p.lexer().next();
      if (++cell >= out.cells.size()) p.fail("too many cells");
    }
    p.expect_end();
    if (cell + 1 != out.cells.size())
      throw ParseError("expected 6 cells, found " + std::to_string(cell + 1), text.size());
    return out;
  }
  while (p.lexer().peek().kind != Tok::End) {
    TruthValue v = detail::parse_value_label(p);
    p.expect(Tok::Colon, "':'");
    out.cells[index_of(v)].insert(p.formula());
    if (p.lexer().peek().kind == Tok::Semi) p.lexer().next();
    else break;
  }
  p.expect_end();
  return out;
}

/// Reads one sequent per line. Blank lines and lines whose first character
/// is '#' are skipped (so a sequent starting with ∇ needs leading space or
/// the Unicode symbol).
inline std::vector<Sequent> read_sequent_file(std::istream& in, ParseOptions opts = {}) {
  std::vector<Sequent> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_sequent(line, opts));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position());
    }
  }
  return out;
}

}  // namespace six
