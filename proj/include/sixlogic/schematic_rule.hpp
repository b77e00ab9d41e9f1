// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>
#include <utility>

#include "sixlogic/sequent.hpp"
#include "sixlogic/syntax.hpp"

namespace six {

/// Context-free inference rule over metavariables A, B, ...: a finite set of
/// local premise sequents and one local conclusion. Contexts are implicit;
/// premises are kept as a canonical (sorted, deduplicated) set.
struct SchematicRule {
  std::string name;
  std::set<Sequent> premises;
  Sequent conclusion;

  /// Rules are compared by content; the name is a label only.
  friend bool operator==(const SchematicRule& a, const SchematicRule& b) {
    return a.premises == b.premises && a.conclusion == b.conclusion;
  }
};

inline Formula metavariable(char c) { return Formula::var(std::string(1, c)); }

inline std::string to_string(const SchematicRule& r, Notation n = Notation::Ascii) {
  std::string out;
  bool first = true;
  for (const auto& p : r.premises) {
    if (!first) out += "  ";
    first = false;
    out += "[" + to_string(p, n) + "]";
  }
  out += first ? "/ " : " / ";
  out += "[" + to_string(r.conclusion, n) + "]";
  return out;
}

/// Parses `[Γ₁ => Δ₁] [Γ₂ => Δ₂] / [Γ => Δ]`, metavariables allowed.
inline SchematicRule parse_schematic_rule(std::string_view text, std::string name = {}) {
  const auto slash = text.rfind('/');
  if (slash == std::string_view::npos) throw ParseError("expected '/' between premises and conclusion", text.size());
  SchematicRule r;
  r.name = std::move(name);
  const ParseOptions opts{.metavariables = true};
  auto bracketed = [&](std::string_view part, std::size_t offset, auto&& sink) {
    std::size_t pos = 0;
    while (true) {
      const auto open = part.find('[', pos);
      if (open == std::string_view::npos) break;
      const auto close = part.find(']', open);
      if (close == std::string_view::npos) throw ParseError("unterminated '['", offset + open);
      try {
        sink(parse_sequent(part.substr(open + 1, close - open - 1), opts));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), offset + open + 1 + e.position());
      }
      pos = close + 1;
    }
  };
  bracketed(text.substr(0, slash), 0, [&](Sequent s) { r.premises.insert(std::move(s)); });
  int conclusions = 0;
  bracketed(text.substr(slash + 1), slash + 1, [&](Sequent s) {
    r.conclusion = std::move(s);
    ++conclusions;
  });
  if (conclusions != 1) throw ParseError("expected exactly one bracketed conclusion", slash + 1);
  return r;
}

}  // namespace six
