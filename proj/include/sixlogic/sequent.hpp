// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sixlogic/formula.hpp"
#include "sixlogic/truth_value.hpp"

namespace six {

/// Two-sided sequent Γ ⇒ Δ over finite formula sets.
struct Sequent {
  FormulaSet left;
  FormulaSet right;

  Sequent() = default;
  Sequent(FormulaSet l, FormulaSet r) : left(std::move(l)), right(std::move(r)) {}
  Sequent(std::initializer_list<Formula> l, std::initializer_list<Formula> r) : left(l), right(r) {}

  bool empty() const noexcept { return left.empty() && right.empty(); }

  /// True when some formula occurs on both sides.
  bool has_common_formula() const {
    auto a = left.begin();
    auto b = right.begin();
    while (a != left.end() && b != right.end()) {
      if (*a < *b) ++a;
      else if (*b < *a) ++b;
      else return true;
    }
    return false;
  }

  /// Sidewise inclusion: this sequent weakens to `other`.
  bool subsumes(const Sequent& other) const {
    return std::includes(other.left.begin(), other.left.end(), left.begin(), left.end()) &&
           std::includes(other.right.begin(), other.right.end(), right.begin(), right.end());
  }

  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.left == b.left && a.right == b.right;
  }
  friend bool operator!=(const Sequent& a, const Sequent& b) { return !(a == b); }
  friend bool operator<(const Sequent& a, const Sequent& b) {
    if (a.left != b.left) return a.left < b.left;
    return a.right < b.right;
  }
};

inline std::set<std::string> variables(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& f : s.left) collect_variables(f, out);
  for (const auto& f : s.right) collect_variables(f, out);
  return out;
}

inline FormulaSet set_union(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

/// A signed formula t : ψ.
struct SignedFormula {
  Value value;
  Formula formula;

  friend bool operator==(const SignedFormula& a, const SignedFormula& b) {
    return a.value == b.value && a.formula == b.formula;
  }
  friend bool operator<(const SignedFormula& a, const SignedFormula& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.formula < b.formula;
  }
};

/// n-sequent Γ₀ | … | Γₙ₋₁: one formula set per truth value of a matrix.
struct NSequent {
  std::vector<FormulaSet> cells;

  NSequent() = default;
  explicit NSequent(std::size_t n) : cells(n) {}
  explicit NSequent(std::vector<FormulaSet> c) : cells(std::move(c)) {}

  std::size_t arity() const noexcept { return cells.size(); }

  bool contains(const SignedFormula& s) const {
    return s.value < cells.size() && cells[s.value].count(s.formula) > 0;
  }

  NSequent with(const SignedFormula& s) const {
    NSequent out = *this;
    out.cells.at(s.value).insert(s.formula);
    return out;
  }

  NSequent without(const SignedFormula& s) const {
    NSequent out = *this;
    out.cells.at(s.value).erase(s.formula);
    return out;
  }

  /// Signed-formula view {t : ψ | ψ ∈ cells(t)}.
  std::set<SignedFormula> signed_formulas() const {
    std::set<SignedFormula> out;
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (const auto& f : cells[i]) out.insert({static_cast<Value>(i), f});
    return out;
  }

  /// Cellwise inclusion.
  bool included_in(const NSequent& other) const {
    if (cells.size() != other.cells.size()) return false;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (!std::includes(other.cells[i].begin(), other.cells[i].end(), cells[i].begin(), cells[i].end()))
        return false;
    return true;
  }

  std::size_t formula_count() const noexcept {
    std::size_t n = 0;
    for (const auto& c : cells) n += c.size();
    return n;
  }

  friend bool operator==(const NSequent& a, const NSequent& b) { return a.cells == b.cells; }
  friend bool operator!=(const NSequent& a, const NSequent& b) { return !(a == b); }
  friend bool operator<(const NSequent& a, const NSequent& b) { return a.cells < b.cells; }
};

inline std::set<std::string> variables(const NSequent& s) {
  std::set<std::string> out;
  for (const auto& cell : s.cells)
    for (const auto& f : cell) collect_variables(f, out);
  return out;
}

/// The axiom 𝒯 : α, with α in every one of the n cells.
inline NSequent axiom_nsequent(const Formula& alpha, std::size_t n) {
  NSequent out(n);
  for (auto& cell : out.cells) cell.insert(alpha);
  return out;
}

}  // namespace six
