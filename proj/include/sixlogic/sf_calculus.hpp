// SPDX-License-Identifier: Apache-2.0
#pragma once

// The generic signed (n-sequent) calculus of a finite matrix: one rule
//
//     Ω, a₁:α₁   …   Ω, a_k:α_k
//     ───────────────────────────
//        Ω, f̂(a₁…a_k) : f(α₁…α_k)
//
// per connective f and input tuple, the axiom 𝒯:α (α in every cell), and
// weakening.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sixlogic/error.hpp"
#include "sixlogic/matrix.hpp"
#include "sixlogic/semantics.hpp"
#include "sixlogic/sequent.hpp"
#include "sixlogic/syntax.hpp"

namespace six {

struct SignedRule {
  Connective connective;
  std::vector<Value> inputs;
  Value output;

  friend bool operator==(const SignedRule& a, const SignedRule& b) {
    return a.connective == b.connective && a.inputs == b.inputs && a.output == b.output;
  }
};

inline std::string rule_label(const SignedRule& r, const FiniteMatrix& m) {
  std::string out = "(" + std::string(connective_name(r.connective)) + "_{";
  for (std::size_t i = 0; i < r.inputs.size(); ++i) {
    if (i) out += ",";
    out += m.name(r.inputs[i]);
  }
  return out + "})";
}

/// One rule per (connective, input tuple), connectives in table order.
inline std::vector<SignedRule> generate_sf(const FiniteMatrix& m) {
  std::vector<SignedRule> out;
  const auto n = static_cast<Value>(m.size());
  for (Connective c : m.connectives()) {
    if (arity(c) == 1) {
      for (Value x = 0; x < n; ++x) out.push_back({c, {x}, m.apply(c, x)});
    } else {
      for (Value x = 0; x < n; ++x)
        for (Value y = 0; y < n; ++y) out.push_back({c, {x, y}, m.apply(c, x, y)});
    }
  }
  return out;
}

namespace detail {

inline std::vector<SignedFormula> principal_signed(const SignedRule& rule, const std::vector<Formula>& principal) {
  std::vector<SignedFormula> out;
  for (std::size_t i = 0; i < rule.inputs.size(); ++i) out.push_back({rule.inputs[i], principal[i]});
  return out;
}

inline SignedFormula conclusion_signed(const SignedRule& rule, const std::vector<Formula>& principal) {
  return {rule.output, Formula::apply(rule.connective, principal)};
}

/// Whether `premises` are exactly Ω ∪ {sᵢ} for the given context Ω.
inline bool premises_match(const NSequent& context, const std::vector<SignedFormula>& signed_inputs,
                           const std::vector<NSequent>& premises) {
  for (std::size_t i = 0; i < premises.size(); ++i)
    if (context.with(signed_inputs[i]) != premises[i]) return false;
  return true;
}

}  // namespace detail

/// Applies a signed rule to premises Ω ∪ {aᵢ : principal[i]} and returns
/// Ω ∪ {output : connective(principal…)}.
inline NSequent apply_sf(const SignedRule& rule, const std::vector<NSequent>& premises,
                         const std::vector<Formula>& principal) {
  if (premises.size() != rule.inputs.size() || principal.size() != rule.inputs.size())
    throw InvalidArgument("rule needs " + std::to_string(rule.inputs.size()) + " premises and principal formulas");
  const auto signed_inputs = detail::principal_signed(rule, principal);
  for (std::size_t i = 0; i < premises.size(); ++i)
    if (!premises[i].contains(signed_inputs[i]))
      throw SignedFormulaMissingError("premise " + std::to_string(i + 1) + " lacks its principal signed formula");
  NSequent context(premises.front().arity());
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (premises[i].arity() != context.arity()) throw ContextMismatchError("premises have different arities");
    const NSequent rest = premises[i].without(signed_inputs[i]);
    for (std::size_t c = 0; c < rest.cells.size(); ++c) context.cells[c].insert(rest.cells[c].begin(), rest.cells[c].end());
  }
  if (!detail::premises_match(context, signed_inputs, premises))
    throw ContextMismatchError("premises do not share a common context");
  return context.with(detail::conclusion_signed(rule, principal));
}

/// Per-valuation soundness of a signed rule over metavariables: whenever
/// every premise signed formula holds, the conclusion holds.
inline bool sf_rule_locally_sound(const SignedRule& rule, const FiniteMatrix& m) {
  std::vector<Formula> metas;
  for (std::size_t i = 0; i < rule.inputs.size(); ++i) metas.push_back(Formula::var(std::string(1, char('A' + i))));
  const Formula concl = Formula::apply(rule.connective, metas);
  std::set<std::string> vars;
  for (const auto& f : metas) vars.insert(f.name());
  return for_each_assignment(vars, m, [&](const Assignment& a) {
    for (std::size_t i = 0; i < metas.size(); ++i)
      if (eval(metas[i], a, m) != rule.inputs[i]) return true;
    return eval(concl, a, m) == rule.output;
  });
}

/// Derivation in the signed calculus.
struct SFDerivation {
  enum class Step { Axiom, Weakening, Rule };

  NSequent conclusion;
  Step step = Step::Axiom;
  std::optional<SignedRule> rule;
  std::vector<Formula> principal;
  std::vector<SFDerivation> children;
};

struct CheckResult {
  bool ok = true;
  /// Child indices from the root to the first failing node.
  std::vector<std::size_t> path;
  std::string message;

  explicit operator bool() const noexcept { return ok; }

  static CheckResult failure(std::vector<std::size_t> path, std::string message) {
    return {false, std::move(path), std::move(message)};
  }
};

namespace detail {

inline CheckResult check_sf_node(const SFDerivation& d, const FiniteMatrix& m, std::vector<std::size_t>& path) {
  if (d.conclusion.arity() != m.size()) return CheckResult::failure(path, "n-sequent arity differs from the matrix");
  switch (d.step) {
    case SFDerivation::Step::Axiom: {
      if (!d.children.empty()) return CheckResult::failure(path, "axiom with premises");
      // 𝒯 : α: one formula occupying every cell, nothing else
      const auto& first = d.conclusion.cells.front();
      if (first.size() != 1) return CheckResult::failure(path, "axiom must be a single formula in every cell");
      if (d.conclusion != axiom_nsequent(*first.begin(), m.size()))
        return CheckResult::failure(path, "axiom must be a single formula in every cell");
      return {};
    }
    case SFDerivation::Step::Weakening: {
      if (d.children.size() != 1) return CheckResult::failure(path, "weakening needs exactly one premise");
      if (!d.children[0].conclusion.included_in(d.conclusion))
        return CheckResult::failure(path, "weakening may only add signed formulas");
      break;
    }
    case SFDerivation::Step::Rule: {
      if (!d.rule) return CheckResult::failure(path, "rule step without a rule");
      const SignedRule& r = *d.rule;
      if (m.apply(r.connective, r.inputs) != r.output)
        return CheckResult::failure(path, "rule output disagrees with the matrix table");
      if (d.children.size() != r.inputs.size() || d.principal.size() != r.inputs.size())
        return CheckResult::failure(path, "wrong number of premises or principal formulas");
      const auto signed_inputs = principal_signed(r, d.principal);
      const auto out = conclusion_signed(r, d.principal);
      std::vector<NSequent> premises;
      for (const auto& c : d.children) premises.push_back(c.conclusion);
      for (std::size_t i = 0; i < premises.size(); ++i)
        if (!premises[i].contains(signed_inputs[i]))
          return CheckResult::failure(path, "premise " + std::to_string(i + 1) + " lacks its principal signed formula");
      if (!d.conclusion.contains(out)) return CheckResult::failure(path, "conclusion lacks the introduced signed formula");
      // Ω is the conclusion minus the introduced formula, or the whole
      // conclusion when Ω already contained it.
      if (!premises_match(d.conclusion.without(out), signed_inputs, premises) &&
          !premises_match(d.conclusion, signed_inputs, premises))
        return CheckResult::failure(path, "premises and conclusion do not share a context");
      break;
    }
  }
  for (std::size_t i = 0; i < d.children.size(); ++i) {
    path.push_back(i);
    auto r = check_sf_node(d.children[i], m, path);
    if (!r) return r;
    path.pop_back();
  }
  return {};
}

}  // namespace detail

/// Checks every node of a signed derivation; reports the first failing node.
inline CheckResult check_sf(const SFDerivation& d, const FiniteMatrix& m) {
  std::vector<std::size_t> path;
  return detail::check_sf_node(d, m, path);
}

}  // namespace six
