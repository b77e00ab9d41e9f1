// SPDX-License-Identifier: Apache-2.0
#pragma once

// Hand-built proofs and fixture sequents shared by the unit and acceptance tests.

#include <string>
#include <utility>
#include <vector>

#include "sixlogic/sixlogic.hpp"

namespace fixtures {

using namespace six;

inline Formula F(const std::string& s) { return parse_formula(s); }
inline Sequent S(const std::string& s) { return parse_sequent(s); }

inline ProofTree node(const std::string& seq, RuleTag rule, const std::string& principal,
                      std::vector<ProofTree> children) {
  return {S(seq), rule, F(principal), std::move(children)};
}

inline ProofTree prove(const Sequent& s) {
  auto out = decide_backward(s);
  if (!out.witness) throw Error("fixture sequent not provable: " + to_string(s));
  return *out.witness;
}

// p | q => ~(~p & ~q), cut-free.
inline ProofTree disjunction_proof() {
  const ProofTree left =
      node("p => ~~p, ~~q", RuleTag::NegNegRight, "~~p",
           {node("p => p, ~~q", RuleTag::WeakenRight, "~~q", {axiom_proof(F("p"))})});
  const ProofTree right =
      node("q => ~~p, ~~q", RuleTag::NegNegRight, "~~q",
           {node("q => ~~p, q", RuleTag::WeakenRight, "~~p", {axiom_proof(F("q"))})});
  return node("p | q => ~(~p & ~q)", RuleTag::NegAndRight, "~(~p & ~q)",
              {node("p | q => ~~p, ~~q", RuleTag::OrLeft, "p | q", {left, right})});
}

// #~#(p & q) => ~#p | ~#q with the table form of the nabla-neg-nabla rule.
inline ProofTree worked_proof() {
  const ProofTree a = node("=> ~#p, #p, ~#q", RuleTag::NegNablaRight, "~#p",
                           {weaken_to(axiom_proof(F("#p")), S("#p => #p, ~#q"))});
  const ProofTree b = node("=> ~#q, #q, ~#p", RuleTag::NegNablaRight, "~#q",
                           {weaken_to(axiom_proof(F("#q")), S("#q => #q, ~#p"))});
  const ProofTree conj = node("=> #(p & q), ~#p, ~#q", RuleTag::NablaAndRight, "#(p & q)", {a, b});
  return node("#~#(p & q) => ~#p | ~#q", RuleTag::OrRight, "~#p | ~#q",
              {node("#~#(p & q) => ~#p, ~#q", RuleTag::NablaNegNablaLeft, "#~#(p & q)", {conj})});
}

// The same derivation with the premise shape of the pre-shrinking rule
// (Γ, ~α => Δ, α, #α); not a proof in the final calculus.
inline ProofTree worked_proof_old_rule() {
  const ProofTree a =
      node("~(p & q) => ~#p, #p, p & q, ~#q", RuleTag::NegNablaRight, "~#p",
           {weaken_to(axiom_proof(F("#p")), S("~(p & q), #p => #p, p & q, ~#q"))});
  const ProofTree b =
      node("~(p & q) => ~#q, #q, p & q, ~#p", RuleTag::NegNablaRight, "~#q",
           {weaken_to(axiom_proof(F("#q")), S("~(p & q), #q => #q, p & q, ~#p"))});
  const ProofTree conj =
      node("~(p & q) => #(p & q), ~#p, p & q, ~#q", RuleTag::NablaAndRight, "#(p & q)", {a, b});
  return node("#~#(p & q) => ~#p | ~#q", RuleTag::OrRight, "~#p | ~#q",
              {node("#~#(p & q) => ~#p, ~#q", RuleTag::NablaNegNablaLeft, "#~#(p & q)", {conj})});
}

inline FormulaSet worked_gsub() {
  FormulaSet out;
  for (const char* f : {"#~#(p & q)", "~#(p & q)", "~~#(p & q)", "~#p | ~#q", "#(p & q)", "~(p & q)", "p & q", "~#p",
                        "~#q", "#p", "#q", "~p", "~q", "p", "q"})
    out.insert(F(f));
  return out;
}

// Sequent text and expected provability.
inline std::vector<std::pair<std::string, bool>> decision_fixtures() {
  return {
      {"p | q => ~(~p & ~q)", true},
      {"#~#(p & q) => ~#p | ~#q", true},
      {"p => #p", true},
      {"=> #p | ~#p", true},
      {"#(p | q) => #p | #q", true},
      {"=> ~#(~#(p & ~p) & ~~#(p & ~p))", true},
      {"=>", false},
      {"p, ~p => q", false},
      {"=> p & ~p", false},
      {"=> p | ~p", false},
  };
}

}  // namespace fixtures
