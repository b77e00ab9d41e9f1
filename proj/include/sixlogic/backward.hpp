// SPDX-License-Identifier: Apache-2.0
#pragma once

// Goal-directed proof search in GSix. A sequent with a formula on both sides
// closes by axiom and weakening; otherwise every (principal, rule) pair is
// tried with the principal removed from the premises' context. Every premise
// formula is lighter than the principal, so the search terminates.

#include <cstddef>
#include <optional>
#include <set>
#include <string>

#include "sixlogic/error.hpp"
#include "sixlogic/gsix_rules.hpp"
#include "sixlogic/outcome.hpp"
#include "sixlogic/proof_tree.hpp"

namespace six {

struct BackwardLimits {
  std::size_t max_nodes = 5'000'000;
};

class BackwardProver {
 public:
  explicit BackwardProver(BackwardLimits limits = {}) : limits_(limits) {}

  /// Throws ResourceError when the node budget runs out.
  std::optional<ProofTree> prove(const Sequent& s) {
    if (auto ax = axiom_weakened(s)) return ax;
    if (failed_.count(s)) return std::nullopt;
    if (++visited_ > limits_.max_nodes)
      throw ResourceError("backward search visited more than " + std::to_string(limits_.max_nodes) + " sequents");
    for (const Side side : {Side::Left, Side::Right}) {
      const FormulaSet& principals = side == Side::Left ? s.left : s.right;
      for (const auto& phi : principals) {
        for (const auto& rule : gsix_logic_rules()) {
          if (rule.side != side) continue;
          const auto adds = rule.premises(phi);
          if (!adds) continue;
          Sequent ctx = s;
          (side == Side::Left ? ctx.left : ctx.right).erase(phi);
          ProofTree node{s, rule.tag, phi, {}};
          bool ok = true;
          for (const auto& a : *adds) {
            Sequent premise = ctx;
            premise.left.insert(a.left.begin(), a.left.end());
            premise.right.insert(a.right.begin(), a.right.end());
            auto sub = prove(premise);
            if (!sub) {
              ok = false;
              break;
            }
            node.children.push_back(std::move(*sub));
          }
          if (ok) return node;
        }
      }
    }
    failed_.insert(s);
    return std::nullopt;
  }

  std::size_t visited() const noexcept { return visited_; }
  std::size_t failures() const noexcept { return failed_.size(); }

 private:
  BackwardLimits limits_;
  std::set<Sequent> failed_;
  std::size_t visited_ = 0;
};

inline DecisionOutcome decide_backward(const Sequent& s, const BackwardLimits& limits = {}) {
  BackwardProver prover(limits);
  DecisionOutcome out;
  out.engine = "backward";
  try {
    auto proof = prover.prove(s);
    out.verdict = proof ? Verdict::Provable : Verdict::NotProvable;
    out.witness = std::move(proof);
  } catch (const ResourceError& e) {
    out.verdict = Verdict::ResourceExceeded;
    out.details = e.what();
  }
  out.stats = {prover.visited(), prover.failures()};
  return out;
}

}  // namespace six
