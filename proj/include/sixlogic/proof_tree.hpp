// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sixlogic/gsix_rules.hpp"
#include "sixlogic/gsub.hpp"
#include "sixlogic/sequent.hpp"
#include "sixlogic/sf_calculus.hpp"
#include "sixlogic/syntax.hpp"

namespace six {

/// A GSix derivation. `principal` is the introduced formula of a logic rule,
/// the added formula of a weakening, the axiom formula, or the cut formula.
struct ProofTree {
  Sequent sequent;
  RuleTag rule = RuleTag::Axiom;
  std::optional<Formula> principal;
  std::vector<ProofTree> children;

  std::size_t node_count() const {
    std::size_t n = 1;
    for (const auto& c : children) n += c.node_count();
    return n;
  }

  std::size_t height() const {
    std::size_t h = 0;
    for (const auto& c : children) h = std::max(h, c.height());
    return h + 1;
  }

  template <typename Visit>
  void for_each(Visit&& visit) const {
    visit(*this);
    for (const auto& c : children) c.for_each(visit);
  }
};

inline ProofTree axiom_proof(const Formula& f) { return {Sequent({f}, {f}), RuleTag::Axiom, f, {}}; }

/// Extends a proof of a subsequent of `target` to a proof of `target` by
/// single-formula weakenings, left side first.
inline ProofTree weaken_to(ProofTree proof, const Sequent& target) {
  if (!proof.sequent.subsumes(target)) throw InvalidArgument("weakening target does not contain the proved sequent");
  for (const auto& f : target.left)
    if (!proof.sequent.left.count(f)) {
      Sequent s = proof.sequent;
      s.left.insert(f);
      proof = ProofTree{s, RuleTag::WeakenLeft, f, {std::move(proof)}};
    }
  for (const auto& f : target.right)
    if (!proof.sequent.right.count(f)) {
      Sequent s = proof.sequent;
      s.right.insert(f);
      proof = ProofTree{s, RuleTag::WeakenRight, f, {std::move(proof)}};
    }
  return proof;
}

/// Axiom on a common formula, weakened to the whole sequent.
inline std::optional<ProofTree> axiom_weakened(const Sequent& s) {
  for (const auto& f : s.left)
    if (s.right.count(f)) return weaken_to(axiom_proof(f), s);
  return std::nullopt;
}

struct ProofCheckOptions {
  bool allow_cut = false;
};

namespace detail {

inline std::string describe_expected(const Sequent& ctx, const std::vector<PremiseAdditions>& adds) {
  std::string out;
  for (const auto& a : adds) {
    Sequent s = ctx;
    s.left.insert(a.left.begin(), a.left.end());
    s.right.insert(a.right.begin(), a.right.end());
    out += (out.empty() ? "" : "  |  ") + to_string(s);
  }
  return out;
}

inline bool premises_equal(const Sequent& ctx, const std::vector<PremiseAdditions>& adds,
                           const std::vector<ProofTree>& children) {
  for (std::size_t i = 0; i < adds.size(); ++i) {
    Sequent s = ctx;
    s.left.insert(adds[i].left.begin(), adds[i].left.end());
    s.right.insert(adds[i].right.begin(), adds[i].right.end());
    if (s != children[i].sequent) return false;
  }
  return true;
}

inline CheckResult check_node(const ProofTree& t, const ProofCheckOptions& opt, std::vector<std::size_t>& path) {
  const Sequent& s = t.sequent;
  auto fail = [&](const std::string& msg) {
    return CheckResult::failure(path, std::string(rule_id(t.rule)) + " at " + to_string(s) + ": " + msg);
  };
  switch (t.rule) {
    case RuleTag::Axiom: {
      if (!t.children.empty()) return fail("axiom has premises");
      if (s.left.size() != 1 || s.left != s.right) return fail("axiom must have the form A => A");
      if (t.principal && *t.principal != *s.left.begin()) return fail("principal differs from the axiom formula");
      return {};
    }
    case RuleTag::WeakenLeft:
    case RuleTag::WeakenRight: {
      if (t.children.size() != 1) return fail("weakening needs one premise");
      const Sequent& c = t.children[0].sequent;
      const bool left = t.rule == RuleTag::WeakenLeft;
      const FormulaSet& grown = left ? s.left : s.right;
      const FormulaSet& base = left ? c.left : c.right;
      if ((left ? s.right != c.right : s.left != c.left)) return fail("weakening changed the other side");
      if (grown.size() != base.size() + 1 || !std::includes(grown.begin(), grown.end(), base.begin(), base.end()))
        return fail("weakening must add exactly one formula");
      FormulaSet added;
      std::set_difference(grown.begin(), grown.end(), base.begin(), base.end(), std::inserter(added, added.end()));
      if (t.principal && *t.principal != *added.begin()) return fail("principal differs from the added formula");
      break;
    }
    case RuleTag::Cut: {
      if (!opt.allow_cut) return fail("cut is disabled");
      if (t.children.size() != 2 || !t.principal) return fail("cut needs two premises and a cut formula");
      Sequent a = s, b = s;
      a.right.insert(*t.principal);
      b.left.insert(*t.principal);
      if (t.children[0].sequent != a || t.children[1].sequent != b)
        return fail("cut premises must be " + to_string(a) + " and " + to_string(b));
      break;
    }
    default: {
      const LogicRule& r = logic_rule(t.rule);
      if (!t.principal) return fail("missing principal formula");
      const Formula& phi = *t.principal;
      const FormulaSet& side = r.side == Side::Left ? s.left : s.right;
      if (!side.count(phi))
        return fail("principal " + to_string(phi) + " is not on the " + (r.side == Side::Left ? "left" : "right"));
      const auto adds = r.premises(phi);
      if (!adds) return fail("principal " + to_string(phi) + " does not have the rule's shape");
      if (t.children.size() != adds->size())
        return fail("expected " + std::to_string(adds->size()) + " premises, got " + std::to_string(t.children.size()));
      Sequent ctx = s;
      (r.side == Side::Left ? ctx.left : ctx.right).erase(phi);
      if (!premises_equal(ctx, *adds, t.children) && !premises_equal(s, *adds, t.children))
        return fail("premises should be " + describe_expected(ctx, *adds));
      break;
    }
  }
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    path.push_back(i);
    auto r = check_node(t.children[i], opt, path);
    if (!r) return r;
    path.pop_back();
  }
  return {};
}

}  // namespace detail

inline CheckResult check_proof(const ProofTree& t, const ProofCheckOptions& opt = {}) {
  std::vector<std::size_t> path;
  return detail::check_node(t, opt, path);
}

inline CheckResult check_proof(const ProofTree& t, bool allow_cut) { return check_proof(t, ProofCheckOptions{allow_cut}); }

/// Every sequent of the proof uses only generalized subformulas of the root.
inline bool within_gsub(const ProofTree& t, const GsubOptions& opt = {}) {
  const FormulaSet g = gsub_sequent(t.sequent, opt);
  bool ok = true;
  t.for_each([&](const ProofTree& n) {
    for (const auto* side : {&n.sequent.left, &n.sequent.right})
      for (const auto& f : *side) ok = ok && g.count(f);
  });
  return ok;
}

}  // namespace six
