// SPDX-License-Identifier: Apache-2.0
#pragma once

// Forward saturation inside the space of sequents over G = gsub(goal).
//
// Two representations of the same fixpoint:
//   * Literal: S₀ = {φ⇒φ | φ ∈ G}, S_{j+1} = S_j ∪ LowSeq(S_j), one bit per
//     sequent of the 4^|G| space. Exact transcription, small G only.
//   * Subsumption: the derivable set is closed upward under weakening, so it
//     is kept as its antichain of minimal elements and grown by a given-clause
//     loop. A rule instance with premises P₁…P_k contributes the minimal
//     conclusion (P₁∖A₁) ∪ … ∪ (P_k∖A_k) + φ.
// Both answer provable iff the goal lies in the fixpoint.

#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "sixlogic/error.hpp"
#include "sixlogic/gsix_rules.hpp"
#include "sixlogic/gsub.hpp"
#include "sixlogic/outcome.hpp"
#include "sixlogic/proof_tree.hpp"

namespace six {

struct SaturationLimits {
  std::size_t max_gsub = 40;
  std::size_t max_literal_gsub = 8;
  std::size_t max_clauses = 500'000;
  std::size_t max_iterations = 1'000'000;
  bool extract_proof = true;
  GsubOptions gsub;
};

namespace detail {

struct Mask {
  std::uint64_t left = 0;
  std::uint64_t right = 0;

  bool subset_of(const Mask& o) const noexcept { return (left & ~o.left) == 0 && (right & ~o.right) == 0; }
  bool meets(const Mask& o) const noexcept { return (left & o.left) || (right & o.right); }
  Mask minus(const Mask& o) const noexcept { return {left & ~o.left, right & ~o.right}; }
  Mask operator|(const Mask& o) const noexcept { return {left | o.left, right | o.right}; }
  friend bool operator==(const Mask& a, const Mask& b) noexcept { return a.left == b.left && a.right == b.right; }
};

/// A logic rule instance whose principal and premise formulas all lie in G.
struct Template {
  RuleTag tag;
  Side side;
  std::size_t principal;
  Mask principal_mask;
  std::vector<Mask> adds;
};

class Space {
 public:
  explicit Space(const FormulaSet& g) : formulas_(g.begin(), g.end()) {
    if (formulas_.size() > 64) throw ResourceError("more than 64 generalized subformulas");
    for (std::size_t i = 0; i < formulas_.size(); ++i) {
      const Formula& phi = formulas_[i];
      for (const auto& rule : gsix_logic_rules()) {
        const auto adds = rule.premises(phi);
        if (!adds) continue;
        Template t{rule.tag, rule.side, i, bit_on(rule.side, i), {}};
        bool inside = true;
        for (const auto& a : *adds) {
          Mask m;
          for (const auto& f : a.left) inside = inside && set(m.left, f);
          for (const auto& f : a.right) inside = inside && set(m.right, f);
          t.adds.push_back(m);
        }
        if (inside) templates_.push_back(std::move(t));
      }
    }
  }

  std::size_t size() const noexcept { return formulas_.size(); }
  const Formula& formula(std::size_t i) const { return formulas_[i]; }
  const std::vector<Template>& templates() const noexcept { return templates_; }

  std::optional<std::size_t> index(const Formula& f) const {
    auto it = std::lower_bound(formulas_.begin(), formulas_.end(), f);
    if (it == formulas_.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - formulas_.begin());
  }

  Mask encode(const Sequent& s) const {
    Mask m;
    for (const auto& f : s.left)
      if (!set(m.left, f)) throw InvalidArgument("formula outside the generalized subformulas");
    for (const auto& f : s.right)
      if (!set(m.right, f)) throw InvalidArgument("formula outside the generalized subformulas");
    return m;
  }

  Sequent decode(const Mask& m) const {
    Sequent s;
    for (std::size_t i = 0; i < formulas_.size(); ++i) {
      if (m.left >> i & 1) s.left.insert(formulas_[i]);
      if (m.right >> i & 1) s.right.insert(formulas_[i]);
    }
    return s;
  }

  static Mask bit_on(Side side, std::size_t i) {
    const std::uint64_t b = std::uint64_t{1} << i;
    return side == Side::Left ? Mask{b, 0} : Mask{0, b};
  }

 private:
  bool set(std::uint64_t& bits, const Formula& f) const {
    auto i = index(f);
    if (!i) return false;
    bits |= std::uint64_t{1} << *i;
    return true;
  }

  std::vector<Formula> formulas_;
  std::vector<Template> templates_;
};

/// Proof of the sequent `concl` by one template application whose premises
/// are proved by `premise_proofs` (each a subsequent of its premise).
inline ProofTree apply_template(const Space& sp, const Template& t, const Mask& concl,
                                std::vector<ProofTree> premise_proofs) {
  const Sequent s = sp.decode(concl);
  const Formula& phi = sp.formula(t.principal);
  Mask ctx = concl.minus(t.principal_mask);
  for (std::size_t i = 0; i < t.adds.size(); ++i)
    if (!sp.encode(premise_proofs[i].sequent).subset_of(ctx | t.adds[i])) ctx = concl;
  ProofTree node{s, t.tag, phi, {}};
  for (std::size_t i = 0; i < t.adds.size(); ++i)
    node.children.push_back(weaken_to(std::move(premise_proofs[i]), sp.decode(ctx | t.adds[i])));
  return node;
}

}  // namespace detail

/// Given-clause saturation over minimal derivable sequents.
inline DecisionOutcome decide_saturation(const Sequent& goal, const SaturationLimits& limits = {}) {
  DecisionOutcome out;
  out.engine = "saturation";
  const FormulaSet g = gsub_sequent(goal, limits.gsub);
  if (g.size() > limits.max_gsub)
    return DecisionOutcome::resource_exceeded(
        out.engine, "|gsub| = " + std::to_string(g.size()) + " exceeds the cap of " + std::to_string(limits.max_gsub));
  using detail::Mask;
  const detail::Space sp(g);
  const Mask target = sp.encode(goal);

  struct Clause {
    Mask seq;
    int tmpl = -1;  // -1 for an axiom
    std::vector<std::size_t> from;
    bool alive = true;
  };
  std::vector<Clause> clauses;
  std::vector<std::size_t> active;
  std::deque<std::size_t> queue;

  for (std::size_t i = 0; i < sp.size(); ++i) {
    const std::uint64_t b = std::uint64_t{1} << i;
    clauses.push_back({{b, b}, -1, {}, true});
    queue.push_back(i);
  }

  auto subsumed_by_active = [&](const Mask& m) {
    for (std::size_t a : active)
      if (clauses[a].alive && clauses[a].seq.subset_of(m)) return true;
    return false;
  };

  std::optional<std::size_t> found;
  std::size_t iterations = 0;
  auto add = [&](Mask m, int tmpl, std::vector<std::size_t> from) {
    if (subsumed_by_active(m)) return;
    if (clauses.size() >= limits.max_clauses)
      throw ResourceError("saturation produced more than " + std::to_string(limits.max_clauses) + " clauses");
    clauses.push_back({m, tmpl, std::move(from), true});
    queue.push_back(clauses.size() - 1);
    if (!found && m.subset_of(target)) found = clauses.size() - 1;
  };

  try {
    for (std::size_t i = 0; i < clauses.size() && !found; ++i)
      if (clauses[i].seq.subset_of(target)) found = i;
    while (!found && !queue.empty()) {
      if (++iterations > limits.max_iterations) throw ResourceError("saturation iteration budget exhausted");
      const std::size_t c = queue.front();
      queue.pop_front();
      const Mask cm = clauses[c].seq;
      if (subsumed_by_active(cm)) continue;
      for (std::size_t a : active)
        if (clauses[a].alive && cm.subset_of(clauses[a].seq)) clauses[a].alive = false;
      std::erase_if(active, [&](std::size_t a) { return !clauses[a].alive; });
      active.push_back(c);

      const auto& tmpls = sp.templates();
      for (std::size_t ti = 0; ti < tmpls.size() && !found; ++ti) {
        const auto& t = tmpls[ti];
        if (t.adds.size() == 1) {
          if (cm.meets(t.adds[0])) add(cm.minus(t.adds[0]) | t.principal_mask, static_cast<int>(ti), {c});
          continue;
        }
        for (std::size_t slot = 0; slot < 2 && !found; ++slot) {
          if (!cm.meets(t.adds[slot])) continue;
          const Mask mine = cm.minus(t.adds[slot]) | t.principal_mask;
          const std::size_t other = 1 - slot;
          const std::vector<std::size_t> partners = active;
          for (std::size_t d : partners) {
            if (!clauses[d].alive || !clauses[d].seq.meets(t.adds[other])) continue;
            // each unordered pair once: the partner slot is filled by an older
            // clause, or by the same clause in slot 0
            if (d == c && slot == 1) continue;
            std::vector<std::size_t> from(2);
            from[slot] = c;
            from[other] = d;
            add(mine | clauses[d].seq.minus(t.adds[other]), static_cast<int>(ti), std::move(from));
            if (found) break;
          }
        }
      }
    }
  } catch (const ResourceError& e) {
    return DecisionOutcome::resource_exceeded(out.engine, e.what(), {iterations, clauses.size()});
  }

  out.stats = {iterations, clauses.size()};
  if (!found) {
    out.verdict = Verdict::NotProvable;
    return out;
  }
  out.verdict = Verdict::Provable;
  if (limits.extract_proof) {
    std::vector<std::optional<ProofTree>> memo(clauses.size());
    auto build = [&](auto&& self, std::size_t id) -> ProofTree {
      if (memo[id]) return *memo[id];
      const Clause& cl = clauses[id];
      ProofTree p;
      if (cl.tmpl < 0) {
        p = axiom_proof(sp.formula(static_cast<std::size_t>(std::countr_zero(cl.seq.left))));
      } else {
        std::vector<ProofTree> subs;
        for (std::size_t f : cl.from) subs.push_back(self(self, f));
        p = detail::apply_template(sp, sp.templates()[static_cast<std::size_t>(cl.tmpl)], cl.seq, std::move(subs));
      }
      memo[id] = p;
      return p;
    };
    out.witness = weaken_to(build(build, *found), goal);
  }
  return out;
}

/// Level-by-level saturation over the full 4^|G| sequent space.
inline DecisionOutcome decide_saturation_literal(const Sequent& goal, const SaturationLimits& limits = {}) {
  DecisionOutcome out;
  out.engine = "saturation-literal";
  const FormulaSet g = gsub_sequent(goal, limits.gsub);
  const std::size_t n = g.size();
  if (n > limits.max_literal_gsub)
    return DecisionOutcome::resource_exceeded(out.engine, "|gsub| = " + std::to_string(n) +
                                                               " exceeds the literal cap of " +
                                                               std::to_string(limits.max_literal_gsub));
  using detail::Mask;
  const detail::Space sp(g);
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::size_t states = std::size_t{1} << (2 * n);
  auto key = [n](const Mask& m) { return static_cast<std::size_t>(m.left | (m.right << n)); };
  auto unkey = [n, full](std::size_t k) { return Mask{k & full, (k >> n) & full}; };

  // how each member of S was first obtained: 0 absent, 1 axiom,
  // 2 + i weakening by formula i on the left, 2 + n + i on the right,
  // 2 + 2n + 2t + c template t with context choice c
  std::vector<std::uint32_t> how(states, 0);
  std::vector<std::uint32_t> level(states, 0);
  std::size_t members = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t b = std::uint64_t{1} << i;
    how[key({b, b})] = 1;
    ++members;
  }
  const std::size_t target = key(sp.encode(goal));
  std::size_t iterations = 0;
  while (!how[target]) {
    if (++iterations > limits.max_iterations) {
      return DecisionOutcome::resource_exceeded(out.engine, "iteration budget exhausted", {iterations, members});
    }
    std::vector<std::pair<std::size_t, std::uint32_t>> low;
    for (std::size_t k = 0; k < states; ++k) {
      if (how[k]) continue;
      const Mask x = unkey(k);
      std::uint32_t reason = 0;
      for (std::size_t i = 0; i < n && !reason; ++i) {
        const std::uint64_t b = std::uint64_t{1} << i;
        if ((x.left & b) && how[key({x.left & ~b, x.right})]) reason = static_cast<std::uint32_t>(2 + i);
        else if ((x.right & b) && how[key({x.left, x.right & ~b})]) reason = static_cast<std::uint32_t>(2 + n + i);
      }
      const auto& tmpls = sp.templates();
      for (std::size_t t = 0; t < tmpls.size() && !reason; ++t) {
        if (!tmpls[t].principal_mask.subset_of(x)) continue;
        for (std::uint32_t c = 0; c < 2 && !reason; ++c) {
          const Mask ctx = c == 0 ? x.minus(tmpls[t].principal_mask) : x;
          bool all = true;
          for (const auto& a : tmpls[t].adds) all = all && how[key(ctx | a)];
          if (all) reason = static_cast<std::uint32_t>(2 + 2 * n + 2 * t + c);
        }
      }
      if (reason) low.emplace_back(k, reason);
    }
    if (low.empty()) break;  // S_{j+1} = S_j
    for (auto [k, r] : low) {
      how[k] = r;
      level[k] = static_cast<std::uint32_t>(iterations);
    }
    members += low.size();
  }
  out.stats = {iterations, members};
  if (!how[target]) {
    out.verdict = Verdict::NotProvable;
    return out;
  }
  out.verdict = Verdict::Provable;
  if (limits.extract_proof) {
    auto build = [&](auto&& self, std::size_t k) -> ProofTree {
      const Mask x = unkey(k);
      const std::uint32_t r = how[k];
      if (r == 1) return axiom_proof(sp.formula(static_cast<std::size_t>(std::countr_zero(x.left))));
      if (r < 2 + 2 * n) {
        const std::size_t i = (r - 2) % n;
        const bool left = r - 2 < n;
        const std::uint64_t b = std::uint64_t{1} << i;
        const Mask prev = left ? Mask{x.left & ~b, x.right} : Mask{x.left, x.right & ~b};
        return ProofTree{sp.decode(x), left ? RuleTag::WeakenLeft : RuleTag::WeakenRight, sp.formula(i),
                         {self(self, key(prev))}};
      }
      const std::size_t t = (r - 2 - 2 * n) / 2;
      const bool keep = (r - 2 - 2 * n) % 2 == 1;
      const auto& tm = sp.templates()[t];
      const Mask ctx = keep ? x : x.minus(tm.principal_mask);
      ProofTree node{sp.decode(x), tm.tag, sp.formula(tm.principal), {}};
      for (const auto& a : tm.adds) node.children.push_back(self(self, key(ctx | a)));
      return node;
    };
    out.witness = build(build, target);
  }
  return out;
}

}  // namespace six
