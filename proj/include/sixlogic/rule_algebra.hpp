// SPDX-License-Identifier: Apache-2.0
#pragma once

// Operations on context-free schematic rules: semantic soundness and
// admissibility oracles, premise merging, premise shrinking, and the
// scripted derivation of  ⇒B / ⇒A∨B  from the translated ∨ rules.

#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sixlogic/error.hpp"
#include "sixlogic/matrix.hpp"
#include "sixlogic/schematic_rule.hpp"
#include "sixlogic/semantics.hpp"
#include "sixlogic/sf_calculus.hpp"
#include "sixlogic/two_calculus.hpp"

namespace six {

struct RuleOracleLimits {
  std::size_t max_metavariables = 4;
};

inline std::set<std::string> variables(const SchematicRule& r) {
  std::set<std::string> out = variables(r.conclusion);
  for (const auto& p : r.premises) {
    auto v = variables(p);
    out.insert(v.begin(), v.end());
  }
  return out;
}

/// Per-assignment soundness: whenever every premise holds, the conclusion holds.
inline bool rule_locally_sound(const SchematicRule& r, const FiniteMatrix& m, const RuleOracleLimits& limits = {}) {
  return for_each_assignment(
      variables(r), m,
      [&](const Assignment& a) {
        for (const auto& p : r.premises)
          if (!satisfies(a, p, m)) return true;
        return satisfies(a, r.conclusion, m);
      },
      OracleLimits{limits.max_metavariables});
}

/// Admissibility at the value level: if every premise is valid (over all
/// metavariable assignments) then the conclusion is valid. Vacuously true
/// when some premise is not valid.
inline bool rule_admissible_schematic(const SchematicRule& r, const FiniteMatrix& m,
                                      const RuleOracleLimits& limits = {}) {
  const OracleLimits ol{limits.max_metavariables};
  const auto vars = variables(r);
  auto valid = [&](const Sequent& s) {
    return for_each_assignment(vars, m, [&](const Assignment& a) { return satisfies(a, s, m); }, ol);
  };
  for (const auto& p : r.premises)
    if (!valid(p)) return true;
  return valid(r.conclusion);
}

/// The conclusion is one of the premises.
inline bool is_superfluous(const SchematicRule& r) { return r.premises.count(r.conclusion) > 0; }

/// Merges two context-free rules with the same conclusion into one whose
/// premises are all pairwise unions.
inline SchematicRule combine_principle3(const SchematicRule& r1, const SchematicRule& r2) {
  if (r1.conclusion != r2.conclusion)
    throw ConclusionMismatchError("rules '" + r1.name + "' and '" + r2.name + "' have different conclusions");
  SchematicRule out;
  out.name = "(" + r1.name + " * " + r2.name + ")";
  out.conclusion = r1.conclusion;
  for (const auto& a : r1.premises)
    for (const auto& b : r2.premises) out.premises.insert({set_union(a.left, b.left), set_union(a.right, b.right)});
  return out;
}

struct PropredMatch {
  SchematicRule rule;
  Formula cut_formula;
};

namespace detail {

inline std::optional<PropredMatch> propred_directed(const SchematicRule& pos, const SchematicRule& neg) {
  for (const auto& p : pos.premises) {
    if (!p.left.empty() || p.right.size() != 1) continue;
    const Formula& phi = *p.right.begin();
    std::set<Sequent> s = pos.premises;
    s.erase(p);
    std::set<Sequent> expect = s;
    expect.insert(Sequent({phi}, {}));
    if (expect == neg.premises) return PropredMatch{{"", std::move(s), pos.conclusion}, phi};
  }
  return std::nullopt;
}

}  // namespace detail

/// From S ∪ {⇒φ} / Σ and S ∪ {φ⇒} / Σ derives S / Σ (either argument order).
inline std::optional<PropredMatch> reduce_propred_match(const SchematicRule& r1, const SchematicRule& r2) {
  if (r1.conclusion != r2.conclusion) return std::nullopt;
  auto m = detail::propred_directed(r1, r2);
  if (!m) m = detail::propred_directed(r2, r1);
  if (m) m->rule.name = "(" + r1.name + " + " + r2.name + ")";
  return m;
}

inline std::optional<SchematicRule> reduce_propred(const SchematicRule& r1, const SchematicRule& r2) {
  auto m = reduce_propred_match(r1, r2);
  if (!m) return std::nullopt;
  return m->rule;
}

/// Replaces premise `premise_index` (in canonical order) by a sub-sequent of
/// it, provided the original premise admissibly yields the replacement.
inline std::optional<SchematicRule> shrink_principle4(const SchematicRule& r, std::size_t premise_index,
                                                      const Sequent& replacement, const FiniteMatrix& m,
                                                      const RuleOracleLimits& limits = {}) {
  if (premise_index >= r.premises.size()) throw InvalidArgument("premise index out of range");
  const Sequent original = *std::next(r.premises.begin(), static_cast<std::ptrdiff_t>(premise_index));
  if (!replacement.subsumes(original))
    throw InvalidArgument("replacement must be obtained by removing formulas from the premise");
  const SchematicRule step{"", {original}, replacement};
  if (!rule_admissible_schematic(step, m, limits)) return std::nullopt;
  SchematicRule out = r;
  out.premises.erase(original);
  out.premises.insert(replacement);
  return out;
}

/// Drops premises that are instances of the axiom after weakening, and
/// premises obtainable by weakening another premise.
inline SchematicRule drop_trivial_premises(const SchematicRule& r) {
  SchematicRule out = r;
  for (auto it = out.premises.begin(); it != out.premises.end();) {
    bool drop = it->has_common_formula();
    for (const auto& q : out.premises)
      if (!(q == *it) && q.subsumes(*it)) drop = true;
    it = drop ? out.premises.erase(it) : std::next(it);
  }
  return out;
}

/// Drops one premise when the remaining rule is still locally sound.
inline std::optional<SchematicRule> drop_premise_semantic(const SchematicRule& r, const Sequent& premise,
                                                          const FiniteMatrix& m, const RuleOracleLimits& limits = {}) {
  if (!r.premises.count(premise)) throw InvalidArgument("rule has no such premise");
  SchematicRule out = r;
  out.premises.erase(premise);
  if (!rule_locally_sound(out, m, limits)) return std::nullopt;
  return out;
}

/// Translated rule of the given signed rule whose conclusion is `conclusion`.
inline const SchematicRule& find_translated(const std::vector<SchematicRule>& rules, const SignedRule& source,
                                            const Sequent& conclusion, const FiniteMatrix& m = m6()) {
  const std::string prefix = rule_label(source, m) + "_";
  for (const auto& r : rules)
    if (r.name.rfind(prefix, 0) == 0 && r.conclusion == conclusion) return r;
  throw InvalidArgument("no translated rule " + rule_label(source, m) + " with conclusion " + to_string(conclusion));
}

struct ReplayStep {
  int step;
  std::vector<std::string> inputs;
  std::string principle;
  SchematicRule output;
};

struct ReplayResult {
  SchematicRule final_rule;
  std::vector<ReplayStep> trace;

  const SchematicRule& at(int step) const {
    for (const auto& s : trace)
      if (s.step == step) return s.output;
    throw InvalidArgument("no step " + std::to_string(step));
  }
};

/// Replays the 18-step derivation of ⇒B / ⇒A∨B from the translated
/// (∨ at i,j) rules, every step a premise-merging reduction on a cut formula.
inline ReplayResult replay_table1_trace() {
  const FiniteMatrix& m = m6();
  const auto translated = translate_calculus(generate_sf(m), six_witnesses(), m);
  const Formula a = metavariable('A');
  const Formula b = metavariable('B');
  const Sequent goal({}, {Formula::disj(a, b)});

  ReplayResult res;
  std::map<std::string, SchematicRule> by_label;

  auto sf = [&](TruthValue x, TruthValue y) -> std::string {
    const SignedRule source{Connective::Or, {index_of(x), index_of(y)},
                            m.apply(Connective::Or, index_of(x), index_of(y))};
    const std::string label = rule_label(source, m);
    if (!by_label.count(label)) {
      SchematicRule r = find_translated(translated, source, goal, m);
      r.name = label;
      by_label.emplace(label, std::move(r));
    }
    return label;
  };
  auto step = [&](int n, const std::string& x, const std::string& y) -> std::string {
    const auto match = reduce_propred_match(by_label.at(x), by_label.at(y));
    if (!match) throw Error("replay step (" + std::to_string(n) + ") does not reduce");
    const std::string label = "(" + std::to_string(n) + ")";
    SchematicRule out = match->rule;
    out.name = label;
    res.trace.push_back({n, {x, y}, "premise merge on " + to_string(match->cut_formula), out});
    by_label.insert_or_assign(label, out);
    return label;
  };

  using T = TruthValue;
  const auto s1 = step(1, sf(T::One, T::TwoThirds), sf(T::One, T::One));
  const auto s2 = step(2, sf(T::TwoThirds, T::TwoThirds), sf(T::TwoThirds, T::One));
  const auto s3 = step(3, s1, s2);
  step(4, sf(T::One, T::N), sf(T::TwoThirds, T::N));
  const auto s5 = step(5, sf(T::One, T::B), sf(T::TwoThirds, T::B));
  const auto s6 = step(6, s3, s5);
  const auto s7 = step(7, sf(T::N, T::One), sf(T::N, T::TwoThirds));
  const auto s8 = step(8, s7, sf(T::N, T::B));
  const auto s9 = step(9, s6, s8);
  const auto s10 = step(10, sf(T::B, T::One), sf(T::B, T::TwoThirds));
  const auto s11 = step(11, s10, sf(T::B, T::B));
  const auto s12 = step(12, sf(T::Zero, T::One), sf(T::Zero, T::TwoThirds));
  const auto s13 = step(13, sf(T::OneThird, T::One), sf(T::OneThird, T::TwoThirds));
  const auto s14 = step(14, s12, s13);
  const auto s15 = step(15, sf(T::Zero, T::B), sf(T::OneThird, T::B));
  const auto s16 = step(16, s14, s15);
  const auto s17 = step(17, s11, s16);
  const auto s18 = step(18, s9, s17);
  res.final_rule = by_label.at(s18);
  return res;
}

inline SchematicRule replay_table1() { return replay_table1_trace().final_rule; }

}  // namespace six
