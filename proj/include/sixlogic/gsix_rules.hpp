// SPDX-License-Identifier: Apache-2.0
#pragma once

// The cut-free calculus GSix: axiom α ⇒ α, weakening on either side, and 25
// context-sharing logic rules. A logic rule is described by the side of its
// principal formula, the shape that formula must have, and for each premise
// the formulas added to the shared context Γ ⇒ Δ.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sixlogic/error.hpp"
#include "sixlogic/formula.hpp"
#include "sixlogic/schematic_rule.hpp"
#include "sixlogic/sequent.hpp"

namespace six {

enum class RuleTag {
  Axiom,
  WeakenLeft,
  WeakenRight,
  Cut,
  OrLeft,
  OrRight,
  NegOrLeft,
  NegOrRight,
  NablaOrLeft,
  NablaOrRight,
  NablaNegOrLeft,
  NablaNegOrRight,
  AndLeft,
  AndRight,
  NegAndLeft,
  NegAndRight,
  NablaAndLeft,
  NablaAndRight,
  NablaNegAndLeft,
  NablaNegAndRight,
  NegNegLeft,
  NegNegRight,
  NablaNegNegLeft,
  NablaNegNegRight,
  NablaRight,
  NablaNablaLeft,
  NegNablaLeft,
  NegNablaRight,
  NablaNegNablaLeft,
};

enum class Side { Left, Right };

struct RuleInfo {
  RuleTag tag;
  std::string_view id;       // machine name used in files and on the command line
  std::string_view display;  // conventional label
};

inline constexpr std::array<RuleInfo, 29> kRuleInfo = {{
    {RuleTag::Axiom, "axiom", "(ax)"},
    {RuleTag::WeakenLeft, "weaken-left", "(w=>)"},
    {RuleTag::WeakenRight, "weaken-right", "(=>w)"},
    {RuleTag::Cut, "cut", "(cut)"},
    {RuleTag::OrLeft, "or-left", "(|=>)"},
    {RuleTag::OrRight, "or-right", "(=>|)"},
    {RuleTag::NegOrLeft, "neg-or-left", "(~|=>)"},
    {RuleTag::NegOrRight, "neg-or-right", "(=>~|)"},
    {RuleTag::NablaOrLeft, "nabla-or-left", "(#|=>)"},
    {RuleTag::NablaOrRight, "nabla-or-right", "(=>#|)"},
    {RuleTag::NablaNegOrLeft, "nabla-neg-or-left", "(#~|=>)"},
    {RuleTag::NablaNegOrRight, "nabla-neg-or-right", "(=>#~|)"},
    {RuleTag::AndLeft, "and-left", "(&=>)"},
    {RuleTag::AndRight, "and-right", "(=>&)"},
    {RuleTag::NegAndLeft, "neg-and-left", "(~&=>)"},
    {RuleTag::NegAndRight, "neg-and-right", "(=>~&)"},
    {RuleTag::NablaAndLeft, "nabla-and-left", "(#&=>)"},
    {RuleTag::NablaAndRight, "nabla-and-right", "(=>#&)"},
    {RuleTag::NablaNegAndLeft, "nabla-neg-and-left", "(#~&=>)"},
    {RuleTag::NablaNegAndRight, "nabla-neg-and-right", "(=>#~&)"},
    {RuleTag::NegNegLeft, "neg-neg-left", "(~~=>)"},
    {RuleTag::NegNegRight, "neg-neg-right", "(=>~~)"},
    {RuleTag::NablaNegNegLeft, "nabla-neg-neg-left", "(#~~=>)"},
    {RuleTag::NablaNegNegRight, "nabla-neg-neg-right", "(=>#~~)"},
    {RuleTag::NablaRight, "nabla-right", "(=>#)"},
    {RuleTag::NablaNablaLeft, "nabla-nabla-left", "(##=>)"},
    {RuleTag::NegNablaLeft, "neg-nabla-left", "(~#=>)"},
    {RuleTag::NegNablaRight, "neg-nabla-right", "(=>~#)"},
    {RuleTag::NablaNegNablaLeft, "nabla-neg-nabla-left", "(#~#=>)"},
}};

inline const RuleInfo& rule_info(RuleTag t) {
  for (const auto& i : kRuleInfo)
    if (i.tag == t) return i;
  throw InvalidArgument("unknown rule tag");
}

inline std::string_view rule_id(RuleTag t) { return rule_info(t).id; }

inline RuleTag rule_tag_from_id(std::string_view id) {
  for (const auto& i : kRuleInfo)
    if (i.id == id || i.display == id) return i.tag;
  throw InvalidArgument("unknown rule '" + std::string(id) + "'");
}

inline bool is_logic_rule(RuleTag t) noexcept {
  return t != RuleTag::Axiom && t != RuleTag::WeakenLeft && t != RuleTag::WeakenRight && t != RuleTag::Cut;
}

/// Formulas a premise adds to the shared context.
struct PremiseAdditions {
  FormulaSet left;
  FormulaSet right;

  friend bool operator==(const PremiseAdditions& a, const PremiseAdditions& b) {
    return a.left == b.left && a.right == b.right;
  }
};

struct LogicRule {
  RuleTag tag;
  Side side;
  /// Premise additions for a principal formula, or nullopt when the formula
  /// does not have the rule's shape.
  std::optional<std::vector<PremiseAdditions>> (*premises)(const Formula&);
};

namespace detail {

using Adds = std::optional<std::vector<PremiseAdditions>>;
using K = Formula::Kind;

inline Formula N(const Formula& f) { return Formula::neg(f); }
inline Formula D(const Formula& f) { return Formula::nabla(f); }
inline PremiseAdditions L(std::initializer_list<Formula> fs) { return {FormulaSet(fs), {}}; }
inline PremiseAdditions R(std::initializer_list<Formula> fs) { return {{}, FormulaSet(fs)}; }

// shape probes; each returns the inner formula when the pattern matches
inline const Formula* under(const Formula& f, K k) { return f.is(k) ? &f.operand() : nullptr; }
inline const Formula* binary(const Formula& f, K k) { return f.is(k) ? &f : nullptr; }
inline const Formula* neg_bin(const Formula& f, K k) {
  auto* x = under(f, K::Neg);
  return x ? binary(*x, k) : nullptr;
}
inline const Formula* nabla_bin(const Formula& f, K k) {
  auto* x = under(f, K::Nabla);
  return x ? binary(*x, k) : nullptr;
}
inline const Formula* nabla_neg_bin(const Formula& f, K k) {
  auto* x = under(f, K::Nabla);
  return x ? neg_bin(*x, k) : nullptr;
}
inline const Formula* neg_neg(const Formula& f) {
  auto* x = under(f, K::Neg);
  return x ? under(*x, K::Neg) : nullptr;
}

inline const std::vector<LogicRule>& logic_rules() {
  static const std::vector<LogicRule> rules = {
      {RuleTag::OrLeft, Side::Left, [](const Formula& f) -> Adds {
         auto* x = binary(f, K::Or);
         if (!x) return std::nullopt;
         return std::vector{L({x->lhs()}), L({x->rhs()})};
       }},
      {RuleTag::OrRight, Side::Right, [](const Formula& f) -> Adds {
         auto* x = binary(f, K::Or);
         if (!x) return std::nullopt;
         return std::vector{R({x->lhs(), x->rhs()})};
       }},
      {RuleTag::NegOrLeft, Side::Left, [](const Formula& f) -> Adds {
         auto* x = neg_bin(f, K::Or);
         if (!x) return std::nullopt;
         return std::vector{L({N(x->lhs()), N(x->rhs())})};
       }},
      {RuleTag::NegOrRight, Side::Right, [](const Formula& f) -> Adds {
         auto* x = neg_bin(f, K::Or);
         if (!x) return std::nullopt;
         return std::vector{R({N(x->lhs())}), R({N(x->rhs())})};
       }},
      {RuleTag::NablaOrLeft, Side::Left, [](const Formula& f) -> Adds {
         auto* x = nabla_bin(f, K::Or);
         if (!x) return std::nullopt;
         return std::vector{L({D(x->lhs())}), L({D(x->rhs())})};
       }},
      {RuleTag::NablaOrRight, Side::Right, [](const Formula& f) -> Adds {
         auto* x = nabla_bin(f, K::Or);
         if (!x) return std::nullopt;
         return std::vector{R({D(x->lhs()), D(x->rhs())})};
       }},
      {RuleTag::NablaNegOrLeft, Side::Left, [](const Formula& f) -> Adds {
         auto* x = nabla_neg_bin(f, K::Or);
         if (!x) return std::nullopt;
         return std::vector{L({D(N(x->lhs())), D(N(x->rhs()))})};
       }},
      {RuleTag::NablaNegOrRight, Side::Right, [](const Formula& f) -> Adds {
         auto* x = nabla_neg_bin(f, K::Or);
         if (!x) return std::nullopt;
         return std::vector{R({D(N(x->lhs()))}), R({D(N(x->rhs()))})};
       }},
      {RuleTag::AndLeft, Side::Left, [](const Formula& f) -> Adds {
         auto* x = binary(f, K::And);
         if (!x) return std::nullopt;
         return std::vector{L({x->lhs(), x->rhs()})};
       }},
      {RuleTag::AndRight, Side::Right, [](const Formula& f) -> Adds {
         auto* x = binary(f, K::And);
         if (!x) return std::nullopt;
         return std::vector{R({x->lhs()}), R({x->rhs()})};
       }},
      {RuleTag::NegAndLeft, Side::Left, [](const Formula& f) -> Adds {
         auto* x = neg_bin(f, K::And);
         if (!x) return std::nullopt;
         return std::vector{L({N(x->lhs())}), L({N(x->rhs())})};
       }},
      {RuleTag::NegAndRight, Side::Right, [](const Formula& f) -> Adds {
         auto* x = neg_bin(f, K::And);
         if (!x) return std::nullopt;
         return std::vector{R({N(x->lhs()), N(x->rhs())})};
       }},
      {RuleTag::NablaAndLeft, Side::Left, [](const Formula& f) -> Adds {
         auto* x = nabla_bin(f, K::And);
         if (!x) return std::nullopt;
         return std::vector{L({D(x->lhs()), D(x->rhs())})};
       }},
      {RuleTag::NablaAndRight, Side::Right, [](const Formula& f) -> Adds {
         auto* x = nabla_bin(f, K::And);
         if (!x) return std::nullopt;
         return std::vector{R({D(x->lhs())}), R({D(x->rhs())})};
       }},
      {RuleTag::NablaNegAndLeft, Side::Left, [](const Formula& f) -> Adds {
         auto* x = nabla_neg_bin(f, K::And);
         if (!x) return std::nullopt;
         return std::vector{L({D(N(x->lhs()))}), L({D(N(x->rhs()))})};
       }},
      {RuleTag::NablaNegAndRight, Side::Right, [](const Formula& f) -> Adds {
         auto* x = nabla_neg_bin(f, K::And);
         if (!x) return std::nullopt;
         return std::vector{R({D(N(x->lhs())), D(N(x->rhs()))})};
       }},
      {RuleTag::NegNegLeft, Side::Left, [](const Formula& f) -> Adds {
         auto* x = neg_neg(f);
         if (!x) return std::nullopt;
         return std::vector{L({*x})};
       }},
      {RuleTag::NegNegRight, Side::Right, [](const Formula& f) -> Adds {
         auto* x = neg_neg(f);
         if (!x) return std::nullopt;
         return std::vector{R({*x})};
       }},
      {RuleTag::NablaNegNegLeft, Side::Left, [](const Formula& f) -> Adds {
         auto* y = under(f, K::Nabla);
         auto* x = y ? neg_neg(*y) : nullptr;
         if (!x) return std::nullopt;
         return std::vector{L({D(*x)})};
       }},
      {RuleTag::NablaNegNegRight, Side::Right, [](const Formula& f) -> Adds {
         auto* y = under(f, K::Nabla);
         auto* x = y ? neg_neg(*y) : nullptr;
         if (!x) return std::nullopt;
         return std::vector{R({D(*x)})};
       }},
      {RuleTag::NablaRight, Side::Right, [](const Formula& f) -> Adds {
         auto* x = under(f, K::Nabla);
         if (!x) return std::nullopt;
         return std::vector{PremiseAdditions{{N(*x)}, {*x}}};
       }},
      {RuleTag::NablaNablaLeft, Side::Left, [](const Formula& f) -> Adds {
         auto* y = under(f, K::Nabla);
         auto* x = y ? under(*y, K::Nabla) : nullptr;
         if (!x) return std::nullopt;
         return std::vector{L({D(*x)})};
       }},
      {RuleTag::NegNablaLeft, Side::Left, [](const Formula& f) -> Adds {
         auto* y = under(f, K::Neg);
         auto* x = y ? under(*y, K::Nabla) : nullptr;
         if (!x) return std::nullopt;
         return std::vector{R({D(*x)})};
       }},
      {RuleTag::NegNablaRight, Side::Right, [](const Formula& f) -> Adds {
         auto* y = under(f, K::Neg);
         auto* x = y ? under(*y, K::Nabla) : nullptr;
         if (!x) return std::nullopt;
         return std::vector{L({D(*x)})};
       }},
      {RuleTag::NablaNegNablaLeft, Side::Left, [](const Formula& f) -> Adds {
         auto* z = under(f, K::Nabla);
         auto* y = z ? under(*z, K::Neg) : nullptr;
         auto* x = y ? under(*y, K::Nabla) : nullptr;
         if (!x) return std::nullopt;
         return std::vector{R({D(*x)})};
       }},
  };
  return rules;
}

}  // namespace detail

/// The 25 logic rules, in a fixed order.
inline const std::vector<LogicRule>& gsix_logic_rules() { return detail::logic_rules(); }

inline const LogicRule& logic_rule(RuleTag t) {
  for (const auto& r : gsix_logic_rules())
    if (r.tag == t) return r;
  throw InvalidArgument("'" + std::string(rule_id(t)) + "' is not a logic rule");
}

/// Principal-formula schema of each logic rule over metavariables A, B.
inline Formula principal_schema(RuleTag t) {
  using detail::D;
  using detail::N;
  const Formula a = metavariable('A');
  const Formula b = metavariable('B');
  const Formula o = Formula::disj(a, b);
  const Formula c = Formula::conj(a, b);
  switch (t) {
    case RuleTag::OrLeft: case RuleTag::OrRight: return o;
    case RuleTag::NegOrLeft: case RuleTag::NegOrRight: return N(o);
    case RuleTag::NablaOrLeft: case RuleTag::NablaOrRight: return D(o);
    case RuleTag::NablaNegOrLeft: case RuleTag::NablaNegOrRight: return D(N(o));
    case RuleTag::AndLeft: case RuleTag::AndRight: return c;
    case RuleTag::NegAndLeft: case RuleTag::NegAndRight: return N(c);
    case RuleTag::NablaAndLeft: case RuleTag::NablaAndRight: return D(c);
    case RuleTag::NablaNegAndLeft: case RuleTag::NablaNegAndRight: return D(N(c));
    case RuleTag::NegNegLeft: case RuleTag::NegNegRight: return N(N(a));
    case RuleTag::NablaNegNegLeft: case RuleTag::NablaNegNegRight: return D(N(N(a)));
    case RuleTag::NablaRight: return D(a);
    case RuleTag::NablaNablaLeft: return D(D(a));
    case RuleTag::NegNablaLeft: case RuleTag::NegNablaRight: return N(D(a));
    case RuleTag::NablaNegNablaLeft: return D(N(D(a)));
    default: throw InvalidArgument("'" + std::string(rule_id(t)) + "' is not a logic rule");
  }
}

/// Context-free schematic form of a logic rule.
inline SchematicRule schematic(const LogicRule& r) {
  const Formula phi = principal_schema(r.tag);
  SchematicRule out;
  out.name = std::string(rule_id(r.tag));
  const auto adds = r.premises(phi);
  for (const auto& p : *adds) out.premises.insert({p.left, p.right});
  if (r.side == Side::Left) out.conclusion.left.insert(phi);
  else out.conclusion.right.insert(phi);
  return out;
}

inline std::vector<SchematicRule> gsix_schematic_rules() {
  std::vector<SchematicRule> out;
  for (const auto& r : gsix_logic_rules()) out.push_back(schematic(r));
  return out;
}

/// Whether every premise formula of every rule instance is strictly lighter
/// than the principal formula (checked on the schematic forms).
inline bool rules_decrease_weight() {
  for (const auto& r : gsix_logic_rules()) {
    const Formula phi = principal_schema(r.tag);
    const auto adds = r.premises(phi);
    for (const auto& p : *adds) {
      for (const auto* side : {&p.left, &p.right})
        for (const auto& f : *side)
          if (f.weight() >= phi.weight()) return false;
    }
  }
  return true;
}

}  // namespace six
