// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "sixlogic/json_io.hpp"
#include "sixlogic/sixlogic.hpp"
#include "support/oracle.hpp"

using namespace six;

namespace {

using T = TruthValue;
constexpr Value V(T t) { return index_of(t); }

Formula F(const char* s) { return parse_formula(s); }

NSequent signed_ns(std::initializer_list<std::pair<T, Formula>> items) {
  NSequent out(6);
  for (const auto& [t, f] : items) out.cells[V(t)].insert(f);
  return out;
}

NSequent merge(NSequent a, const NSequent& b) {
  for (std::size_t i = 0; i < a.cells.size(); ++i) a.cells[i].insert(b.cells[i].begin(), b.cells[i].end());
  return a;
}

SFDerivation axiom_node(const Formula& f) { return {axiom_nsequent(f, 6), SFDerivation::Step::Axiom, {}, {}, {}}; }

SFDerivation weaken(SFDerivation d, const NSequent& target) {
  return {target, SFDerivation::Step::Weakening, {}, {}, {std::move(d)}};
}

// Derivation of Ω ∪ {out : c(α, β)} from two axioms, Ω = the remaining axiom cells.
SFDerivation binary_step(const SignedRule& r, const Formula& a, const Formula& b) {
  const SignedFormula sa{r.inputs[0], a}, sb{r.inputs[1], b};
  const NSequent omega = merge(axiom_nsequent(a, 6).without(sa), axiom_nsequent(b, 6).without(sb));
  SFDerivation left = weaken(axiom_node(a), omega.with(sa));
  SFDerivation right = weaken(axiom_node(b), omega.with(sb));
  const NSequent concl = apply_sf(r, {left.conclusion, right.conclusion}, {a, b});
  return {concl, SFDerivation::Step::Rule, r, {a, b}, {std::move(left), std::move(right)}};
}

SFDerivation unary_step(const SignedRule& r, SFDerivation premise, const Formula& a) {
  const NSequent concl = apply_sf(r, {premise.conclusion}, {a});
  return {concl, SFDerivation::Step::Rule, r, {a}, {std::move(premise)}};
}

}  // namespace

TEST(Generate, CountsForSix) {
  const auto rules = generate_sf(m6());
  EXPECT_EQ(rules.size(), 84u);
  std::map<Connective, int> per;
  for (const auto& r : rules) per[r.connective]++;
  EXPECT_EQ(per[Connective::Neg], 6);
  EXPECT_EQ(per[Connective::Nabla], 6);
  EXPECT_EQ(per[Connective::And], 36);
  EXPECT_EQ(per[Connective::Or], 36);
}

TEST(Generate, CountForBoolean) { EXPECT_EQ(generate_sf(boolean_matrix()).size(), 10u); }

TEST(Generate, OutputsFollowTables) {
  for (const auto& r : generate_sf(m6())) {
    int expect = -1;
    switch (r.connective) {
      case Connective::Neg: expect = oracle::kNeg[r.inputs[0]]; break;
      case Connective::Nabla: expect = oracle::kNabla[r.inputs[0]]; break;
      case Connective::And: expect = oracle::meet(r.inputs[0], r.inputs[1]); break;
      case Connective::Or: expect = oracle::join(r.inputs[0], r.inputs[1]); break;
    }
    EXPECT_EQ(r.output, expect) << rule_label(r, m6());
  }
  const SignedRule nb{Connective::Or, {V(T::N), V(T::B)}, V(T::TwoThirds)};
  const auto all = generate_sf(m6());
  EXPECT_NE(std::find(all.begin(), all.end(), nb), all.end());
}

TEST(Generate, AllLocallySound) {
  for (const auto& r : generate_sf(m6())) EXPECT_TRUE(sf_rule_locally_sound(r, m6())) << rule_label(r, m6());
  SignedRule wrong{Connective::Neg, {V(T::N)}, V(T::B)};
  EXPECT_FALSE(sf_rule_locally_sound(wrong, m6()));
}

TEST(Apply, Examples) {
  const Formula p = F("p"), q = F("q"), r = F("r");
  const NSequent omega = signed_ns({{T::Zero, r}});
  const SignedRule orNB{Connective::Or, {V(T::N), V(T::B)}, V(T::TwoThirds)};
  EXPECT_EQ(apply_sf(orNB, {omega.with({V(T::N), p}), omega.with({V(T::B), q})}, {p, q}),
            omega.with({V(T::TwoThirds), F("p | q")}));

  const SignedRule negN{Connective::Neg, {V(T::N)}, V(T::N)};
  EXPECT_EQ(apply_sf(negN, {omega.with({V(T::N), p})}, {p}), omega.with({V(T::N), F("~p")}));

  const SignedRule nablaThird{Connective::Nabla, {V(T::OneThird)}, V(T::One)};
  EXPECT_EQ(apply_sf(nablaThird, {omega.with({V(T::OneThird), p})}, {p}), omega.with({V(T::One), F("#p")}));
}

TEST(Apply, Errors) {
  const Formula p = F("p"), q = F("q");
  const SignedRule orNB{Connective::Or, {V(T::N), V(T::B)}, V(T::TwoThirds)};
  EXPECT_THROW(apply_sf(orNB, {signed_ns({{T::N, p}}), signed_ns({{T::B, q}, {T::Zero, p}})}, {p, q}),
               ContextMismatchError);
  EXPECT_THROW(apply_sf(orNB, {signed_ns({{T::N, p}}), signed_ns({{T::One, q}})}, {p, q}), SignedFormulaMissingError);
  EXPECT_THROW(apply_sf(orNB, {signed_ns({{T::N, p}})}, {p, q}), InvalidArgument);
}

TEST(Check, AxiomAccepted) { EXPECT_TRUE(check_sf(axiom_node(F("p")), m6())); }

TEST(Check, WeakeningOnlyAdds) {
  NSequent smaller = axiom_nsequent(F("p"), 6);
  smaller.cells[0].clear();
  const auto d = weaken(axiom_node(F("p")), smaller);
  const auto res = check_sf(d, m6());
  EXPECT_FALSE(res);
  EXPECT_TRUE(res.path.empty());
}

TEST(Check, ContextMismatchRejected) {
  const Formula p = F("p"), q = F("q");
  const SignedRule or00{Connective::Or, {0, 0}, 0};
  SFDerivation d{signed_ns({{T::Zero, F("p | q")}, {T::One, p}}), SFDerivation::Step::Rule, or00, {p, q},
                 {weaken(axiom_node(p), axiom_nsequent(p, 6)), axiom_node(q)}};
  EXPECT_FALSE(check_sf(d, m6()));
}

TEST(Check, BuiltDerivationsAreValid) {
  oracle::Gen g(31);
  const auto rules = generate_sf(m6());
  for (int i = 0; i < 150; ++i) {
    const SignedRule& r = rules[g.below(static_cast<int>(rules.size()))];
    const Formula a = g.formula(2, 1), b = g.formula(2, 1);
    SFDerivation d = arity(r.connective) == 2 ? binary_step(r, a, b)
                                              : unary_step(r, weaken(axiom_node(a), axiom_nsequent(a, 6)), a);
    ASSERT_TRUE(check_sf(d, m6())) << rule_label(r, m6()) << " " << check_sf(d, m6()).message;
    ASSERT_TRUE(oracle::nvalid(d.conclusion));
    // accepted derivations have valid roots, even after tampering
    SFDerivation bad = d;
    bad.conclusion.cells[g.below(6)].clear();
    if (check_sf(bad, m6())) ASSERT_TRUE(oracle::nvalid(bad.conclusion)) << to_string(bad.conclusion);
  }
}

TEST(Check, WrongOutputRejected) {
  const Formula p = F("p");
  SignedRule lie{Connective::Neg, {V(T::N)}, V(T::B)};
  SFDerivation d{axiom_nsequent(p, 6).with({V(T::B), F("~p")}), SFDerivation::Step::Rule, lie, {p},
                 {axiom_node(p)}};
  const auto res = check_sf(d, m6());
  EXPECT_FALSE(res);
  EXPECT_NE(res.message.find("table"), std::string::npos);
}

TEST(Json, SignedRuleRoundTrip) {
  for (const auto& r : generate_sf(m6())) EXPECT_EQ(signed_rule_from_json(to_json(r)), r);
  EXPECT_THROW(signed_rule_from_json(Json{{"connective", "or"}, {"inputs", {"n"}}, {"output", "b"}}),
               InvalidArgument);
  EXPECT_THROW(signed_rule_from_json(Json{{"connective", "or"}, {"inputs", {"n", "x"}}, {"output", "b"}}),
               InvalidArgument);
}

TEST(Json, DerivationRoundTrip) {
  const SignedRule r{Connective::And, {V(T::N), V(T::B)}, V(T::OneThird)};
  const auto d = binary_step(r, F("p"), F("q"));
  const auto back = sf_derivation_from_json(to_json(d));
  EXPECT_TRUE(check_sf(back, m6()));
  EXPECT_EQ(to_json(back), to_json(d));
}
