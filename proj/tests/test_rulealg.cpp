// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "sixlogic/json_io.hpp"
#include "sixlogic/sixlogic.hpp"

using namespace six;

namespace {

using T = TruthValue;
constexpr Value V(T t) { return index_of(t); }

SchematicRule R(const char* text, std::string name = {}) { return parse_schematic_rule(text, std::move(name)); }
Sequent MS(const char* s) { return parse_sequent(s, {.metavariables = true}); }

const std::vector<SchematicRule>& translated() {
  static const auto rules = translate_calculus(generate_sf(m6()), six_witnesses());
  return rules;
}

const SchematicRule& translated_rule(Connective c, std::vector<Value> in, const char* conclusion) {
  const SignedRule src{c, in, m6().apply(c, in)};
  return find_translated(translated(), src, MS(conclusion));
}

}  // namespace

TEST(LocalSoundness, Examples) {
  EXPECT_TRUE(rule_locally_sound(R("[A, B =>] / [A & B =>]"), m6()));
  EXPECT_FALSE(rule_locally_sound(R("[=> A] / [=> ~A]"), m6()));
  EXPECT_TRUE(rule_locally_sound(R("[A => #B] / [A => #B]"), m6()));
}

TEST(LocalSoundness, MetavariableCap) {
  EXPECT_THROW(rule_locally_sound(R("[A, B, C, D, E =>] / [A =>]"), m6()), ResourceError);
}

TEST(Admissibility, Examples) {
  EXPECT_TRUE(rule_admissible_schematic(R("[#A =>] / [A =>]"), m6()));
  EXPECT_TRUE(rule_admissible_schematic(R("[#A =>] / [=> ~A]"), m6()));
  // premise not valid: vacuously admissible
  EXPECT_TRUE(rule_admissible_schematic(R("[=> A] / [A =>]"), m6()));
  EXPECT_FALSE(rule_admissible_schematic(R("[=> A, ~A, #A] / [=> A]"), m6()));
}

TEST(Superfluous, Examples) {
  const auto& negn = translated_rule(Connective::Neg, {V(T::N)}, "~A =>");
  EXPECT_EQ(negn.premises, (std::set<Sequent>{MS("A =>"), MS("~A =>")}));
  EXPECT_TRUE(is_superfluous(negn));
  const auto& neg0 = translated_rule(Connective::Neg, {V(T::Zero)}, "~~A =>");
  EXPECT_FALSE(is_superfluous(neg0));
  EXPECT_FALSE(is_superfluous(R("/ [A => A]")));
}

TEST(Principle3, PairwiseUnions) {
  const auto r1 = R("[A =>] [=> B]  / [=> A | B]", "r1");
  const auto r2 = R("[B =>] [=> ~A] [#A =>] / [=> A | B]", "r2");
  const auto c = combine_principle3(r1, r2);
  EXPECT_EQ(c.premises.size(), 6u);
  EXPECT_EQ(c.conclusion, r1.conclusion);
  EXPECT_TRUE(c.premises.count(MS("A, B =>")));
  EXPECT_TRUE(c.premises.count(MS("=> B, ~A")));
  EXPECT_EQ(c.name, "(r1 * r2)");
}

TEST(Principle3, SelfCombination) {
  const auto r = R("[A =>] [=> B] / [=> A | B]");
  const auto c = combine_principle3(r, r);
  EXPECT_EQ(c.premises, (std::set<Sequent>{MS("A =>"), MS("=> B"), MS("A => B")}));
}

TEST(Principle3, ConclusionMismatch) {
  EXPECT_THROW(combine_principle3(R("[A =>] / [=> A]"), R("[A =>] / [A =>]")), ConclusionMismatchError);
}

TEST(Propred, NegZeroAndOneThird) {
  const auto neg0 = R("[A =>] [#A =>] [=> ~A] / [~~A =>]");
  const auto neg13 = R("[A =>] [=> ~A] [=> #A] / [~~A =>]");
  const auto m = reduce_propred_match(neg0, neg13);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->cut_formula, parse_formula("#A", {.metavariables = true}));
  EXPECT_EQ(m->rule, R("[A =>] [=> ~A] / [~~A =>]"));
  const auto next = reduce_propred(m->rule, R("[A =>] [~A =>] / [~~A =>]"));
  ASSERT_TRUE(next);
  EXPECT_EQ(*next, R("[A =>] / [~~A =>]"));
}

TEST(Propred, TranslatedRulesReproduceDerivedRule) {
  const auto& neg0 = translated_rule(Connective::Neg, {V(T::Zero)}, "~~A =>");
  const auto& neg13 = translated_rule(Connective::Neg, {V(T::OneThird)}, "~~A =>");
  const auto& negn = translated_rule(Connective::Neg, {V(T::N)}, "~~A =>");
  const auto step = reduce_propred(neg0, neg13);
  ASSERT_TRUE(step);
  const auto last = reduce_propred(*step, negn);
  ASSERT_TRUE(last);
  EXPECT_EQ(*last, R("[A =>] / [~~A =>]"));
}

TEST(Propred, NoMatch) {
  EXPECT_FALSE(reduce_propred(R("[A =>] / [=> A]"), R("[B =>] / [=> A]")));
  EXPECT_FALSE(reduce_propred(R("[=> A] / [=> B]"), R("[A =>] / [=> A]")));
}

TEST(Principle4, Examples) {
  const auto negnabla = R("[~A => A, #A] / [~#A =>]");
  const auto shrunk = shrink_principle4(negnabla, 0, MS("=> #A"), m6());
  ASSERT_TRUE(shrunk);
  EXPECT_EQ(*shrunk, R("[=> #A] / [~#A =>]"));

  const auto nnn = R("[~A => A, #A] / [#~#A =>]");
  EXPECT_TRUE(shrink_principle4(nnn, 0, MS("=> #A"), m6()));

  const auto wide = R("[=> A, ~A, #A] / [=> A | ~A | #A]");
  EXPECT_FALSE(shrink_principle4(wide, 0, MS("=> A"), m6()));
  EXPECT_TRUE(shrink_principle4(wide, 0, MS("=> ~A, #A"), m6()));
}

TEST(Principle4, ReplacementMustBeSubsequent) {
  EXPECT_THROW(shrink_principle4(R("[=> A] / [=> A | B]"), 0, MS("=> B"), m6()), InvalidArgument);
  EXPECT_THROW(shrink_principle4(R("[=> A] / [=> A | B]"), 3, MS("=> A"), m6()), InvalidArgument);
}

TEST(Principle2, TrivialPremisesDropped) {
  const auto r = R("[A => A, B] [=> B] [C => B] / [=> A | B]");
  EXPECT_EQ(drop_trivial_premises(r), R("[=> B] / [=> A | B]"));
  const auto sem = drop_premise_semantic(R("[A =>] [B =>] / [A & B =>]"), MS("B =>"), m6());
  ASSERT_TRUE(sem);
  EXPECT_FALSE(drop_premise_semantic(R("[A =>] [B =>] / [A | B =>]"), MS("B =>"), m6()));
}

// The streamlining of the ∇¬∇ left rule, assembled from translated rules.
TEST(Streamline, NablaNegNablaLeft) {
  const char* concl = "#~#A =>";
  const auto& r1 = translated_rule(Connective::Nabla, {V(T::One)}, concl);
  const auto& r23 = translated_rule(Connective::Nabla, {V(T::TwoThirds)}, concl);
  const auto& rn = translated_rule(Connective::Nabla, {V(T::N)}, concl);
  const auto& rb = translated_rule(Connective::Nabla, {V(T::B)}, concl);
  const auto& r13 = translated_rule(Connective::Nabla, {V(T::OneThird)}, concl);

  const auto one = reduce_propred(r1, r23);
  ASSERT_TRUE(one);
  EXPECT_EQ(*one, R("[~A =>] [=> A] / [#~#A =>]"));
  const auto two = reduce_propred(*one, rn);
  const auto three = reduce_propred(*one, rb);
  ASSERT_TRUE(two && three);
  EXPECT_EQ(*two, R("[~A =>] / [#~#A =>]"));
  EXPECT_EQ(*three, R("[=> A] / [#~#A =>]"));

  const auto merged = drop_trivial_premises(combine_principle3(combine_principle3(*two, *three), r13));
  EXPECT_EQ(merged, R("[~A => A, #A] / [#~#A =>]"));
  const auto final_rule = shrink_principle4(merged, 0, MS("=> #A"), m6());
  ASSERT_TRUE(final_rule);
  EXPECT_EQ(*final_rule, schematic(logic_rule(RuleTag::NablaNegNablaLeft)));
  EXPECT_TRUE(rule_locally_sound(*final_rule, m6()));
}

TEST(Replay, TableOneRows) {
  const auto res = replay_table1_trace();
  ASSERT_EQ(res.trace.size(), 18u);
  EXPECT_EQ(res.at(9), R("[~A =>] [=> B] / [=> A | B]"));
  EXPECT_EQ(res.at(17), R("[=> ~A] [=> B] / [=> A | B]"));
  EXPECT_EQ(res.at(18), R("[=> B] / [=> A | B]"));
  EXPECT_EQ(replay_table1(), R("[=> B] / [=> A | B]"));
  for (const auto& s : res.trace) {
    EXPECT_TRUE(rule_locally_sound(s.output, m6())) << s.step;
    EXPECT_EQ(s.principle.rfind("premise merge on ", 0), 0u);
  }
}

TEST(Replay, TraceJson) {
  const auto res = replay_table1_trace();
  const Json j = to_json(res.trace.front());
  EXPECT_EQ(j["step"], 1);
  EXPECT_EQ(j["inputs"].size(), 2u);
  EXPECT_EQ(schematic_rule_from_json(j["output"]), res.trace.front().output);
}

// Reductions and combinations over translated rules preserve soundness and
// strictly shrink the premise set.
TEST(Invariants, TransformationsPreserveSoundness) {
  std::map<Sequent, std::vector<const SchematicRule*>> by_conclusion;
  for (const auto& r : translated()) by_conclusion[r.conclusion].push_back(&r);
  std::mt19937 rng(51);
  int reductions = 0, combinations = 0;
  for (const auto& [concl, group] : by_conclusion) {
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        if (const auto red = reduce_propred(*group[i], *group[j])) {
          ++reductions;
          ASSERT_TRUE(rule_locally_sound(*red, m6()));
          ASSERT_LT(red->premises.size(), std::max(group[i]->premises.size(), group[j]->premises.size()));
        }
        if (rng() % 8 == 0) {
          ++combinations;
          ASSERT_TRUE(rule_locally_sound(combine_principle3(*group[i], *group[j]), m6()));
        }
      }
  }
  EXPECT_GT(reductions, 20);
  EXPECT_GT(combinations, 20);
}
