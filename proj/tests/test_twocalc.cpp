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
Sequent S(const char* s) { return parse_sequent(s); }

NSequent at(T t, const Formula& f) {
  NSequent out(6);
  out.cells[V(t)].insert(f);
  return out;
}

const std::vector<SchematicRule>& translated() {
  static const auto rules = translate_calculus(generate_sf(m6()), six_witnesses());
  return rules;
}

}  // namespace

TEST(Witnesses, TableShape) {
  const auto w = six_witnesses();
  ASSERT_EQ(w.size(), 6u);
  EXPECT_EQ(w[V(T::N)].alphas, (std::vector<Formula>{F("p"), F("~p")}));
  EXPECT_TRUE(w[V(T::N)].betas.empty());
  EXPECT_EQ(w[V(T::TwoThirds)].betas, (std::vector<Formula>{F("p"), F("#~p")}));
  std::vector<std::size_t> slots;
  for (const auto& row : w) slots.push_back(row.slots());
  EXPECT_EQ(slots, (std::vector<std::size_t>(oracle::kSlots.begin(), oracle::kSlots.end())));
}

TEST(Witnesses, Validates) { EXPECT_TRUE(validate_witnesses(m6(), six_witnesses())); }

TEST(Witnesses, SwappingNAndBFails) {
  auto w = six_witnesses();
  std::swap(w[V(T::N)], w[V(T::B)]);
  const auto res = validate_witnesses(m6(), w);
  EXPECT_FALSE(res);
}

TEST(Witnesses, EverySideFlipFails) {
  const auto base = six_witnesses();
  int flips = 0;
  for (std::size_t t = 0; t < base.size(); ++t) {
    for (int side = 0; side < 2; ++side) {
      const auto& list = side ? base[t].betas : base[t].alphas;
      for (std::size_t i = 0; i < list.size(); ++i) {
        auto w = base;
        auto& from = side ? w[t].betas : w[t].alphas;
        auto& to = side ? w[t].alphas : w[t].betas;
        to.push_back(from[i]);
        from.erase(from.begin() + static_cast<std::ptrdiff_t>(i));
        ++flips;
        EXPECT_FALSE(validate_witnesses(m6(), w)) << "row " << t << " side " << side << " index " << i;
      }
    }
  }
  EXPECT_EQ(flips, 16);
}

TEST(Witnesses, ConditionOneReported) {
  auto w = six_witnesses();
  std::swap(w[V(T::Zero)].alphas[0], w[V(T::Zero)].alphas[1]);
  const auto res = validate_witnesses(m6(), w);
  EXPECT_FALSE(res);
  EXPECT_EQ(res.condition, 1);
  EXPECT_EQ(res.value, V(T::Zero));
}

TEST(Witnesses, Errors) {
  auto w = six_witnesses();
  w.pop_back();
  EXPECT_THROW(validate_witnesses(m6(), w), IndexMismatchError);
  auto w2 = six_witnesses();
  w2[0].alphas.push_back(F("q"));
  EXPECT_THROW(validate_witnesses(m6(), w2), InvalidArgument);
}

TEST(Witnesses, Boolean) {
  WitnessTable w(2);
  w[0] = {{F("p")}, {}};
  w[1] = {{}, {F("p")}};
  EXPECT_TRUE(validate_witnesses(boolean_matrix(), w));
}

TEST(Partitions, Counts) {
  const auto w = six_witnesses();
  EXPECT_EQ(partition_count(axiom_nsequent(F("p"), 6), w), 324u);
  EXPECT_EQ(partitions(axiom_nsequent(F("p"), 6), w).size(), 324u);
  EXPECT_EQ(partitions(at(T::Zero, F("p")), w).size(), 3u);
  EXPECT_EQ(partitions(NSequent(6), w).size(), 1u);
}

TEST(Partitions, CountFormula) {
  oracle::Gen g(41);
  const auto w = six_witnesses();
  for (int i = 0; i < 50; ++i) {
    const NSequent ns = g.nsequent(2, 1, 4);
    std::size_t expect = 1;
    for (int t = 0; t < 6; ++t)
      for (std::size_t k = 0; k < ns.cells[t].size(); ++k) expect *= static_cast<std::size_t>(oracle::kSlots[t]);
    ASSERT_EQ(partitions(ns, w).size(), expect);
  }
}

TEST(Partitions, Cap) {
  EXPECT_THROW(partitions(axiom_nsequent(F("p"), 6), six_witnesses(), PartitionLimits{100}), ResourceError);
}

TEST(Partitions, AxiomTranslationHasCommonFormula) {
  const auto two = two_list(axiom_nsequent(F("p & q"), 6), six_witnesses());
  EXPECT_EQ(two.size(), 324u);
  for (const auto& s : two) EXPECT_TRUE(s.has_common_formula()) << to_string(s);
}

TEST(Translation, SingleCellExamples) {
  const auto w = six_witnesses();
  const Formula a = F("q");
  EXPECT_EQ(two_of(at(T::Zero, a), w), (std::set<Sequent>{S("q =>"), S("#q =>"), S("=> ~q")}));
  EXPECT_EQ(two_of(at(T::B, a), w), (std::set<Sequent>{S("=> q"), S("=> ~q")}));
  EXPECT_EQ(two_of(at(T::TwoThirds, a), w), (std::set<Sequent>{S("~q =>"), S("=> q"), S("=> #~q")}));
  EXPECT_EQ(two_of(NSequent(6), w), (std::set<Sequent>{Sequent{}}));
}

TEST(Translation, SequentOfPartition) {
  const auto w = six_witnesses();
  const NSequent ns = at(T::Zero, F("r"));
  EXPECT_EQ(sequent_of_partition(ns, Partition{{{1}, {}, {}, {}, {}, {}}}, w), S("#r =>"));
  const NSequent nb = at(T::B, F("r"));
  EXPECT_EQ(sequent_of_partition(nb, Partition{{{}, {}, {}, {1}, {}, {}}}, w), S("=> ~r"));
}

TEST(Translation, SemanticEquivalence) {
  oracle::Gen g(42);
  const auto w = six_witnesses();
  for (int i = 0; i < 250; ++i) {
    const NSequent ns = g.nsequent(2, 2, 3);
    bool all = true;
    for (const auto& s : two_of(ns, w)) all = all && oracle::valid(s);
    ASSERT_EQ(oracle::nvalid(ns), all) << to_string(ns);
  }
}

TEST(Translation, RuleCounts) {
  const auto expect = oracle::translated_counts();
  std::map<std::string, int> per;
  for (const auto& r : translated()) per[r.name.substr(1, r.name.find('_') - 1)]++;
  EXPECT_EQ(translated().size(), 230u);
  EXPECT_EQ(per, expect);
  EXPECT_EQ(per["neg"], 16);
  EXPECT_EQ(per["nabla"], 18);
  EXPECT_EQ(per["or"], 98);
  EXPECT_EQ(per["and"], 98);
}

TEST(Translation, NegZeroRule) {
  std::vector<SchematicRule> neg0;
  for (const auto& r : translated())
    if (r.name.rfind("(neg_{0})_", 0) == 0) neg0.push_back(r);
  ASSERT_EQ(neg0.size(), 3u);
  const auto expect = parse_schematic_rule("[A =>] [#A =>] [=> ~A] / [~~A =>]");
  EXPECT_NE(std::find(neg0.begin(), neg0.end(), expect), neg0.end());
}

TEST(Translation, AllLocallySound) {
  for (const auto& r : translated()) EXPECT_TRUE(rule_locally_sound(r, m6())) << r.name;
}

TEST(Translation, NonUnaryWitnessRejected) {
  auto w = six_witnesses();
  w[0].betas.push_back(F("p & q"));
  EXPECT_THROW(translate_calculus(generate_sf(m6()), w), InvalidArgument);
}

TEST(Json, RuleSetRoundTrip) {
  for (const auto& r : translated()) {
    const auto back = schematic_rule_from_json(to_json(r));
    ASSERT_EQ(back, r);
    ASSERT_EQ(back.name, r.name);
  }
  const Json w = to_json(six_witnesses());
  ASSERT_EQ(w.size(), 6u);
  EXPECT_EQ(w[2]["alphas"], (Json{"p", "~p"}));
}
