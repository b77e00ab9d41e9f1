// SPDX-License-Identifier: Apache-2.0
// One PASS/FAIL line per acceptance criterion, with wall time against budget.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "sixlogic/sixlogic.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace six;
using fixtures::F;
using fixtures::S;

namespace {

struct Failure {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

struct Criterion {
  int id;
  std::string name;
  double budget_ms;
  std::function<std::string()> body;  // returns a short summary
};

std::string truth_tables() {
  const auto& m = m6();
  for (Value x = 0; x < 6; ++x) {
    require(m.apply(Connective::Neg, x) == oracle::kNeg[x], "neg at " + m.name(x));
    require(m.apply(Connective::Nabla, x) == oracle::kNabla[x], "nabla at " + m.name(x));
  }
  const std::vector<Value> circ_col = {5, 0, 0, 0, 0, 5}, bullet_col = {0, 5, 5, 5, 5, 0};
  for (Value x = 0; x < 6; ++x) {
    require(eval(circ(F("p")), {{"p", x}}, m) == circ_col[x], "circ at " + m.name(x));
    require(eval(bullet(F("p")), {{"p", x}}, m) == bullet_col[x], "bullet at " + m.name(x));
  }
  return "neg, nabla, circ, bullet columns exact";
}

std::string rule_counts() {
  const auto sf = generate_sf(m6());
  require(sf.size() == 84, "signed rules: " + std::to_string(sf.size()));
  const auto two = translate_calculus(sf, six_witnesses());
  require(two.size() == 230, "translated rules: " + std::to_string(two.size()));
  std::map<std::string, int> per;
  for (const auto& r : two) per[r.name.substr(1, r.name.find('_') - 1)]++;
  const auto expect = oracle::translated_counts();
  require(per == expect, "per-connective counts differ from the reference sum");
  return "84 signed; 230 translated (neg " + std::to_string(per["neg"]) + ", nabla " + std::to_string(per["nabla"]) +
         ", or " + std::to_string(per["or"]) + ", and " + std::to_string(per["and"]) + ")";
}

std::string axiom_translation() {
  const NSequent ax = axiom_nsequent(F("p"), 6);
  const auto parts = partitions(ax, six_witnesses());
  require(parts.size() == 324, "partitions: " + std::to_string(parts.size()));
  for (const auto& pi : parts)
    require(sequent_of_partition(ax, pi, six_witnesses()).has_common_formula(), "partition without common formula");
  return "324 partitions, all weakened axioms";
}

std::string witness_validation() {
  const auto base = six_witnesses();
  require(static_cast<bool>(validate_witnesses(m6(), base)), "table does not validate");
  int flips = 0;
  for (std::size_t t = 0; t < base.size(); ++t)
    for (int side = 0; side < 2; ++side) {
      const std::size_t n = side ? base[t].betas.size() : base[t].alphas.size();
      for (std::size_t i = 0; i < n; ++i) {
        auto w = base;
        auto& from = side ? w[t].betas : w[t].alphas;
        auto& to = side ? w[t].alphas : w[t].betas;
        to.push_back(from[i]);
        from.erase(from.begin() + static_cast<std::ptrdiff_t>(i));
        require(!validate_witnesses(m6(), w), "flip survives at row " + std::to_string(t));
        ++flips;
      }
    }
  return "valid; all " + std::to_string(flips) + " single side-flips rejected";
}

std::string soundness() {
  int n = 0;
  for (const auto& r : gsix_schematic_rules()) require(rule_locally_sound(r, m6()), r.name), ++n;
  for (const auto& r : generate_sf(m6())) require(sf_rule_locally_sound(r, m6()), rule_label(r, m6())), ++n;
  for (const auto& r : translate_calculus(generate_sf(m6()), six_witnesses()))
    require(rule_locally_sound(r, m6()), r.name), ++n;
  require(n == 25 + 84 + 230, "rule total " + std::to_string(n));
  return "25 + 84 + 230 rules locally sound";
}

std::string replay() {
  const auto res = replay_table1_trace();
  const auto R = [](const char* t) { return parse_schematic_rule(t); };
  require(res.at(9) == R("[~A =>] [=> B] / [=> A | B]"), "row 9: " + to_string(res.at(9)));
  require(res.at(17) == R("[=> ~A] [=> B] / [=> A | B]"), "row 17: " + to_string(res.at(17)));
  require(res.final_rule == R("[=> B] / [=> A | B]"), "final: " + to_string(res.final_rule));
  return std::to_string(res.trace.size()) + " steps; final " + to_string(res.final_rule);
}

std::string worked_sequents() {
  for (const char* text : {"p | q => ~(~p & ~q)", "#~#(p & q) => ~#p | ~#q"}) {
    const auto out = decide(S(text), Engine::Cross);
    require(out.provable(), std::string(text) + " not provable");
  }
  const auto g = gsub_sequent(S("#~#(p & q) => ~#p | ~#q"));
  require(g == fixtures::worked_gsub(), "gsub has " + std::to_string(g.size()) + " formulas");
  require(check_proof(fixtures::disjunction_proof()).ok, "displayed disjunction proof rejected");
  require(check_proof(fixtures::worked_proof()).ok, "worked proof rejected");
  return "both provable (cross); gsub = 15 listed formulas";
}

std::string negatives() {
  require(decide(S("=>"), Engine::Cross).not_provable(), "empty sequent");
  require(decide(S("p, ~p => q"), Engine::Cross).not_provable(), "explosion");
  oracle::Gen g(801);
  for (int i = 0; i < 100; ++i) {
    const Formula f = g.formula(3, 3);
    const Sequent s({}, {Formula::conj(f, Formula::neg(f))});
    require(decide(s, Engine::Cross).not_provable(), "contradiction provable: " + to_string(s));
  }
  return "empty, explosion, 100 contradictions all not provable";
}

std::string modal_axioms() {
  for (const char* text : {"p => #p", "=> #p | ~#p"}) {
    require(sequent_valid(S(text), m6()), std::string(text) + " invalid");
    const auto out = decide_backward(S(text));
    require(out.provable() && check_proof(*out.witness).ok, std::string(text) + " not proved");
  }
  return "both valid and proved backward";
}

std::string engine_agreement() {
  oracle::Gen g(1001);
  int provable = 0, checked = 0;
  std::map<std::string, int> skipped;
  for (int i = 0; i < 500; ++i) {
    const Sequent s = g.sequent(3, 3, 3);
    DecisionOutcome out;
    try {
      out = decide_cross(s);
    } catch (const EngineDisagreement& e) {
      throw Failure{e.what()};
    }
    require(!out.exceeded(), "every engine exceeded on " + to_string(s));
    require(out.provable() == oracle::valid(s), "verdict differs from reference on " + to_string(s));
    for (const auto* name : {"saturation-literal", "saturation", "backward", "semantic"})
      if (out.details.find(std::string(name) + ":") != std::string::npos) skipped[name]++;
    if (out.provable()) {
      ++provable;
      require(out.witness && check_proof(*out.witness, false).ok, "unchecked witness for " + to_string(s));
      ++checked;
    }
  }
  std::ostringstream os;
  os << "500 sequents, " << provable << " provable, " << checked << " witnesses checked cut-free, 0 disagreements";
  for (const auto& [name, n] : skipped) os << "; " << name << " over cap on " << n;
  return os.str();
}

std::string translation_semantics() {
  oracle::Gen g(1101);
  const auto w = six_witnesses();
  for (int i = 0; i < 250; ++i) {
    const NSequent ns = g.nsequent(2, 2, 3);
    bool all = true;
    for (const auto& s : two_of(ns, w)) all = all && sequent_valid(s, m6());
    require(nsequent_valid(ns, m6()) == all, "mismatch on " + to_string(ns));
    require(oracle::nvalid(ns) == all, "reference mismatch on " + to_string(ns));
  }
  return "250 n-sequents, 0 failures";
}

std::string degree_matrix() {
  oracle::Gen g(1201);
  for (int i = 0; i < 600; ++i) {
    std::vector<Formula> gamma;
    const int k = 1 + g.below(3);
    for (int j = 0; j < k; ++j) gamma.push_back(g.formula(3, 3));
    const Formula a = g.formula(3, 3);
    Sequent s;
    s.left.insert(gamma.begin(), gamma.end());
    s.right.insert(a);
    require(degree_entails(gamma, a) == oracle::valid(s), "disagreement on " + to_string(s));
  }
  return "600 pairs, 0 disagreements";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "truth tables", 1, truth_tables},
      {2, "rule counts", 1000, rule_counts},
      {3, "axiom translation", 1000, axiom_translation},
      {4, "witness validation", 1000, witness_validation},
      {5, "local soundness of all rule sets", 5000, soundness},
      {6, "streamlining replay", 1000, replay},
      {7, "worked sequents and gsub", 5000, worked_sequents},
      {8, "negative fixtures", 10000, negatives},
      {9, "modal axioms", 1000, modal_axioms},
      {10, "engine agreement", 300000, engine_agreement},
      {11, "translation semantics", 60000, translation_semantics},
      {12, "degree/matrix agreement", 60000, degree_matrix},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string summary;
    bool ok = true;
    try {
      summary = c.body();
    } catch (const Failure& f) {
      ok = false;
      summary = f.why;
    } catch (const std::exception& e) {
      ok = false;
      summary = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ok && ms > c.budget_ms) {
      ok = false;
      summary += " (over time budget)";
    }
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << std::setw(2) << c.id << "] " << c.name << ": " << summary << "  ("
              << std::fixed << std::setprecision(1) << ms << " ms / " << c.budget_ms << " ms)\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
