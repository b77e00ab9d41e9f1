// SPDX-License-Identifier: Apache-2.0
#pragma once

// Translation of n-sequents (and of the signed calculus) into ordinary
// two-sided sequents, driven by a table of one-variable witness formulas.
//
// For each truth value tᵢ the table lists formulas αᵢ₁…αᵢₗ and βᵢ₁…βᵢₘ in
// the variable p such that v(ψ) = tᵢ iff every αᵢⱼ[p/ψ] is undesignated and
// every βᵢₖ[p/ψ] designated. A partition sends each formula of cell Γᵢ to one
// α-slot or β-slot; the resulting sequent has the α-instances on the left
// and the β-instances on the right.

#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sixlogic/error.hpp"
#include "sixlogic/matrix.hpp"
#include "sixlogic/schematic_rule.hpp"
#include "sixlogic/sequent.hpp"
#include "sixlogic/sf_calculus.hpp"

namespace six {

inline const std::string kWitnessVariable = "p";

struct WitnessRow {
  std::vector<Formula> alphas;
  std::vector<Formula> betas;

  std::size_t slots() const noexcept { return alphas.size() + betas.size(); }

  friend bool operator==(const WitnessRow& a, const WitnessRow& b) {
    return a.alphas == b.alphas && a.betas == b.betas;
  }
};

/// One row per matrix value, indexed by value.
using WitnessTable = std::vector<WitnessRow>;

/// The witness table of the six-valued matrix.
inline WitnessTable six_witnesses() {
  const Formula p = Formula::var(kWitnessVariable);
  const Formula np = Formula::neg(p);
  const Formula dp = Formula::nabla(p);
  const Formula dnp = Formula::nabla(np);
  WitnessTable w(6);
  w[index_of(TruthValue::Zero)] = {{p, dp}, {np}};
  w[index_of(TruthValue::OneThird)] = {{p}, {np, dp}};
  w[index_of(TruthValue::N)] = {{p, np}, {}};
  w[index_of(TruthValue::B)] = {{}, {p, np}};
  w[index_of(TruthValue::TwoThirds)] = {{np}, {p, dnp}};
  w[index_of(TruthValue::One)] = {{np, dnp}, {p}};
  return w;
}

struct WitnessValidation {
  bool ok = true;
  Value value = 0;
  /// 1: first witness is not p; 2: the row does not single out its value.
  int condition = 0;
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

namespace detail {

inline void require_unary(const WitnessTable& w) {
  for (const auto& row : w)
    for (const auto* list : {&row.alphas, &row.betas})
      for (const auto& f : *list) {
        auto vars = variables(f);
        if (vars.size() != 1 || *vars.begin() != kWitnessVariable)
          throw InvalidArgument("witness '" + to_string(f) + "' must mention exactly the variable p");
      }
}

}  // namespace detail

/// Checks both witness conditions exhaustively at the value level (exact,
/// because witnesses mention the single variable p).
inline WitnessValidation validate_witnesses(const FiniteMatrix& m, const WitnessTable& w) {
  if (w.size() != m.size())
    throw IndexMismatchError("witness table has " + std::to_string(w.size()) + " rows, matrix has " +
                             std::to_string(m.size()) + " values");
  const Formula p = Formula::var(kWitnessVariable);
  detail::require_unary(w);
  for (Value t = 0; t < m.size(); ++t) {
    const auto& row = w[t];
    const bool ok1 = m.designated(t) ? (!row.betas.empty() && row.betas.front() == p)
                                     : (!row.alphas.empty() && row.alphas.front() == p);
    if (!ok1)
      return {false, t, 1,
              "value " + m.name(t) + (m.designated(t) ? ": first beta must be p" : ": first alpha must be p")};
  }
  for (Value t = 0; t < m.size(); ++t) {
    const auto& row = w[t];
    for (Value x = 0; x < m.size(); ++x) {
      const Assignment a{{kWitnessVariable, x}};
      bool holds = true;
      for (const auto& f : row.alphas) holds = holds && !m.designated(eval(f, a, m));
      for (const auto& f : row.betas) holds = holds && m.designated(eval(f, a, m));
      if (holds != (x == t))
        return {false, t, 2,
                "row " + m.name(t) + (holds ? " also accepts value " : " rejects its own value ") + m.name(x)};
    }
  }
  return {};
}

/// Slot choice for every formula of every cell, aligned with the canonical
/// order of the cell. Slot s < lᵢ is α-slot s, otherwise β-slot s - lᵢ.
struct Partition {
  std::vector<std::vector<std::size_t>> slots;

  friend bool operator==(const Partition& a, const Partition& b) { return a.slots == b.slots; }
};

struct PartitionLimits {
  std::size_t max_partitions = 1'000'000;
};

inline std::size_t partition_count(const NSequent& ns, const WitnessTable& w) {
  if (ns.arity() != w.size()) throw IndexMismatchError("n-sequent and witness table differ in arity");
  std::size_t count = 1;
  for (std::size_t i = 0; i < ns.cells.size(); ++i)
    for (std::size_t k = 0; k < ns.cells[i].size(); ++k) {
      const std::size_t s = w[i].slots();
      if (s == 0) return 0;
      if (count > std::numeric_limits<std::size_t>::max() / s) return std::numeric_limits<std::size_t>::max();
      count *= s;
    }
  return count;
}

/// All partitions, ∏ᵢ (lᵢ+mᵢ)^|Γᵢ| of them, in odometer order.
inline std::vector<Partition> partitions(const NSequent& ns, const WitnessTable& w,
                                         const PartitionLimits& limits = {}) {
  const std::size_t count = partition_count(ns, w);
  if (count > limits.max_partitions)
    throw ResourceError("partition count " + std::to_string(count) + " exceeds the cap of " +
                        std::to_string(limits.max_partitions));
  std::vector<Partition> out;
  if (count == 0) return out;
  out.reserve(count);
  // flatten (cell, position) pairs into one odometer
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  Partition cur;
  cur.slots.resize(ns.cells.size());
  for (std::size_t i = 0; i < ns.cells.size(); ++i) {
    cur.slots[i].assign(ns.cells[i].size(), 0);
    for (std::size_t k = 0; k < ns.cells[i].size(); ++k) positions.emplace_back(i, k);
  }
  while (true) {
    out.push_back(cur);
    std::size_t d = positions.size();
    bool carried_out = true;
    while (d > 0) {
      --d;
      auto [i, k] = positions[d];
      if (++cur.slots[i][k] < w[i].slots()) {
        carried_out = false;
        break;
      }
      cur.slots[i][k] = 0;
    }
    if (carried_out) break;
  }
  return out;
}

/// Σ_π: α-instances of the formulas sent to α-slots on the left, β-instances on the right.
inline Sequent sequent_of_partition(const NSequent& ns, const Partition& pi, const WitnessTable& w) {
  if (pi.slots.size() != ns.cells.size()) throw InvalidArgument("partition does not match the n-sequent");
  Sequent s;
  for (std::size_t i = 0; i < ns.cells.size(); ++i) {
    if (pi.slots[i].size() != ns.cells[i].size()) throw InvalidArgument("partition does not match the n-sequent");
    std::size_t k = 0;
    for (const auto& f : ns.cells[i]) {
      const std::size_t slot = pi.slots[i][k++];
      const auto& row = w[i];
      if (slot < row.alphas.size()) {
        s.left.insert(substitute(row.alphas[slot], kWitnessVariable, f));
      } else if (slot < row.slots()) {
        s.right.insert(substitute(row.betas[slot - row.alphas.size()], kWitnessVariable, f));
      } else {
        throw InvalidArgument("slot index out of range");
      }
    }
  }
  return s;
}

/// Raw partition-indexed list of Σ_π (may contain duplicates).
inline std::vector<Sequent> two_list(const NSequent& ns, const WitnessTable& w, const PartitionLimits& limits = {}) {
  std::vector<Sequent> out;
  for (const auto& pi : partitions(ns, w, limits)) out.push_back(sequent_of_partition(ns, pi, w));
  return out;
}

/// TWO(Σ) = {Σ_π | π a partition of Σ}, as a set.
inline std::set<Sequent> two_of(const NSequent& ns, const WitnessTable& w, const PartitionLimits& limits = {}) {
  auto list = two_list(ns, w, limits);
  return {list.begin(), list.end()};
}

/// Translates context-free signed rules into two-sided schematic rules: one
/// rule per element of TWO(conclusion), with premises ⋃ TWO(premise)
/// (metavariables A, B stand for the principal subformulas).
inline std::vector<SchematicRule> translate_calculus(const std::vector<SignedRule>& rules, const WitnessTable& w,
                                                     const FiniteMatrix& m = m6()) {
  detail::require_unary(w);
  std::vector<SchematicRule> out;
  for (const auto& r : rules) {
    std::vector<Formula> metas;
    for (std::size_t i = 0; i < r.inputs.size(); ++i) metas.push_back(metavariable(static_cast<char>('A' + i)));
    std::set<Sequent> premises;
    for (std::size_t i = 0; i < r.inputs.size(); ++i) {
      NSequent single(w.size());
      single.cells.at(r.inputs[i]).insert(metas[i]);
      auto part = two_of(single, w);
      premises.insert(part.begin(), part.end());
    }
    NSequent concl(w.size());
    concl.cells.at(r.output).insert(Formula::apply(r.connective, metas));
    std::size_t k = 0;
    for (const auto& c : two_of(concl, w)) {
      ++k;
      out.push_back({rule_label(r, m) + "_" + std::to_string(k), premises, c});
    }
  }
  return out;
}

}  // namespace six
