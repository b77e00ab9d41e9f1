// SPDX-License-Identifier: Apache-2.0
#pragma once

// Brute-force semantic oracles: every question is answered by enumerating
// all |values|^#vars assignments, in lexicographic variable order.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sixlogic/error.hpp"
#include "sixlogic/matrix.hpp"
#include "sixlogic/sequent.hpp"

namespace six {

struct OracleLimits {
  std::size_t max_variables = 8;
};

/// Calls `visit(assignment)` for every assignment of `m`'s values to `vars`
/// until it returns false. Returns false iff stopped early.
template <typename Visitor>
bool for_each_assignment(const std::set<std::string>& vars, const FiniteMatrix& m, Visitor&& visit,
                         const OracleLimits& limits = {}) {
  if (vars.size() > limits.max_variables)
    throw ResourceError("exhaustive enumeration over " + std::to_string(vars.size()) +
                        " variables exceeds the cap of " + std::to_string(limits.max_variables));
  const std::vector<std::string> names(vars.begin(), vars.end());
  std::vector<Value> digits(names.size(), 0);
  Assignment a;
  for (const auto& n : names) a[n] = 0;
  while (true) {
    if (!visit(static_cast<const Assignment&>(a))) return false;
    // odometer: last variable varies fastest
    std::size_t i = names.size();
    while (i > 0) {
      --i;
      if (++digits[i] < m.size()) {
        a[names[i]] = digits[i];
        break;
      }
      digits[i] = 0;
      a[names[i]] = 0;
      if (i == 0) return true;
    }
    if (names.empty()) return true;
  }
}

/// v satisfies Γ ⇒ Δ iff some member of Γ is undesignated or some member of Δ designated.
inline bool satisfies(const Assignment& a, const Sequent& s, const FiniteMatrix& m) {
  for (const auto& f : s.left)
    if (!m.designated(eval(f, a, m))) return true;
  for (const auto& f : s.right)
    if (m.designated(eval(f, a, m))) return true;
  return false;
}

/// First falsifying assignment in enumeration order, if any.
inline std::optional<Assignment> sequent_counterexample(const Sequent& s, const FiniteMatrix& m,
                                                        const OracleLimits& limits = {}) {
  std::optional<Assignment> found;
  for_each_assignment(
      variables(s), m,
      [&](const Assignment& a) {
        if (satisfies(a, s, m)) return true;
        found = a;
        return false;
      },
      limits);
  return found;
}

inline bool sequent_valid(const Sequent& s, const FiniteMatrix& m, const OracleLimits& limits = {}) {
  return !sequent_counterexample(s, m, limits).has_value();
}

/// v satisfies the n-sequent iff v(ψ) = tᵢ for some ψ ∈ Γᵢ.
inline bool satisfies(const Assignment& a, const NSequent& s, const FiniteMatrix& m) {
  for (std::size_t i = 0; i < s.cells.size(); ++i)
    for (const auto& f : s.cells[i])
      if (eval(f, a, m) == i) return true;
  return false;
}

inline bool nsequent_valid(const NSequent& s, const FiniteMatrix& m, const OracleLimits& limits = {}) {
  if (s.arity() != m.size())
    throw IndexMismatchError("n-sequent has " + std::to_string(s.arity()) + " cells but the matrix has " +
                             std::to_string(m.size()) + " values");
  return for_each_assignment(
      variables(s), m, [&](const Assignment& a) { return satisfies(a, s, m); }, limits);
}

namespace detail {

inline std::set<std::string> variables_of(const std::vector<Formula>& fs) {
  std::set<std::string> vars;
  for (const auto& f : fs) collect_variables(f, vars);
  return vars;
}

}  // namespace detail

/// Degree-preserving consequence over S6: ⋀premises ≤ conclusion under every valuation.
inline bool degree_entails(const std::vector<Formula>& premises, const Formula& conclusion,
                           const OracleLimits& limits = {}) {
  if (premises.empty())
    throw InvalidArgument("degree_entails needs at least one premise; use is_theorem for theoremhood");
  const FiniteMatrix& m = m6();
  auto all = premises;
  all.push_back(conclusion);
  return for_each_assignment(
      detail::variables_of(all), m,
      [&](const Assignment& a) {
        Value meet = eval(premises.front(), a, m);
        for (std::size_t i = 1; i < premises.size(); ++i)
          meet = m.apply(Connective::And, meet, eval(premises[i], a, m));
        return m.leq(meet, eval(conclusion, a, m));
      },
      limits);
}

/// Matrix consequence: every valuation designating all premises designates the conclusion.
inline bool matrix_entails(const std::vector<Formula>& premises, const Formula& conclusion,
                           const FiniteMatrix& m = m6(), const OracleLimits& limits = {}) {
  Sequent s;
  s.left.insert(premises.begin(), premises.end());
  s.right.insert(conclusion);
  return sequent_valid(s, m, limits);
}

/// Theoremhood: the formula takes the top value 1 under every valuation.
inline bool is_theorem(const Formula& f, const OracleLimits& limits = {}) {
  const FiniteMatrix& m = m6();
  return for_each_assignment(
      variables(f), m, [&](const Assignment& a) { return eval(f, a, m) == index_of(TruthValue::One); },
      limits);
}

}  // namespace six
