// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sixlogic/error.hpp"
#include "sixlogic/formula.hpp"
#include "sixlogic/truth_value.hpp"

namespace six {

/// Total map from propositional variables to matrix values.
using Assignment = std::map<std::string, Value>;

/// A finite logical matrix ⟨values, designated, operations⟩.
///
/// Values are opaque indices 0..n-1 carrying display names. Each connective
/// may or may not have a table; unary tables have n entries, binary tables
/// n*n entries in row-major order (table[x*n + y] = x op y). An optional
/// order relation supports degree-preserving consequence.
class FiniteMatrix {
 public:
  FiniteMatrix(std::vector<std::string> names, std::vector<Value> designated,
               std::map<Connective, std::vector<Value>> tables,
               std::optional<std::vector<bool>> order = std::nullopt)
      : names_(std::move(names)), designated_(names_.size(), false), tables_(std::move(tables)),
        order_(std::move(order)) {
    const std::size_t n = names_.size();
    if (n < 2 || n > 255) throw MatrixError("a matrix needs between 2 and 255 values");
    for (Value d : designated) {
      if (d >= n) throw MatrixError("designated value out of range");
      designated_[d] = true;
    }
    std::size_t count = 0;
    for (bool d : designated_) count += d;
    if (count == 0) throw MatrixError("designated set is empty");
    if (count == n) throw MatrixError("designated set contains every value");
    for (const auto& [c, table] : tables_) {
      const std::size_t expected = arity(c) == 1 ? n : n * n;
      if (table.size() != expected)
        throw MatrixError("table for " + std::string(connective_name(c)) + " has wrong size");
      for (Value v : table)
        if (v >= n) throw MatrixError("table for " + std::string(connective_name(c)) + " leaves the value set");
    }
    if (order_ && order_->size() != n * n) throw MatrixError("order relation has wrong size");
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Value v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Value> value_named(std::string_view n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return static_cast<Value>(i);
    return std::nullopt;
  }

  bool designated(Value v) const { return designated_.at(v); }
  std::vector<Value> designated_values() const {
    std::vector<Value> out;
    for (std::size_t i = 0; i < designated_.size(); ++i)
      if (designated_[i]) out.push_back(static_cast<Value>(i));
    return out;
  }

  bool has(Connective c) const { return tables_.count(c) > 0; }
  std::vector<Connective> connectives() const {
    std::vector<Connective> out;
    for (const auto& [c, t] : tables_) out.push_back(c);
    return out;
  }

  const std::vector<Value>& table(Connective c) const {
    auto it = tables_.find(c);
    if (it == tables_.end())
      throw UnknownConnectiveError("matrix has no table for " + std::string(connective_name(c)));
    return it->second;
  }

  Value apply(Connective c, Value x) const { return table(c)[x]; }
  Value apply(Connective c, Value x, Value y) const { return table(c)[x * size() + y]; }
  Value apply(Connective c, const std::vector<Value>& args) const {
    return arity(c) == 1 ? apply(c, args.at(0)) : apply(c, args.at(0), args.at(1));
  }

  bool has_order() const noexcept { return order_.has_value(); }
  bool leq(Value x, Value y) const {
    if (!order_) throw MatrixError("matrix has no order relation");
    return (*order_)[x * size() + y];
  }

 private:
  std::vector<std::string> names_;
  std::vector<bool> designated_;
  std::map<Connective, std::vector<Value>> tables_;
  std::optional<std::vector<bool>> order_;
};

namespace detail {

inline TruthValue s6_inf(TruthValue x, TruthValue y) {
  if (six::leq(x, y)) return x;
  if (six::leq(y, x)) return y;
  return TruthValue::OneThird;  // only incomparable pair is {N, B}
}

inline TruthValue s6_sup(TruthValue x, TruthValue y) {
  if (six::leq(x, y)) return y;
  if (six::leq(y, x)) return x;
  return TruthValue::TwoThirds;
}

}  // namespace detail

/// The matrix M6 = ⟨S6, [b), {¬, ∇, ∧, ∨}⟩: lattice inf/sup, the De Morgan
/// negation fixing N and B, and ∇x = 0 iff x = 0.
inline const FiniteMatrix& m6() {
  static const FiniteMatrix matrix = [] {
    std::vector<std::string> names;
    for (TruthValue t : kAllTruthValues) names.emplace_back(name_of(t));
    const std::size_t n = names.size();
    std::vector<Value> neg = {index_of(TruthValue::One), index_of(TruthValue::TwoThirds),
                              index_of(TruthValue::N),   index_of(TruthValue::B),
                              index_of(TruthValue::OneThird), index_of(TruthValue::Zero)};
    std::vector<Value> nabla(n, index_of(TruthValue::One));
    nabla[index_of(TruthValue::Zero)] = index_of(TruthValue::Zero);
    std::vector<Value> conj(n * n), disj(n * n);
    std::vector<bool> order(n * n);
    for (TruthValue x : kAllTruthValues)
      for (TruthValue y : kAllTruthValues) {
        const std::size_t i = index_of(x) * n + index_of(y);
        conj[i] = index_of(detail::s6_inf(x, y));
        disj[i] = index_of(detail::s6_sup(x, y));
        order[i] = six::leq(x, y);
      }
    std::vector<Value> designated = {index_of(TruthValue::B), index_of(TruthValue::TwoThirds),
                                     index_of(TruthValue::One)};
    return FiniteMatrix(std::move(names), std::move(designated),
                        {{Connective::Neg, neg}, {Connective::Nabla, nabla},
                         {Connective::And, conj}, {Connective::Or, disj}},
                        std::move(order));
  }();
  return matrix;
}

/// Two-valued Boolean matrix over {¬, ∧, ∨}; values "0" < "1", "1" designated.
inline const FiniteMatrix& boolean_matrix() {
  static const FiniteMatrix matrix(
      {"0", "1"}, {1},
      {{Connective::Neg, {1, 0}}, {Connective::And, {0, 0, 0, 1}}, {Connective::Or, {0, 1, 1, 1}}},
      std::vector<bool>{true, true, false, true});
  return matrix;
}

/// Homomorphic extension of an assignment to a formula.
inline Value eval(const Formula& f, const Assignment& a, const FiniteMatrix& m) {
  switch (f.kind()) {
    case Formula::Kind::Var: {
      auto it = a.find(f.name());
      if (it == a.end()) throw MissingVariableError(f.name());
      if (it->second >= m.size()) throw InvalidArgument("assigned value out of range for '" + f.name() + "'");
      return it->second;
    }
    case Formula::Kind::Neg: return m.apply(Connective::Neg, eval(f.operand(), a, m));
    case Formula::Kind::Nabla: return m.apply(Connective::Nabla, eval(f.operand(), a, m));
    case Formula::Kind::And: return m.apply(Connective::And, eval(f.lhs(), a, m), eval(f.rhs(), a, m));
    case Formula::Kind::Or: return m.apply(Connective::Or, eval(f.lhs(), a, m), eval(f.rhs(), a, m));
  }
  return 0;
}

inline TruthValue eval6(const Formula& f, const Assignment& a) { return truth_value(eval(f, a, m6())); }

}  // namespace six
