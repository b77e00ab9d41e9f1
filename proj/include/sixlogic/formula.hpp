// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sixlogic/error.hpp"

namespace six {

/// Connectives of the language. Arity: Neg, Nabla unary; And, Or binary.
enum class Connective : std::uint8_t { Neg, Nabla, And, Or };

inline constexpr int arity(Connective c) noexcept {
  return (c == Connective::And || c == Connective::Or) ? 2 : 1;
}

inline std::string_view connective_name(Connective c) noexcept {
  switch (c) {
    case Connective::Neg: return "neg";
    case Connective::Nabla: return "nabla";
    case Connective::And: return "and";
    case Connective::Or: return "or";
  }
  return "?";
}

inline Connective connective_from_name(std::string_view name) {
  if (name == "neg" || name == "~" || name == "¬") return Connective::Neg;
  if (name == "nabla" || name == "#" || name == "∇") return Connective::Nabla;
  if (name == "and" || name == "&" || name == "∧") return Connective::And;
  if (name == "or" || name == "|" || name == "∨") return Connective::Or;
  throw UnknownConnectiveError("unknown connective '" + std::string(name) + "'");
}

inline bool is_object_variable_name(std::string_view name) noexcept {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name.substr(1))
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
  return true;
}

/// Metavariables of schematic rules are single upper-case letters (A, B, ...).
inline bool is_metavariable_name(std::string_view name) noexcept {
  return name.size() == 1 && name[0] >= 'A' && name[0] <= 'Z';
}

/// Immutable formula tree over {¬, ∇, ∧, ∨}. Copies share structure.
///
/// Equality and ordering are purely syntactic. The ordering (the "structural
/// order") is a total order used to keep formula sets canonical: variables
/// first, then by connective, then by operands.
class Formula {
 public:
  enum class Kind : std::uint8_t { Var, Neg, Nabla, And, Or };

  static Formula var(std::string name) {
    if (!is_object_variable_name(name) && !is_metavariable_name(name))
      throw InvalidArgument("invalid variable name '" + name + "'");
    return Formula(std::make_shared<const Node>(Kind::Var, std::move(name), nullptr, nullptr));
  }
  static Formula neg(const Formula& f) { return unary(Kind::Neg, f); }
  static Formula nabla(const Formula& f) { return unary(Kind::Nabla, f); }
  static Formula conj(const Formula& a, const Formula& b) { return binary(Kind::And, a, b); }
  static Formula disj(const Formula& a, const Formula& b) { return binary(Kind::Or, a, b); }

  static Formula apply(Connective c, const std::vector<Formula>& args) {
    if (args.size() != static_cast<std::size_t>(arity(c)))
      throw InvalidArgument("wrong number of operands for " + std::string(connective_name(c)));
    switch (c) {
      case Connective::Neg: return neg(args[0]);
      case Connective::Nabla: return nabla(args[0]);
      case Connective::And: return conj(args[0], args[1]);
      case Connective::Or: return disj(args[0], args[1]);
    }
    throw InvalidArgument("bad connective");
  }

  Kind kind() const noexcept { return node_->kind; }
  bool is_var() const noexcept { return kind() == Kind::Var; }
  bool is(Kind k) const noexcept { return kind() == k; }
  Connective connective() const {
    switch (kind()) {
      case Kind::Neg: return Connective::Neg;
      case Kind::Nabla: return Connective::Nabla;
      case Kind::And: return Connective::And;
      case Kind::Or: return Connective::Or;
      case Kind::Var: break;
    }
    throw InvalidArgument("a variable has no connective");
  }

  const std::string& name() const noexcept { return node_->name; }
  /// Operand of a unary formula, or left operand of a binary one.
  const Formula& operand() const noexcept { return *node_->left; }
  const Formula& lhs() const noexcept { return *node_->left; }
  const Formula& rhs() const noexcept { return *node_->right; }

  std::size_t size() const noexcept { return node_->size; }
  std::size_t depth() const noexcept { return node_->depth; }
  /// Termination weight for backward proof search: var 1, ¬ +1, ∇ +3, binary +1.
  std::size_t weight() const noexcept { return node_->weight; }
  std::size_t hash() const noexcept { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b) noexcept {
    return compare(a, b) == 0;
  }
  friend bool operator<(const Formula& a, const Formula& b) noexcept {
    return compare(a, b) < 0;
  }
  friend bool operator!=(const Formula& a, const Formula& b) noexcept { return !(a == b); }

  static int compare(const Formula& a, const Formula& b) noexcept {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
      case Kind::Var: return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
      case Kind::Neg:
      case Kind::Nabla: return compare(a.operand(), b.operand());
      case Kind::And:
      case Kind::Or: {
        int c = compare(a.lhs(), b.lhs());
        return c != 0 ? c : compare(a.rhs(), b.rhs());
      }
    }
    return 0;
  }

 private:
  struct Node {
    Node(Kind k, std::string n, std::shared_ptr<const Formula> l, std::shared_ptr<const Formula> r)
        : kind(k), name(std::move(n)), left(std::move(l)), right(std::move(r)) {
      std::size_t h = std::hash<int>{}(static_cast<int>(kind)) * 0x9e3779b97f4a7c15ULL;
      switch (kind) {
        case Kind::Var:
          size = 1; depth = 0; weight = 1;
          h ^= std::hash<std::string>{}(name);
          break;
        case Kind::Neg:
        case Kind::Nabla:
          size = left->size() + 1;
          depth = left->depth() + 1;
          weight = left->weight() + (kind == Kind::Neg ? 1 : 3);
          h ^= left->hash() + 0x9e3779b9 + (h << 6) + (h >> 2);
          break;
        case Kind::And:
        case Kind::Or:
          size = left->size() + right->size() + 1;
          depth = std::max(left->depth(), right->depth()) + 1;
          weight = left->weight() + right->weight() + 1;
          h ^= left->hash() + 0x9e3779b9 + (h << 6) + (h >> 2);
          h ^= right->hash() + 0x7f4a7c15 + (h << 6) + (h >> 2);
          break;
      }
      hash = h;
    }
    Kind kind;
    std::string name;
    std::shared_ptr<const Formula> left;
    std::shared_ptr<const Formula> right;
    std::size_t size = 0;
    std::size_t depth = 0;
    std::size_t weight = 0;
    std::size_t hash = 0;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static Formula unary(Kind k, const Formula& f) {
    return Formula(std::make_shared<const Node>(k, std::string{}, std::make_shared<const Formula>(f), nullptr));
  }
  static Formula binary(Kind k, const Formula& a, const Formula& b) {
    return Formula(std::make_shared<const Node>(k, std::string{}, std::make_shared<const Formula>(a),
                                                std::make_shared<const Formula>(b)));
  }

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

using FormulaSet = std::set<Formula>;

/// Variables of a formula, in lexicographic order.
inline void collect_variables(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Var: out.insert(f.name()); break;
    case Formula::Kind::Neg:
    case Formula::Kind::Nabla: collect_variables(f.operand(), out); break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_variables(f.lhs(), out);
      collect_variables(f.rhs(), out);
      break;
  }
}

inline std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  collect_variables(f, out);
  return out;
}

/// Replaces every occurrence of the variable `name` in `f` by `g`.
inline Formula substitute(const Formula& f, std::string_view name, const Formula& g) {
  switch (f.kind()) {
    case Formula::Kind::Var: return f.name() == name ? g : f;
    case Formula::Kind::Neg: return Formula::neg(substitute(f.operand(), name, g));
    case Formula::Kind::Nabla: return Formula::nabla(substitute(f.operand(), name, g));
    case Formula::Kind::And: return Formula::conj(substitute(f.lhs(), name, g), substitute(f.rhs(), name, g));
    case Formula::Kind::Or: return Formula::disj(substitute(f.lhs(), name, g), substitute(f.rhs(), name, g));
  }
  return f;
}

/// Consistency operator: ∘α = ¬∇(α ∧ ¬α).
inline Formula circ(const Formula& f) {
  return Formula::neg(Formula::nabla(Formula::conj(f, Formula::neg(f))));
}

/// Inconsistency operator: •α = ∇(α ∧ ¬α).
inline Formula bullet(const Formula& f) {
  return Formula::nabla(Formula::conj(f, Formula::neg(f)));
}

}  // namespace six
