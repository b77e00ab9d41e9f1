// SPDX-License-Identifier: Apache-2.0
#pragma once

// Generalized subformulas: the closure that bounds every sequent occurring
// in a cut-free GSix proof of a given sequent.

#include "sixlogic/formula.hpp"
#include "sixlogic/sequent.hpp"

namespace six {

struct GsubOptions {
  /// Also close ∇(a∨b) under ∇a, ∇b and ∇¬(a∨b) under ∇¬a, ∇¬b, mirroring
  /// the ∧ clauses. Without it the ∇∨ rules can leave the closure.
  bool disjunction_clauses = true;
};

namespace detail {

inline void gsub_into(const Formula& f, FormulaSet& out, const GsubOptions& opt) {
  if (!out.insert(f).second) return;
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Var:
      return;
    case K::And:
    case K::Or:
      gsub_into(f.lhs(), out, opt);
      gsub_into(f.rhs(), out, opt);
      return;
    case K::Neg: {
      const Formula& a = f.operand();
      switch (a.kind()) {
        case K::Var: return;
        case K::Neg: gsub_into(a.operand(), out, opt); return;
        case K::Nabla: gsub_into(a, out, opt); return;
        case K::And:
        case K::Or:
          gsub_into(Formula::neg(a.lhs()), out, opt);
          gsub_into(Formula::neg(a.rhs()), out, opt);
          return;
      }
      return;
    }
    case K::Nabla: {
      const Formula& a = f.operand();
      gsub_into(a, out, opt);
      gsub_into(Formula::neg(a), out, opt);
      const bool binary_ok = a.is(K::And) || (opt.disjunction_clauses && a.is(K::Or));
      if (binary_ok) {
        gsub_into(Formula::nabla(a.lhs()), out, opt);
        gsub_into(Formula::nabla(a.rhs()), out, opt);
      } else if (a.is(K::Neg)) {
        const Formula& b = a.operand();
        if (b.is(K::And) || (opt.disjunction_clauses && b.is(K::Or))) {
          gsub_into(Formula::nabla(Formula::neg(b.lhs())), out, opt);
          gsub_into(Formula::nabla(Formula::neg(b.rhs())), out, opt);
        } else if (b.is(K::Neg)) {
          gsub_into(Formula::nabla(b.operand()), out, opt);
        }
      }
      return;
    }
  }
}

}  // namespace detail

inline FormulaSet gsub(const Formula& f, const GsubOptions& opt = {}) {
  FormulaSet out;
  detail::gsub_into(f, out, opt);
  return out;
}

inline FormulaSet gsub_sequent(const Sequent& s, const GsubOptions& opt = {}) {
  FormulaSet out;
  for (const auto& f : s.left) detail::gsub_into(f, out, opt);
  for (const auto& f : s.right) detail::gsub_into(f, out, opt);
  return out;
}

}  // namespace six
