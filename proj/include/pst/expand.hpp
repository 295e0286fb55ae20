#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "pst/defstore.hpp"
#include "pst/dzfc.hpp"
#include "pst/errors.hpp"
#include "pst/saturating.hpp"

namespace pst {

enum class ExpandMode { None, Full, Partial };

struct ExpandOptions {
  ExpandMode mode = ExpandMode::Full;
  std::set<std::string> protected_symbols;  // consulted in Partial mode
  std::int64_t budget = kCountCap;

  static ExpandOptions full(std::int64_t budget = kCountCap) { return {ExpandMode::Full, {}, budget}; }
  static ExpandOptions partial(const DefStore& store, std::int64_t budget = kCountCap) {
    return {ExpandMode::Partial, store.protected_symbols(), budget};
  }
};

// Replaces defined symbols by their definientia until only primitives (and,
// in partial mode, protected symbols) remain. Relations unfold in place. The
// first unprotected function application found in pre-order at the top of an
// atom A (outside iota bodies and outside other unprotected applications) is
// eliminated as ∃v(v ≃ body[args] ∧ A[v]). Throws BudgetExceeded as soon as a
// constructed subformula is longer than the budget.
dz::FormulaPtr expand(const dz::FormulaPtr& f, const DefStore& store, const ExpandOptions& opts = {});

// The formula a definition asserts about its parameters: ψ for a relation,
// y ≃ rhs for a function (y fresh).
dz::FormulaPtr definiens_formula(const DefNode& node);

}  // namespace pst
