#pragma once

#include <string>
#include <vector>

#include "pst/dzfc.hpp"
#include "pst/errors.hpp"
#include "pst/pst_ast.hpp"
#include "pst/symbols.hpp"

namespace pst {

// Desugars PST into DZFC. Every defined symbol must be registered in
// `symbols`. Fresh variables avoid every name in the input and every fresh
// name bound by an enclosing construct.
dz::TermPtr translate_term(const PstTerm& t, const SymbolTable& symbols);
dz::FormulaPtr translate_formula(const PstFormula& f, const SymbolTable& symbols);

struct Translation {
  dz::DefiningAxiom axiom;
  std::vector<std::string> warnings;  // guard overlap notices
};

Translation translate_definition(const PstDefinition& def, const SymbolTable& symbols);

}  // namespace pst
