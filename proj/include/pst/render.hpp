#pragma once

#include <string>

#include "pst/dzfc.hpp"
#include "pst/pst_ast.hpp"
#include "pst/symbols.hpp"

namespace pst {

// Source is the plain input syntax; Latex is the typeset house style
// (`\mathop{\mathtt{..}}` symbols, `\lbrace`, `\seq{..}`). Both re-parse to
// the same AST. Infix precedences come from the symbol table.
enum class PstStyle { Source, Latex };

std::string render(const PstTerm& t, const SymbolTable& symbols, PstStyle style);
std::string render(const PstFormula& f, const SymbolTable& symbols, PstStyle style);
std::string render(const PstDefinition& d, const SymbolTable& symbols, PstStyle style);

inline std::string render_pst(const PstDefinition& d, const SymbolTable& symbols) {
  return render(d, symbols, PstStyle::Source);
}
inline std::string render_latex(const PstDefinition& d, const SymbolTable& symbols) {
  return render(d, symbols, PstStyle::Latex);
}

// DZFC in the typeset style: defined symbols always prefix, relations with
// square brackets, runs of like quantifiers merged into one binder list.
std::string render_latex(const dz::Term& t);
std::string render_latex(const dz::Formula& f);
std::string render_latex(const dz::DefiningAxiom& a);

}  // namespace pst
