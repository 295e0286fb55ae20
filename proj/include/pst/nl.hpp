#pragma once

#include <string>

#include "pst/lexicon.hpp"
#include "pst/pst_ast.hpp"
#include "pst/symbols.hpp"

namespace pst {

// English rendering of a definition as one `{\bf Definition:}` paragraph.
//
// A term is rendered in words when its symbol has no symb template or when
// any subterm is rendered in words; otherwise it stays symbolic. Symbolic
// constructs without a template (set-builders, tuples) become one math run.
// Bounded binders use the relation's prep clause when the bound is in words.
// Adjacent conjuncts of one relation rendered through reln are merged into a
// plural sentence.
//
// Throws MissingLexiconEntry (listing every symbol without an entry) or
// TemplateArityMismatch. The lexicon should already include defaults; see
// with_defaults().
std::string render_nl(const PstDefinition& def, const Lexicon& lexicon, const SymbolTable& symbols);

}  // namespace pst
