#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pst/lexer.hpp"
#include "pst/pst_ast.hpp"
#include "pst/symbols.hpp"

namespace pst {

// Parses one DEFINITION block. Infix function applications nest by declared
// precedence (higher binds tighter) and associate left on ties.
PstDefinition parse_definition(const std::vector<Token>& tokens, const SymbolTable& symbols);

// Standalone expressions, for tests and tooling.
PstTermPtr parse_term(std::string_view source, const SymbolTable& symbols);
PstFormulaPtr parse_formula(std::string_view source, const SymbolTable& symbols);

struct CorpusError {
  std::string label;
  SourcePos pos;
  std::string message;
};

struct CorpusParse {
  std::vector<PstDefinition> definitions;
  std::vector<std::string> sources;  // source text of each parsed definition
  std::vector<CorpusError> errors;
  SymbolTable symbols;  // input table extended with every parsed definition
};

// Parses a sequence of DEFINITION blocks. Each parsed definition's symbol is
// registered before the next block is read. Errors are collected per block.
// `% protected-role: <role>` comment lines attach to the following block.
CorpusParse parse_corpus(std::string_view source, SymbolTable symbols = base_symbols());

// Statistics from the last Earley run on this thread (for scaling tests).
std::size_t last_earley_item_count();

}  // namespace pst
