#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pst/pst_ast.hpp"

namespace pst {

struct SymbolInfo {
  std::string name;
  DefKind kind = DefKind::Function;
  bool infix = false;
  int arity = 0;
  std::optional<int> precedence;
  bool primitive = false;  // `\in` and `=`: part of the base logic, never defined
};

// Registered symbols with their kinds, arities and precedences. Built
// sequentially while a corpus is read; later definitions see earlier ones.
class SymbolTable {
 public:
  void add(SymbolInfo info);
  const SymbolInfo* find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  // Distinct precedences of registered infix functions, ascending.
  std::vector<int> precedence_levels() const;
  const std::map<std::string, SymbolInfo>& all() const { return symbols_; }

 private:
  std::map<std::string, SymbolInfo> symbols_;
};

// Name of the built-in Wiener-Kuratowski pairing function.
inline const std::string kPairSymbol = "\\varpi_{0}";

// `\in`, `=` and the pairing function.
SymbolTable base_symbols();

// SymbolInfo described by a definition header.
SymbolInfo symbol_info(const PstDefinition& def);

}  // namespace pst
