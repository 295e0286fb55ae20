#include "pst/symbols.hpp"

#include <set>

namespace pst {

void SymbolTable::add(SymbolInfo info) {
  auto name = info.name;
  symbols_[name] = std::move(info);
}

const SymbolInfo* SymbolTable::find(const std::string& name) const {
  auto it = symbols_.find(name);
  return it == symbols_.end() ? nullptr : &it->second;
}

std::vector<int> SymbolTable::precedence_levels() const {
  std::set<int> levels;
  for (const auto& [name, info] : symbols_) {
    if (info.infix && info.kind == DefKind::Function && info.precedence) levels.insert(*info.precedence);
  }
  return {levels.begin(), levels.end()};
}

SymbolTable base_symbols() {
  SymbolTable t;
  t.add({"\\in", DefKind::Relation, true, 2, std::nullopt, true});
  t.add({"=", DefKind::Relation, true, 2, std::nullopt, true});
  t.add({kPairSymbol, DefKind::Function, false, 2, std::nullopt, false});
  return t;
}

SymbolInfo symbol_info(const PstDefinition& def) {
  return {def.symbol, def.kind, def.infix, def.arity, def.precedence, false};
}

}  // namespace pst
