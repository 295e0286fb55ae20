#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pst/dzfc.hpp"
#include "pst/errors.hpp"
#include "pst/pst_ast.hpp"
#include "pst/symbols.hpp"

namespace pst {

struct DefNode {
  std::string symbol;
  std::string label;
  std::string book;
  DefKind kind = DefKind::Function;
  bool infix = false;
  int arity = 0;
  std::optional<int> precedence;
  std::vector<std::string> roles;
  std::string source;                  // PST text; empty for built-ins
  std::optional<PstDefinition> pst;    // absent for built-ins
  dz::DefiningAxiom axiom;
  std::vector<std::string> deps;       // defined symbols used by the axiom body, sorted
  bool builtin = false;
};

// Roles whose definitions stay folded in partial expansion.
const std::set<std::string>& default_protected_roles();

// Registry of definitions in registration order. Starts with the built-in
// pairing function, defined as {{a},{a,b}}.
class DefStore {
 public:
  DefStore();

  // Adds a translated definition. Throws DuplicateSymbol or ForwardReference.
  const DefNode& add(const PstDefinition& def, const dz::DefiningAxiom& axiom, std::string source = {});
  // Translates and adds.
  const DefNode& add(const PstDefinition& def, std::string source = {});

  const DefNode* find(const std::string& symbol) const;
  const DefNode& at(const std::string& symbol) const;  // throws UnknownDefinition
  // Lookup by label or symbol.
  const DefNode* find_id(const std::string& id) const;

  const std::vector<std::string>& order() const { return order_; }
  const SymbolTable& symbols() const { return symbols_; }
  std::size_t size() const { return nodes_.size(); }

  // Symbols carrying any of the given roles.
  std::set<std::string> symbols_with_roles(const std::set<std::string>& roles) const;
  std::set<std::string> protected_symbols() const { return symbols_with_roles(default_protected_roles()); }

  nlohmann::json to_json() const;
  static DefStore from_json(const nlohmann::json& j);

 private:
  const DefNode& insert(DefNode node);

  std::map<std::string, DefNode> nodes_;
  std::vector<std::string> order_;
  SymbolTable symbols_;
};

inline constexpr int kStoreSchemaVersion = 1;

// Subgraph induced by the nodes reachable from a root (root included).
struct Dag {
  std::string root;
  std::vector<std::string> nodes;  // registration order
  std::map<std::string, std::vector<std::string>> edges;
};

Dag dag_of(const DefStore& store, const std::string& symbol);
std::size_t dag_size(const Dag& dag);
// Edges on the longest directed path.
int dag_depth(const Dag& dag);

}  // namespace pst
