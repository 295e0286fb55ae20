#include "pst/defstore.hpp"

#include <algorithm>
#include <functional>

#include "pst/dzfc_json.hpp"
#include "pst/parser.hpp"
#include "pst/translator.hpp"

namespace pst {

const std::set<std::string>& default_protected_roles() {
  static const std::set<std::string> roles = {"union",  "intersection", "difference", "pair",
                                              "powerset", "emptyset",   "subset",     "superset"};
  return roles;
}

DefStore::DefStore() : symbols_(base_symbols()) {
  DefNode pair;
  pair.symbol = kPairSymbol;
  pair.label = "builtin.pair";
  pair.book = "builtin";
  pair.kind = DefKind::Function;
  pair.arity = 2;
  pair.roles = {"pair"};
  pair.builtin = true;
  pair.axiom.symbol = kPairSymbol;
  pair.axiom.kind = dz::AxiomKind::Function;
  pair.axiom.params = {"a", "b"};
  pair.axiom.term = translate_term(*parse_term("{{a},{a,b}}", symbols_), symbols_);
  insert(std::move(pair));
}

const DefNode& DefStore::insert(DefNode node) {
  if (nodes_.count(node.symbol)) throw DuplicateSymbol(node.symbol);
  std::set<std::string> used;
  if (node.axiom.term) dz::collect_symbols(*node.axiom.term, used);
  if (node.axiom.formula) dz::collect_symbols(*node.axiom.formula, used);
  std::vector<std::string> missing;
  for (const auto& s : used) {
    if (!nodes_.count(s)) missing.push_back(s);
  }
  if (!missing.empty()) {
    ForwardReference err(missing);
    err.set_label(node.label);
    throw err;
  }
  node.deps.assign(used.begin(), used.end());
  if (!symbols_.contains(node.symbol)) {
    symbols_.add({node.symbol, node.kind, node.infix, node.arity, node.precedence, false});
  }
  order_.push_back(node.symbol);
  auto [it, ok] = nodes_.emplace(node.symbol, std::move(node));
  return it->second;
}

const DefNode& DefStore::add(const PstDefinition& def, const dz::DefiningAxiom& axiom, std::string source) {
  if (nodes_.count(def.symbol)) {
    DuplicateSymbol err(def.symbol);
    err.set_label(def.label);
    throw err;
  }
  DefNode node;
  node.symbol = def.symbol;
  node.label = def.label;
  node.book = def.book();
  node.kind = def.kind;
  node.infix = def.infix;
  node.arity = def.arity;
  node.precedence = def.precedence;
  node.roles = def.roles;
  node.source = std::move(source);
  node.pst = def;
  node.axiom = axiom;
  return insert(std::move(node));
}

const DefNode& DefStore::add(const PstDefinition& def, std::string source) {
  return add(def, translate_definition(def, symbols_).axiom, std::move(source));
}

const DefNode* DefStore::find(const std::string& symbol) const {
  auto it = nodes_.find(symbol);
  return it == nodes_.end() ? nullptr : &it->second;
}

const DefNode& DefStore::at(const std::string& symbol) const {
  if (const DefNode* n = find(symbol)) return *n;
  throw UnknownDefinition(symbol);
}

const DefNode* DefStore::find_id(const std::string& id) const {
  if (const DefNode* n = find(id)) return n;
  for (const auto& [sym, node] : nodes_) {
    if (node.label == id) return &node;
  }
  return nullptr;
}

std::set<std::string> DefStore::symbols_with_roles(const std::set<std::string>& roles) const {
  std::set<std::string> out;
  for (const auto& [sym, node] : nodes_) {
    for (const auto& r : node.roles) {
      if (roles.count(r)) out.insert(sym);
    }
  }
  return out;
}

nlohmann::json DefStore::to_json() const {
  nlohmann::json defs = nlohmann::json::array();
  for (const auto& sym : order_) {
    const DefNode& n = nodes_.at(sym);
    if (n.builtin) continue;
    nlohmann::json j = {{"symbol", n.symbol},
                        {"label", n.label},
                        {"book", n.book},
                        {"kind", n.kind == DefKind::Function ? "function" : "relation"},
                        {"infix", n.infix},
                        {"arity", n.arity},
                        {"roles", n.roles},
                        {"source", n.source},
                        {"deps", n.deps},
                        {"axiom", dz::to_json(n.axiom)}};
    j["precedence"] = n.precedence ? nlohmann::json(*n.precedence) : nlohmann::json(nullptr);
    defs.push_back(std::move(j));
  }
  return {{"schema_version", kStoreSchemaVersion}, {"definitions", std::move(defs)}};
}

DefStore DefStore::from_json(const nlohmann::json& j) {
  if (j.value("schema_version", 0) != kStoreSchemaVersion) {
    throw DefStoreError("unsupported store schema version");
  }
  DefStore store;
  for (const auto& d : j.at("definitions")) {
    DefNode node;
    node.symbol = d.at("symbol");
    node.label = d.at("label");
    node.book = d.at("book");
    node.kind = d.at("kind") == "function" ? DefKind::Function : DefKind::Relation;
    node.infix = d.at("infix");
    node.arity = d.at("arity");
    if (!d.at("precedence").is_null()) node.precedence = d.at("precedence").get<int>();
    node.roles = d.at("roles").get<std::vector<std::string>>();
    node.source = d.at("source");
    node.axiom = dz::axiom_from_json(d.at("axiom"));
    if (!node.source.empty()) {
      auto parsed = parse_corpus(node.source, store.symbols_);
      if (parsed.definitions.size() == 1) {
        node.pst = std::move(parsed.definitions.front());
        node.pst->roles = node.roles;
      }
    }
    store.insert(std::move(node));
  }
  return store;
}

Dag dag_of(const DefStore& store, const std::string& symbol) {
  store.at(symbol);
  Dag dag;
  dag.root = symbol;
  std::set<std::string> seen{symbol};
  std::vector<std::string> stack{symbol};
  while (!stack.empty()) {
    const std::string s = stack.back();
    stack.pop_back();
    const DefNode& n = store.at(s);
    dag.edges[s] = n.deps;
    for (const auto& d : n.deps) {
      if (seen.insert(d).second) stack.push_back(d);
    }
  }
  for (const auto& s : store.order()) {
    if (seen.count(s)) dag.nodes.push_back(s);
  }
  return dag;
}

std::size_t dag_size(const Dag& dag) { return dag.nodes.size(); }

int dag_depth(const Dag& dag) {
  std::map<std::string, int> height;
  std::function<int(const std::string&)> visit = [&](const std::string& s) {
    if (auto it = height.find(s); it != height.end()) return it->second;
    int h = 0;
    if (auto it = dag.edges.find(s); it != dag.edges.end()) {
      for (const auto& d : it->second) h = std::max(h, visit(d) + 1);
    }
    return height[s] = h;
  };
  int best = 0;
  for (const auto& s : dag.nodes) best = std::max(best, visit(s));
  return best;
}

}  // namespace pst
