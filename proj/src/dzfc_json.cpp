#include "pst/dzfc_json.hpp"

#include <stdexcept>

namespace pst::dz {

using nlohmann::json;
using K = Formula::Kind;

namespace {

const char* kind_name(K k) {
  switch (k) {
    case K::Member: return "in";
    case K::Equal: return "eq";
    case K::PartialEqual: return "peq";
    case K::Defined: return "defined";
    case K::RelApp: return "rel";
    case K::Not: return "not";
    case K::And: return "and";
    case K::Or: return "or";
    case K::Implies: return "implies";
    case K::Iff: return "iff";
    case K::Forall: return "forall";
    case K::Exists: return "exists";
  }
  return "";
}

K kind_from(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(K::Exists); ++i) {
    if (s == kind_name(static_cast<K>(i))) return static_cast<K>(i);
  }
  throw std::invalid_argument("unknown formula kind '" + s + "'");
}

json args_json(const std::vector<TermPtr>& args) {
  json a = json::array();
  for (const auto& t : args) a.push_back(to_json(*t));
  return a;
}

std::vector<TermPtr> args_from(const json& j) {
  std::vector<TermPtr> out;
  for (const auto& a : j) out.push_back(term_from_json(a));
  return out;
}

}  // namespace

json to_json(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var: return {{"kind", "var"}, {"name", t.name}};
    case Term::Kind::FunApp: return {{"kind", "fun"}, {"symbol", t.name}, {"args", args_json(t.args)}};
    case Term::Kind::Iota: return {{"kind", "iota"}, {"var", t.name}, {"body", to_json(*t.body)}};
  }
  return {};
}

json to_json(const Formula& f) {
  json j = {{"kind", kind_name(f.kind)}};
  switch (f.kind) {
    case K::Member:
    case K::Equal:
    case K::PartialEqual:
      j["left"] = to_json(*f.args[0]);
      j["right"] = to_json(*f.args[1]);
      break;
    case K::Defined: j["term"] = to_json(*f.args[0]); break;
    case K::RelApp:
      j["symbol"] = f.name;
      j["args"] = args_json(f.args);
      break;
    case K::Not: j["body"] = to_json(*f.left); break;
    case K::Forall:
    case K::Exists:
      j["var"] = f.name;
      j["body"] = to_json(*f.left);
      break;
    default:
      j["left"] = to_json(*f.left);
      j["right"] = to_json(*f.right);
      break;
  }
  return j;
}

json to_json(const DefiningAxiom& ax) {
  json j = {{"symbol", ax.symbol},
            {"kind", ax.kind == AxiomKind::Function ? "function" : "relation"},
            {"params", ax.params},
            {"infix", ax.infix}};
  j["rhs"] = ax.kind == AxiomKind::Function ? to_json(*ax.term) : to_json(*ax.formula);
  return j;
}

TermPtr term_from_json(const json& j) {
  const std::string kind = j.at("kind");
  if (kind == "var") return var(j.at("name"));
  if (kind == "fun") return fun(j.at("symbol"), args_from(j.at("args")));
  if (kind == "iota") return iota(j.at("var"), formula_from_json(j.at("body")));
  throw std::invalid_argument("unknown term kind '" + kind + "'");
}

FormulaPtr formula_from_json(const json& j) {
  const K k = kind_from(j.at("kind"));
  switch (k) {
    case K::Member:
    case K::Equal:
    case K::PartialEqual:
      return atom(k, "", {term_from_json(j.at("left")), term_from_json(j.at("right"))});
    case K::Defined: return defined(term_from_json(j.at("term")));
    case K::RelApp: return rel(j.at("symbol"), args_from(j.at("args")));
    case K::Not: return neg(formula_from_json(j.at("body")));
    case K::Forall:
    case K::Exists: return quant(k, j.at("var"), formula_from_json(j.at("body")));
    default: return binary(k, formula_from_json(j.at("left")), formula_from_json(j.at("right")));
  }
}

DefiningAxiom axiom_from_json(const json& j) {
  DefiningAxiom ax;
  ax.symbol = j.at("symbol");
  ax.kind = j.at("kind") == "function" ? AxiomKind::Function : AxiomKind::Relation;
  ax.params = j.at("params").get<std::vector<std::string>>();
  ax.infix = j.value("infix", false);
  if (ax.kind == AxiomKind::Function) {
    ax.term = term_from_json(j.at("rhs"));
  } else {
    ax.formula = formula_from_json(j.at("rhs"));
  }
  return ax;
}

}  // namespace pst::dz
