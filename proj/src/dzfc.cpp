#include "pst/dzfc.hpp"

#include <algorithm>
#include <optional>

namespace pst::dz {

namespace {

using K = Formula::Kind;

std::int64_t sum_lengths(const std::vector<TermPtr>& args) {
  std::int64_t n = 0;
  for (const auto& a : args) n = sat_add(n, a->length);
  return n;
}

TermPtr make_term(Term::Kind kind, std::string name, std::vector<TermPtr> args, FormulaPtr body) {
  auto t = std::make_shared<Term>(Term{kind, std::move(name), std::move(args), std::move(body), 0});
  switch (kind) {
    case Term::Kind::Var: t->length = 1; break;
    case Term::Kind::FunApp: t->length = sat_add(1, sum_lengths(t->args)); break;
    case Term::Kind::Iota: t->length = sat_add(2, t->body->length); break;
  }
  return t;
}

FormulaPtr make_formula(K kind, std::string name, std::vector<TermPtr> args, FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>(Formula{kind, std::move(name), std::move(args), std::move(l), std::move(r), 0});
  if (f->is_atom()) {
    f->length = sat_add(1, sum_lengths(f->args));
  } else if (kind == K::Not) {
    f->length = sat_add(1, f->left->length);
  } else if (f->is_quantifier()) {
    f->length = sat_add(2, f->left->length);
  } else {
    f->length = sat_add(1, sat_add(f->left->length, f->right->length));
  }
  return f;
}

}  // namespace

TermPtr var(std::string name) { return make_term(Term::Kind::Var, std::move(name), {}, nullptr); }
TermPtr fun(std::string symbol, std::vector<TermPtr> args) {
  return make_term(Term::Kind::FunApp, std::move(symbol), std::move(args), nullptr);
}
TermPtr iota(std::string v, FormulaPtr body) { return make_term(Term::Kind::Iota, std::move(v), {}, std::move(body)); }

FormulaPtr atom(K kind, std::string symbol, std::vector<TermPtr> args) {
  return make_formula(kind, std::move(symbol), std::move(args), nullptr, nullptr);
}
FormulaPtr member(TermPtr l, TermPtr r) { return atom(K::Member, "", {std::move(l), std::move(r)}); }
FormulaPtr equal(TermPtr l, TermPtr r) { return atom(K::Equal, "", {std::move(l), std::move(r)}); }
FormulaPtr pequal(TermPtr l, TermPtr r) { return atom(K::PartialEqual, "", {std::move(l), std::move(r)}); }
FormulaPtr defined(TermPtr t) { return atom(K::Defined, "", {std::move(t)}); }
FormulaPtr rel(std::string symbol, std::vector<TermPtr> args) { return atom(K::RelApp, std::move(symbol), std::move(args)); }
FormulaPtr neg(FormulaPtr f) { return make_formula(K::Not, "", {}, std::move(f), nullptr); }
FormulaPtr binary(K kind, FormulaPtr l, FormulaPtr r) { return make_formula(kind, "", {}, std::move(l), std::move(r)); }
FormulaPtr conj(FormulaPtr l, FormulaPtr r) { return binary(K::And, std::move(l), std::move(r)); }
FormulaPtr disj(FormulaPtr l, FormulaPtr r) { return binary(K::Or, std::move(l), std::move(r)); }
FormulaPtr implies(FormulaPtr l, FormulaPtr r) { return binary(K::Implies, std::move(l), std::move(r)); }
FormulaPtr iff(FormulaPtr l, FormulaPtr r) { return binary(K::Iff, std::move(l), std::move(r)); }
FormulaPtr quant(K kind, std::string v, FormulaPtr body) { return make_formula(kind, std::move(v), {}, std::move(body), nullptr); }
FormulaPtr forall(std::string v, FormulaPtr body) { return quant(K::Forall, std::move(v), std::move(body)); }
FormulaPtr exists(std::string v, FormulaPtr body) { return quant(K::Exists, std::move(v), std::move(body)); }

FormulaPtr exists(const std::vector<std::string>& vars, FormulaPtr body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = exists(*it, std::move(body));
  return body;
}

FormulaPtr forall(const std::vector<std::string>& vars, FormulaPtr body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = forall(*it, std::move(body));
  return body;
}

FormulaPtr axiom_formula(const DefiningAxiom& ax) {
  std::vector<TermPtr> params;
  for (const auto& p : ax.params) params.push_back(var(p));
  if (ax.kind == AxiomKind::Function) return pequal(fun(ax.symbol, std::move(params)), ax.term);
  return iff(rel(ax.symbol, std::move(params)), ax.formula);
}

// ---------------------------------------------------------------------------
// Variables and symbols

namespace {

void fv(const Term& t, std::multiset<std::string>& bound, std::set<std::string>& out);

void fv(const Formula& f, std::multiset<std::string>& bound, std::set<std::string>& out) {
  if (f.is_atom()) {
    for (const auto& a : f.args) fv(*a, bound, out);
  } else if (f.is_quantifier()) {
    auto it = bound.insert(f.name);
    fv(*f.left, bound, out);
    bound.erase(it);
  } else {
    fv(*f.left, bound, out);
    if (f.right) fv(*f.right, bound, out);
  }
}

void fv(const Term& t, std::multiset<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind) {
    case Term::Kind::Var:
      if (!bound.count(t.name)) out.insert(t.name);
      break;
    case Term::Kind::FunApp:
      for (const auto& a : t.args) fv(*a, bound, out);
      break;
    case Term::Kind::Iota: {
      auto it = bound.insert(t.name);
      fv(*t.body, bound, out);
      bound.erase(it);
      break;
    }
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  fv(t, bound, out);
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  fv(f, bound, out);
  return out;
}

void collect_names(const Term& t, std::set<std::string>& out) {
  switch (t.kind) {
    case Term::Kind::Var: out.insert(t.name); break;
    case Term::Kind::FunApp:
      for (const auto& a : t.args) collect_names(*a, out);
      break;
    case Term::Kind::Iota:
      out.insert(t.name);
      collect_names(*t.body, out);
      break;
  }
}

void collect_names(const Formula& f, std::set<std::string>& out) {
  if (f.is_atom()) {
    for (const auto& a : f.args) collect_names(*a, out);
    return;
  }
  if (f.is_quantifier()) out.insert(f.name);
  collect_names(*f.left, out);
  if (f.right) collect_names(*f.right, out);
}

void collect_symbols(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::FunApp) out.insert(t.name);
  for (const auto& a : t.args) collect_symbols(*a, out);
  if (t.body) collect_symbols(*t.body, out);
}

void collect_symbols(const Formula& f, std::set<std::string>& out) {
  if (f.kind == K::RelApp) out.insert(f.name);
  for (const auto& a : f.args) collect_symbols(*a, out);
  if (f.left) collect_symbols(*f.left, out);
  if (f.right) collect_symbols(*f.right, out);
}

std::string fresh_name(char letter, const std::set<std::string>& avoid) {
  for (int k = 0;; ++k) {
    std::string name = std::string(1, letter) + "_{" + std::to_string(k) + "}";
    if (!avoid.count(name)) return name;
  }
}

std::vector<std::string> fresh_vars(std::size_t count, const std::set<std::string>& avoid) {
  static const char letters[] = {'x', 'y', 'z'};
  std::vector<std::string> out;
  for (int k = 0; out.size() < count; ++k) {
    for (char c : letters) {
      if (out.size() == count) break;
      std::string name = std::string(1, c) + "_{" + std::to_string(k) + "}";
      if (!avoid.count(name)) out.push_back(std::move(name));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Equality

namespace {

class AlphaEq {
 public:
  bool term(const Term& a, const Term& b) {
    if (a.kind != b.kind || a.length != b.length) return false;
    switch (a.kind) {
      case Term::Kind::Var: return same_var(a.name, b.name);
      case Term::Kind::FunApp: return a.name == b.name && args(a.args, b.args);
      case Term::Kind::Iota: return binder(a.name, b.name, *a.body, *b.body);
    }
    return false;
  }

  bool formula(const Formula& a, const Formula& b) {
    if (a.kind != b.kind || a.length != b.length) return false;
    if (a.is_atom()) return a.name == b.name && args(a.args, b.args);
    if (a.is_quantifier()) return binder(a.name, b.name, *a.left, *b.left);
    if (!formula(*a.left, *b.left)) return false;
    return !a.right || formula(*a.right, *b.right);
  }

  void push(const std::string& a, const std::string& b) {
    left_.push_back(a);
    right_.push_back(b);
  }

 private:
  bool args(const std::vector<TermPtr>& a, const std::vector<TermPtr>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!term(*a[i], *b[i])) return false;
    }
    return true;
  }

  bool binder(const std::string& va, const std::string& vb, const Formula& a, const Formula& b) {
    push(va, vb);
    const bool eq = formula(a, b);
    left_.pop_back();
    right_.pop_back();
    return eq;
  }

  static long index_of(const std::vector<std::string>& stack, const std::string& name) {
    for (long i = static_cast<long>(stack.size()) - 1; i >= 0; --i) {
      if (stack[static_cast<std::size_t>(i)] == name) return i;
    }
    return -1;
  }

  bool same_var(const std::string& a, const std::string& b) const {
    const long ia = index_of(left_, a), ib = index_of(right_, b);
    if (ia < 0 && ib < 0) return a == b;
    return ia == ib;
  }

  std::vector<std::string> left_, right_;
};

}  // namespace

bool alpha_equal(const Term& a, const Term& b) { return AlphaEq().term(a, b); }
bool alpha_equal(const Formula& a, const Formula& b) { return AlphaEq().formula(a, b); }

bool alpha_equal(const DefiningAxiom& a, const DefiningAxiom& b) {
  if (a.symbol != b.symbol || a.kind != b.kind || a.params.size() != b.params.size()) return false;
  AlphaEq eq;
  for (std::size_t i = 0; i < a.params.size(); ++i) eq.push(a.params[i], b.params[i]);
  if (a.kind == AxiomKind::Function) return eq.term(*a.term, *b.term);
  return eq.formula(*a.formula, *b.formula);
}

bool structurally_equal(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!structurally_equal(*a.args[i], *b.args[i])) return false;
  }
  return !a.body || structurally_equal(*a.body, *b.body);
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!structurally_equal(*a.args[i], *b.args[i])) return false;
  }
  if (a.left && !structurally_equal(*a.left, *b.left)) return false;
  return !a.right || structurally_equal(*a.right, *b.right);
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

class Substituter {
 public:
  explicit Substituter(const Substitution& s) : map_(s) {
    for (const auto& [name, t] : map_) {
      auto f = free_vars(*t);
      incoming_.insert(f.begin(), f.end());
    }
  }

  TermPtr term(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::Var: {
        auto it = map_.find(t->name);
        return it == map_.end() ? t : it->second;
      }
      case Term::Kind::FunApp: {
        auto args = terms(t->args);
        return args ? fun(t->name, std::move(*args)) : t;
      }
      case Term::Kind::Iota: {
        auto [name, body] = binder(t->name, t->body);
        return body == t->body && name == t->name ? t : iota(name, body);
      }
    }
    return t;
  }

  FormulaPtr formula(const FormulaPtr& f) {
    if (f->is_atom()) {
      auto args = terms(f->args);
      return args ? atom(f->kind, f->name, std::move(*args)) : f;
    }
    if (f->is_quantifier()) {
      auto [name, body] = binder(f->name, f->left);
      return body == f->left && name == f->name ? f : quant(f->kind, name, body);
    }
    auto l = formula(f->left);
    if (f->kind == K::Not) return l == f->left ? f : neg(l);
    auto r = formula(f->right);
    return l == f->left && r == f->right ? f : binary(f->kind, l, r);
  }

 private:
  std::optional<std::vector<TermPtr>> terms(const std::vector<TermPtr>& in) {
    std::vector<TermPtr> out;
    out.reserve(in.size());
    bool changed = false;
    for (const auto& a : in) {
      out.push_back(term(a));
      changed = changed || out.back() != a;
    }
    if (!changed) return std::nullopt;
    return out;
  }

  std::pair<std::string, FormulaPtr> binder(const std::string& v, const FormulaPtr& body) {
    auto shadowed = map_.find(v);
    std::optional<TermPtr> saved;
    if (shadowed != map_.end()) {
      saved = shadowed->second;
      map_.erase(shadowed);
    }
    std::string name = v;
    std::optional<TermPtr> renamed;
    if (!map_.empty() && incoming_.count(v)) {
      std::set<std::string> avoid = incoming_;
      collect_names(*body, avoid);
      for (const auto& [k, t] : map_) avoid.insert(k);
      name = fresh_name(v[0] == '\\' ? 'v' : v[0], avoid);
      renamed = map_[v] = var(name);
    }
    FormulaPtr out = map_.empty() ? body : formula(body);
    if (renamed) map_.erase(v);
    if (saved) map_[v] = *saved;
    return {name, out};
  }

  Substitution map_;
  std::set<std::string> incoming_;
};

}  // namespace

TermPtr substitute(const TermPtr& t, const Substitution& s) {
  if (s.empty()) return t;
  return Substituter(s).term(t);
}

FormulaPtr substitute(const FormulaPtr& f, const Substitution& s) {
  if (s.empty()) return f;
  return Substituter(s).formula(f);
}

// ---------------------------------------------------------------------------
// Text

namespace {

std::string join(const std::vector<TermPtr>& args) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ",";
    s += to_string(*args[i]);
  }
  return s;
}

}  // namespace

std::string to_string(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var: return t.name;
    case Term::Kind::FunApp: return t.args.empty() ? t.name : t.name + "(" + join(t.args) + ")";
    case Term::Kind::Iota: return "(iota " + t.name + ")(" + to_string(*t.body) + ")";
  }
  return {};
}

std::string to_string(const Formula& f) {
  auto bin = [&](const char* op) { return "(" + to_string(*f.left) + " " + op + " " + to_string(*f.right) + ")"; };
  switch (f.kind) {
    case K::Member: return to_string(*f.args[0]) + " in " + to_string(*f.args[1]);
    case K::Equal: return to_string(*f.args[0]) + " = " + to_string(*f.args[1]);
    case K::PartialEqual: return to_string(*f.args[0]) + " ~= " + to_string(*f.args[1]);
    case K::Defined: return to_string(*f.args[0]) + " defined";
    case K::RelApp: return f.args.empty() ? f.name : f.name + "[" + join(f.args) + "]";
    case K::Not: return "~" + to_string(*f.left);
    case K::And: return bin("&");
    case K::Or: return bin("|");
    case K::Implies: return bin("->");
    case K::Iff: return bin("<->");
    case K::Forall: return "(all " + f.name + ")" + to_string(*f.left);
    case K::Exists: return "(ex " + f.name + ")" + to_string(*f.left);
  }
  return {};
}

}  // namespace pst::dz
