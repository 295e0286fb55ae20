#include "pst/pst_ast.hpp"

#include <algorithm>

namespace pst {

std::string PstDefinition::book() const {
  const auto dot = label.find('.');
  return dot == std::string::npos ? label : label.substr(0, dot);
}

namespace pt {

namespace {
PstTermPtr mk(PstTerm t) { return std::make_shared<const PstTerm>(std::move(t)); }
PstFormulaPtr mk(PstFormula f) { return std::make_shared<const PstFormula>(std::move(f)); }
}  // namespace

PstTermPtr var(std::string name) { return mk(PstTerm{PstTerm::Variable{std::move(name)}}); }
PstTermPtr fun(std::string symbol, std::vector<PstTermPtr> args) {
  return mk(PstTerm{PstTerm::FunApp{std::move(symbol), std::move(args)}});
}
PstTermPtr infix(std::string symbol, PstTermPtr l, PstTermPtr r) {
  return mk(PstTerm{PstTerm::InfixFunApp{std::move(symbol), std::move(l), std::move(r)}});
}
PstTermPtr setapp(PstTermPtr f, std::vector<PstTermPtr> args) {
  return mk(PstTerm{PstTerm::SetApp{std::move(f), std::move(args)}});
}
PstTermPtr tuple(std::vector<PstTermPtr> elements) { return mk(PstTerm{PstTerm::Tuple{std::move(elements)}}); }
PstTermPtr finite_set(std::vector<PstTermPtr> elements) {
  return mk(PstTerm{PstTerm::FiniteSet{std::move(elements)}});
}
PstTermPtr set_builder(PstTermPtr body, std::optional<Bound> bound, PstFormulaPtr cond,
                       std::vector<std::string> fixed) {
  return mk(PstTerm{PstTerm::SetBuilder{std::move(body), std::move(bound), std::move(cond), std::move(fixed)}});
}
PstTermPtr lambda(std::string var, std::optional<Bound> bound, PstTermPtr body) {
  return mk(PstTerm{PstTerm::Lambda{std::move(var), std::move(bound), std::move(body)}});
}
PstTermPtr iota(std::vector<std::string> pattern, bool tuple_pattern, std::optional<Bound> bound,
                PstFormulaPtr cond) {
  return mk(PstTerm{PstTerm::Iota{std::move(pattern), tuple_pattern, std::move(bound), std::move(cond)}});
}

PstFormulaPtr rel(std::string symbol, std::vector<PstTermPtr> args) {
  return mk(PstFormula{PstFormula::RelApp{std::move(symbol), std::move(args)}});
}
PstFormulaPtr chain(std::vector<PstTermPtr> terms, std::vector<std::string> relations) {
  if (terms.size() == 2) return infix_rel(relations.front(), terms[0], terms[1]);
  return mk(PstFormula{PstFormula::InfixRelChain{std::move(terms), std::move(relations)}});
}
PstFormulaPtr infix_rel(std::string relation, PstTermPtr l, PstTermPtr r) {
  if (relation == "=") return equal(std::move(l), std::move(r));
  if (relation == "\\simeq") return pequal(std::move(l), std::move(r));
  return mk(PstFormula{PstFormula::InfixRelChain{{std::move(l), std::move(r)}, {std::move(relation)}}});
}
PstFormulaPtr multi(std::vector<PstTermPtr> terms, std::string relation, PstTermPtr bound) {
  return mk(PstFormula{PstFormula::MultiMembership{std::move(terms), std::move(relation), std::move(bound)}});
}
PstFormulaPtr equal(PstTermPtr l, PstTermPtr r) {
  return mk(PstFormula{PstFormula::Equal{std::move(l), std::move(r)}});
}
PstFormulaPtr pequal(PstTermPtr l, PstTermPtr r) {
  return mk(PstFormula{PstFormula::PartialEqual{std::move(l), std::move(r)}});
}
PstFormulaPtr defined(PstTermPtr t) { return mk(PstFormula{PstFormula::Defined{std::move(t)}}); }
PstFormulaPtr undefined(PstTermPtr t) { return mk(PstFormula{PstFormula::Undefined{std::move(t)}}); }
PstFormulaPtr setrel(PstTermPtr relation, PstTermPtr l, PstTermPtr r) {
  return mk(PstFormula{PstFormula::SetRelApp{std::move(relation), std::move(l), std::move(r)}});
}
PstFormulaPtr neg(PstFormulaPtr f) { return mk(PstFormula{PstFormula::Not{std::move(f)}}); }
PstFormulaPtr binary(Connective op, PstFormulaPtr l, PstFormulaPtr r) {
  return mk(PstFormula{PstFormula::Binary{op, std::move(l), std::move(r)}});
}
PstFormulaPtr quant(Quantifier q, std::vector<std::string> vars, std::optional<Bound> bound, PstFormulaPtr body) {
  return mk(PstFormula{PstFormula::Quantified{q, std::move(vars), std::move(bound), std::move(body)}});
}

}  // namespace pt

// ---------------------------------------------------------------------------
// Structural equality

namespace {

template <class T>
bool eq_ptr(const std::shared_ptr<const T>& a, const std::shared_ptr<const T>& b) {
  if (!a || !b) return a == b;
  return structurally_equal(*a, *b);
}

template <class T>
bool eq_vec(const std::vector<std::shared_ptr<const T>>& a, const std::vector<std::shared_ptr<const T>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!eq_ptr(a[i], b[i])) return false;
  }
  return true;
}

bool eq_bound(const std::optional<Bound>& a, const std::optional<Bound>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return a->relation == b->relation && eq_ptr(a->term, b->term);
}

}  // namespace

bool structurally_equal(const PstTerm& a, const PstTerm& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, PstTerm::Variable>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, PstTerm::FunApp>) {
          return x.symbol == y.symbol && eq_vec(x.args, y.args);
        } else if constexpr (std::is_same_v<T, PstTerm::InfixFunApp>) {
          return x.symbol == y.symbol && eq_ptr(x.left, y.left) && eq_ptr(x.right, y.right);
        } else if constexpr (std::is_same_v<T, PstTerm::SetApp>) {
          return eq_ptr(x.fun, y.fun) && eq_vec(x.args, y.args);
        } else if constexpr (std::is_same_v<T, PstTerm::Tuple> || std::is_same_v<T, PstTerm::FiniteSet>) {
          return eq_vec(x.elements, y.elements);
        } else if constexpr (std::is_same_v<T, PstTerm::SetBuilder>) {
          return eq_ptr(x.body, y.body) && eq_bound(x.bound, y.bound) && eq_ptr(x.condition, y.condition) &&
                 x.fixed == y.fixed;
        } else if constexpr (std::is_same_v<T, PstTerm::Lambda>) {
          return x.var == y.var && eq_bound(x.bound, y.bound) && eq_ptr(x.body, y.body);
        } else {
          return x.pattern == y.pattern && x.tuple_pattern == y.tuple_pattern && eq_bound(x.bound, y.bound) &&
                 eq_ptr(x.condition, y.condition);
        }
      },
      a.node);
}

bool structurally_equal(const PstFormula& a, const PstFormula& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, PstFormula::RelApp>) {
          return x.symbol == y.symbol && eq_vec(x.args, y.args);
        } else if constexpr (std::is_same_v<T, PstFormula::InfixRelChain>) {
          return x.relations == y.relations && eq_vec(x.terms, y.terms);
        } else if constexpr (std::is_same_v<T, PstFormula::MultiMembership>) {
          return x.relation == y.relation && eq_vec(x.terms, y.terms) && eq_ptr(x.bound, y.bound);
        } else if constexpr (std::is_same_v<T, PstFormula::Equal> || std::is_same_v<T, PstFormula::PartialEqual>) {
          return eq_ptr(x.left, y.left) && eq_ptr(x.right, y.right);
        } else if constexpr (std::is_same_v<T, PstFormula::Defined> || std::is_same_v<T, PstFormula::Undefined>) {
          return eq_ptr(x.term, y.term);
        } else if constexpr (std::is_same_v<T, PstFormula::SetRelApp>) {
          return eq_ptr(x.relation, y.relation) && eq_ptr(x.left, y.left) && eq_ptr(x.right, y.right);
        } else if constexpr (std::is_same_v<T, PstFormula::Not>) {
          return eq_ptr(x.body, y.body);
        } else if constexpr (std::is_same_v<T, PstFormula::Binary>) {
          return x.op == y.op && eq_ptr(x.left, y.left) && eq_ptr(x.right, y.right);
        } else {
          return x.kind == y.kind && x.vars == y.vars && eq_bound(x.bound, y.bound) && eq_ptr(x.body, y.body);
        }
      },
      a.node);
}

bool structurally_equal(const PstDefinition& a, const PstDefinition& b) {
  if (a.label != b.label || a.kind != b.kind || a.infix != b.infix || a.arity != b.arity ||
      a.precedence != b.precedence || a.symbol != b.symbol || a.params != b.params ||
      a.clauses.size() != b.clauses.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.clauses.size(); ++i) {
    const auto& x = a.clauses[i];
    const auto& y = b.clauses[i];
    if (x.otherwise != y.otherwise || x.guard.has_value() != y.guard.has_value()) return false;
    if (x.guard && !eq_ptr(*x.guard, *y.guard)) return false;
    if (x.body.index() != y.body.index()) return false;
    if (auto* t = std::get_if<PstTermPtr>(&x.body); t && !eq_ptr(*t, std::get<PstTermPtr>(y.body))) return false;
    if (auto* f = std::get_if<PstFormulaPtr>(&x.body); f && !eq_ptr(*f, std::get<PstFormulaPtr>(y.body))) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Variables

namespace {

void ordered_free(const PstTerm& t, std::vector<std::string>& out, std::set<std::string>& bound);
void ordered_free(const PstFormula& f, std::vector<std::string>& out, std::set<std::string>& bound);

void note(const std::string& v, std::vector<std::string>& out, const std::set<std::string>& bound) {
  if (!bound.count(v) && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

template <class F>
void with_bound(std::set<std::string>& bound, const std::vector<std::string>& vars, F&& fn) {
  std::vector<std::string> added;
  for (const auto& v : vars) {
    if (bound.insert(v).second) added.push_back(v);
  }
  fn();
  for (const auto& v : added) bound.erase(v);
}

void ordered_free(const PstTerm& t, std::vector<std::string>& out, std::set<std::string>& bound) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PstTerm::Variable>) {
          note(x.name, out, bound);
        } else if constexpr (std::is_same_v<T, PstTerm::FunApp>) {
          for (const auto& a : x.args) ordered_free(*a, out, bound);
        } else if constexpr (std::is_same_v<T, PstTerm::InfixFunApp>) {
          ordered_free(*x.left, out, bound);
          ordered_free(*x.right, out, bound);
        } else if constexpr (std::is_same_v<T, PstTerm::SetApp>) {
          ordered_free(*x.fun, out, bound);
          for (const auto& a : x.args) ordered_free(*a, out, bound);
        } else if constexpr (std::is_same_v<T, PstTerm::Tuple> || std::is_same_v<T, PstTerm::FiniteSet>) {
          for (const auto& a : x.elements) ordered_free(*a, out, bound);
        } else if constexpr (std::is_same_v<T, PstTerm::SetBuilder>) {
          if (x.bound) ordered_free(*x.bound->term, out, bound);
          for (const auto& v : x.fixed) note(v, out, bound);
          with_bound(bound, set_builder_binders(x), [&] {
            ordered_free(*x.body, out, bound);
            ordered_free(*x.condition, out, bound);
          });
        } else if constexpr (std::is_same_v<T, PstTerm::Lambda>) {
          if (x.bound) ordered_free(*x.bound->term, out, bound);
          with_bound(bound, {x.var}, [&] { ordered_free(*x.body, out, bound); });
        } else {
          if (x.bound) ordered_free(*x.bound->term, out, bound);
          with_bound(bound, x.pattern, [&] { ordered_free(*x.condition, out, bound); });
        }
      },
      t.node);
}

void ordered_free(const PstFormula& f, std::vector<std::string>& out, std::set<std::string>& bound) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PstFormula::RelApp>) {
          for (const auto& a : x.args) ordered_free(*a, out, bound);
        } else if constexpr (std::is_same_v<T, PstFormula::InfixRelChain>) {
          for (const auto& a : x.terms) ordered_free(*a, out, bound);
        } else if constexpr (std::is_same_v<T, PstFormula::MultiMembership>) {
          for (const auto& a : x.terms) ordered_free(*a, out, bound);
          ordered_free(*x.bound, out, bound);
        } else if constexpr (std::is_same_v<T, PstFormula::Equal> || std::is_same_v<T, PstFormula::PartialEqual>) {
          ordered_free(*x.left, out, bound);
          ordered_free(*x.right, out, bound);
        } else if constexpr (std::is_same_v<T, PstFormula::Defined> || std::is_same_v<T, PstFormula::Undefined>) {
          ordered_free(*x.term, out, bound);
        } else if constexpr (std::is_same_v<T, PstFormula::SetRelApp>) {
          ordered_free(*x.left, out, bound);
          ordered_free(*x.relation, out, bound);
          ordered_free(*x.right, out, bound);
        } else if constexpr (std::is_same_v<T, PstFormula::Not>) {
          ordered_free(*x.body, out, bound);
        } else if constexpr (std::is_same_v<T, PstFormula::Binary>) {
          ordered_free(*x.left, out, bound);
          ordered_free(*x.right, out, bound);
        } else {
          if (x.bound) ordered_free(*x.bound->term, out, bound);
          with_bound(bound, x.vars, [&] { ordered_free(*x.body, out, bound); });
        }
      },
      f.node);
}

}  // namespace

std::vector<std::string> set_builder_binders(const PstTerm::SetBuilder& sb) {
  std::vector<std::string> body_vars;
  std::set<std::string> none;
  ordered_free(*sb.body, body_vars, none);
  std::vector<std::string> out;
  for (const auto& v : body_vars) {
    if (std::find(sb.fixed.begin(), sb.fixed.end(), v) == sb.fixed.end()) out.push_back(v);
  }
  return out;
}

std::set<std::string> free_vars(const PstTerm& t) {
  std::vector<std::string> out;
  std::set<std::string> bound;
  ordered_free(t, out, bound);
  return {out.begin(), out.end()};
}

std::set<std::string> free_vars(const PstFormula& f) {
  std::vector<std::string> out;
  std::set<std::string> bound;
  ordered_free(f, out, bound);
  return {out.begin(), out.end()};
}

namespace {
void names_bound(const std::optional<Bound>& b, std::set<std::string>& out) {
  if (b) collect_names(*b->term, out);
}
}  // namespace

void collect_names(const PstTerm& t, std::set<std::string>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PstTerm::Variable>) {
          out.insert(x.name);
        } else if constexpr (std::is_same_v<T, PstTerm::FunApp>) {
          for (const auto& a : x.args) collect_names(*a, out);
        } else if constexpr (std::is_same_v<T, PstTerm::InfixFunApp>) {
          collect_names(*x.left, out);
          collect_names(*x.right, out);
        } else if constexpr (std::is_same_v<T, PstTerm::SetApp>) {
          collect_names(*x.fun, out);
          for (const auto& a : x.args) collect_names(*a, out);
        } else if constexpr (std::is_same_v<T, PstTerm::Tuple> || std::is_same_v<T, PstTerm::FiniteSet>) {
          for (const auto& a : x.elements) collect_names(*a, out);
        } else if constexpr (std::is_same_v<T, PstTerm::SetBuilder>) {
          collect_names(*x.body, out);
          names_bound(x.bound, out);
          collect_names(*x.condition, out);
          out.insert(x.fixed.begin(), x.fixed.end());
        } else if constexpr (std::is_same_v<T, PstTerm::Lambda>) {
          out.insert(x.var);
          names_bound(x.bound, out);
          collect_names(*x.body, out);
        } else {
          out.insert(x.pattern.begin(), x.pattern.end());
          names_bound(x.bound, out);
          collect_names(*x.condition, out);
        }
      },
      t.node);
}

void collect_names(const PstFormula& f, std::set<std::string>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PstFormula::RelApp>) {
          for (const auto& a : x.args) collect_names(*a, out);
        } else if constexpr (std::is_same_v<T, PstFormula::InfixRelChain>) {
          for (const auto& a : x.terms) collect_names(*a, out);
        } else if constexpr (std::is_same_v<T, PstFormula::MultiMembership>) {
          for (const auto& a : x.terms) collect_names(*a, out);
          collect_names(*x.bound, out);
        } else if constexpr (std::is_same_v<T, PstFormula::Equal> || std::is_same_v<T, PstFormula::PartialEqual>) {
          collect_names(*x.left, out);
          collect_names(*x.right, out);
        } else if constexpr (std::is_same_v<T, PstFormula::Defined> || std::is_same_v<T, PstFormula::Undefined>) {
          collect_names(*x.term, out);
        } else if constexpr (std::is_same_v<T, PstFormula::SetRelApp>) {
          collect_names(*x.relation, out);
          collect_names(*x.left, out);
          collect_names(*x.right, out);
        } else if constexpr (std::is_same_v<T, PstFormula::Not>) {
          collect_names(*x.body, out);
        } else if constexpr (std::is_same_v<T, PstFormula::Binary>) {
          collect_names(*x.left, out);
          collect_names(*x.right, out);
        } else {
          out.insert(x.vars.begin(), x.vars.end());
          names_bound(x.bound, out);
          collect_names(*x.body, out);
        }
      },
      f.node);
}

void collect_names(const PstDefinition& d, std::set<std::string>& out) {
  out.insert(d.params.begin(), d.params.end());
  for (const auto& c : d.clauses) {
    if (c.guard) collect_names(**c.guard, out);
    if (auto* t = std::get_if<PstTermPtr>(&c.body)) collect_names(**t, out);
    if (auto* f = std::get_if<PstFormulaPtr>(&c.body)) collect_names(**f, out);
  }
}

namespace {
void symbols_bound(const std::optional<Bound>& b, std::set<std::string>& out) {
  if (!b) return;
  out.insert(b->relation);
  collect_symbols(*b->term, out);
}
}  // namespace

void collect_symbols(const PstTerm& t, std::set<std::string>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PstTerm::FunApp>) {
          out.insert(x.symbol);
          for (const auto& a : x.args) collect_symbols(*a, out);
        } else if constexpr (std::is_same_v<T, PstTerm::InfixFunApp>) {
          out.insert(x.symbol);
          collect_symbols(*x.left, out);
          collect_symbols(*x.right, out);
        } else if constexpr (std::is_same_v<T, PstTerm::SetApp>) {
          collect_symbols(*x.fun, out);
          for (const auto& a : x.args) collect_symbols(*a, out);
        } else if constexpr (std::is_same_v<T, PstTerm::Tuple> || std::is_same_v<T, PstTerm::FiniteSet>) {
          for (const auto& a : x.elements) collect_symbols(*a, out);
        } else if constexpr (std::is_same_v<T, PstTerm::SetBuilder>) {
          collect_symbols(*x.body, out);
          symbols_bound(x.bound, out);
          collect_symbols(*x.condition, out);
        } else if constexpr (std::is_same_v<T, PstTerm::Lambda>) {
          symbols_bound(x.bound, out);
          collect_symbols(*x.body, out);
        } else if constexpr (std::is_same_v<T, PstTerm::Iota>) {
          symbols_bound(x.bound, out);
          collect_symbols(*x.condition, out);
        }
      },
      t.node);
}

void collect_symbols(const PstFormula& f, std::set<std::string>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PstFormula::RelApp>) {
          out.insert(x.symbol);
          for (const auto& a : x.args) collect_symbols(*a, out);
        } else if constexpr (std::is_same_v<T, PstFormula::InfixRelChain>) {
          out.insert(x.relations.begin(), x.relations.end());
          for (const auto& a : x.terms) collect_symbols(*a, out);
        } else if constexpr (std::is_same_v<T, PstFormula::MultiMembership>) {
          out.insert(x.relation);
          for (const auto& a : x.terms) collect_symbols(*a, out);
          collect_symbols(*x.bound, out);
        } else if constexpr (std::is_same_v<T, PstFormula::Equal> || std::is_same_v<T, PstFormula::PartialEqual>) {
          collect_symbols(*x.left, out);
          collect_symbols(*x.right, out);
        } else if constexpr (std::is_same_v<T, PstFormula::Defined> || std::is_same_v<T, PstFormula::Undefined>) {
          collect_symbols(*x.term, out);
        } else if constexpr (std::is_same_v<T, PstFormula::SetRelApp>) {
          collect_symbols(*x.relation, out);
          collect_symbols(*x.left, out);
          collect_symbols(*x.right, out);
        } else if constexpr (std::is_same_v<T, PstFormula::Not>) {
          collect_symbols(*x.body, out);
        } else if constexpr (std::is_same_v<T, PstFormula::Binary>) {
          collect_symbols(*x.left, out);
          collect_symbols(*x.right, out);
        } else {
          symbols_bound(x.bound, out);
          collect_symbols(*x.body, out);
        }
      },
      f.node);
}

}  // namespace pst
