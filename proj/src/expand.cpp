#include "pst/expand.hpp"

namespace pst {

namespace {

using dz::Formula;
using dz::FormulaPtr;
using dz::Term;
using dz::TermPtr;

class Expander {
 public:
  Expander(const DefStore& store, const ExpandOptions& opts, const Formula& input) : store_(store), opts_(opts) {
    dz::collect_names(input, avoid_);
    for (const auto& s : store.order()) {
      const auto& ax = store.at(s).axiom;
      if (ax.term) dz::collect_names(*ax.term, avoid_);
      if (ax.formula) dz::collect_names(*ax.formula, avoid_);
      avoid_.insert(ax.params.begin(), ax.params.end());
    }
  }

  FormulaPtr formula(const FormulaPtr& f) {
    FormulaPtr out;
    if (f->is_atom()) {
      out = atom(f);
    } else if (f->kind == Formula::Kind::Not) {
      out = dz::neg(formula(f->left));
    } else if (f->is_quantifier()) {
      out = dz::quant(f->kind, f->name, formula(f->left));
    } else {
      FormulaPtr l = formula(f->left);
      out = dz::binary(f->kind, l, formula(f->right));
    }
    return check(out);
  }

 private:
  bool unfolds(const std::string& symbol) const {
    if (opts_.mode == ExpandMode::None) return false;
    return opts_.mode == ExpandMode::Full || !opts_.protected_symbols.count(symbol);
  }

  dz::Substitution bind(const DefNode& node, const std::vector<TermPtr>& args) const {
    dz::Substitution s;
    for (std::size_t i = 0; i < node.axiom.params.size(); ++i) s[node.axiom.params[i]] = args[i];
    return s;
  }

  FormulaPtr atom(const FormulaPtr& f) {
    if (f->kind == Formula::Kind::RelApp && unfolds(f->name)) {
      const DefNode& node = store_.at(f->name);
      return formula(dz::substitute(node.axiom.formula, bind(node, f->args)));
    }
    std::vector<std::size_t> path;
    for (std::size_t i = 0; i < f->args.size(); ++i) {
      path = {i};
      if (find_occurrence(*f->args[i], path)) {
        const Term* occ = at_path(*f, path);
        const DefNode& node = store_.at(occ->name);
        const std::string v = fresh();
        FormulaPtr def = formula(dz::pequal(dz::var(v), dz::substitute(node.axiom.term, bind(node, occ->args))));
        FormulaPtr rest = formula(replace(f, path, dz::var(v)));
        return check(dz::exists(v, check(dz::conj(def, rest))));
      }
    }
    std::vector<TermPtr> args;
    for (const auto& a : f->args) args.push_back(iotas(a));
    return dz::atom(f->kind, f->name, std::move(args));
  }

  // Pre-order search below `t` for an unfoldable application; `path` holds
  // the child indices leading to `t` and is extended to the hit.
  bool find_occurrence(const Term& t, std::vector<std::size_t>& path) const {
    if (t.kind != Term::Kind::FunApp) return false;
    if (unfolds(t.name)) return true;
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      path.push_back(i);
      if (find_occurrence(*t.args[i], path)) return true;
      path.pop_back();
    }
    return false;
  }

  static const Term* at_path(const Formula& f, const std::vector<std::size_t>& path) {
    const Term* t = f.args[path[0]].get();
    for (std::size_t k = 1; k < path.size(); ++k) t = t->args[path[k]].get();
    return t;
  }

  static TermPtr replace_term(const TermPtr& t, const std::vector<std::size_t>& path, std::size_t k,
                              const TermPtr& with) {
    if (k == path.size()) return with;
    std::vector<TermPtr> args = t->args;
    args[path[k]] = replace_term(args[path[k]], path, k + 1, with);
    return dz::fun(t->name, std::move(args));
  }

  static FormulaPtr replace(const FormulaPtr& f, const std::vector<std::size_t>& path, const TermPtr& with) {
    std::vector<TermPtr> args = f->args;
    args[path[0]] = replace_term(args[path[0]], path, 1, with);
    return dz::atom(f->kind, f->name, std::move(args));
  }

  TermPtr iotas(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::Var: return t;
      case Term::Kind::Iota: return dz::iota(t->name, formula(t->body));
      case Term::Kind::FunApp: {
        std::vector<TermPtr> args;
        for (const auto& a : t->args) args.push_back(iotas(a));
        return dz::fun(t->name, std::move(args));
      }
    }
    return t;
  }

  std::string fresh() {
    for (;;) {
      std::string name = "\\nu_{" + std::to_string(counter_++) + "}";
      if (!avoid_.count(name)) return name;
    }
  }

  FormulaPtr check(FormulaPtr f) const {
    if (f->length > opts_.budget) throw BudgetExceeded(f->length);
    return f;
  }

  const DefStore& store_;
  const ExpandOptions& opts_;
  std::set<std::string> avoid_;
  std::size_t counter_ = 0;
};

}  // namespace

dz::FormulaPtr expand(const dz::FormulaPtr& f, const DefStore& store, const ExpandOptions& opts) {
  if (opts.mode == ExpandMode::None) return f;
  return Expander(store, opts, *f).formula(f);
}

dz::FormulaPtr definiens_formula(const DefNode& node) {
  const auto& ax = node.axiom;
  if (ax.kind == dz::AxiomKind::Relation) return ax.formula;
  std::set<std::string> names(ax.params.begin(), ax.params.end());
  dz::collect_names(*ax.term, names);
  return dz::pequal(dz::var(dz::fresh_name('y', names)), ax.term);
}

}  // namespace pst
