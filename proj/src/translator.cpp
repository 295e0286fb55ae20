#include "pst/translator.hpp"

#include <algorithm>

namespace pst {

namespace {

using dz::FormulaPtr;
using dz::TermPtr;

class Translator {
 public:
  Translator(const SymbolTable& symbols, std::set<std::string> avoid)
      : symbols_(symbols), avoid_(std::move(avoid)) {}

  TermPtr term(const PstTerm& t) {
    return std::visit([&](const auto& x) { return term_node(x); }, t.node);
  }

  FormulaPtr formula(const PstFormula& f) {
    return std::visit([&](const auto& x) { return formula_node(x); }, f.node);
  }

  // Binds a fresh `<letter>_{k}` for the duration of `fn`.
  template <class F>
  auto with_fresh(char letter, F&& fn) {
    const std::string name = dz::fresh_name(letter, avoid_);
    avoid_.insert(name);
    auto out = fn(name);
    avoid_.erase(name);
    return out;
  }

 private:
  TermPtr term_node(const PstTerm::Variable& v) { return dz::var(v.name); }

  TermPtr term_node(const PstTerm::FunApp& f) {
    require(f.symbol, DefKind::Function);
    return dz::fun(f.symbol, terms(f.args));
  }

  TermPtr term_node(const PstTerm::InfixFunApp& f) {
    require(f.symbol, DefKind::Function);
    return dz::fun(f.symbol, {term(*f.left), term(*f.right)});
  }

  TermPtr term_node(const PstTerm::SetApp& a) {
    TermPtr arg = a.args.size() == 1 ? term(*a.args[0]) : pair_nest(terms(a.args));
    TermPtr f = term(*a.fun);
    return with_fresh('x', [&](const std::string& x) {
      return dz::iota(x, dz::member(pair(arg, dz::var(x)), f));
    });
  }

  TermPtr term_node(const PstTerm::Tuple& t) { return pair_nest(terms(t.elements)); }

  TermPtr term_node(const PstTerm::FiniteSet& s) {
    return with_fresh('z', [&](const std::string& z) {
      return with_fresh('y', [&](const std::string& y) {
        FormulaPtr cond;
        for (const auto& e : s.elements) {
          FormulaPtr eq = dz::equal(dz::var(y), term(*e));
          cond = cond ? dz::disj(cond, eq) : eq;
        }
        FormulaPtr mem = dz::member(dz::var(y), dz::var(z));
        return dz::iota(z, dz::forall(y, cond ? dz::iff(mem, cond) : dz::neg(mem)));
      });
    });
  }

  TermPtr term_node(const PstTerm::SetBuilder& sb) {
    const auto body_free = free_vars(*sb.body);
    const auto cond_free = free_vars(*sb.condition);
    for (const auto& v : sb.fixed) {
      if (!body_free.count(v) && !cond_free.count(v)) throw FixedVarNotFree(v);
    }
    const auto binders = set_builder_binders(sb);
    TermPtr bound_term = sb.bound ? term(*sb.bound->term) : nullptr;
    return with_fresh('z', [&](const std::string& z) {
      return with_fresh('y', [&](const std::string& y) {
        FormulaPtr cond = formula(*sb.condition);
        if (sb.bound) cond = dz::conj(bound_atom(sb.bound->relation, term(*sb.body), bound_term), cond);
        FormulaPtr inner = dz::conj(dz::equal(dz::var(y), term(*sb.body)), cond);
        inner = dz::exists(binders, inner);
        return dz::iota(z, dz::forall(y, dz::iff(dz::member(dz::var(y), dz::var(z)), inner)));
      });
    });
  }

  TermPtr term_node(const PstTerm::Lambda& l) {
    TermPtr bound_term = l.bound ? term(*l.bound->term) : nullptr;
    return with_fresh('z', [&](const std::string& z) {
      return with_fresh('y', [&](const std::string& y) {
        return with_fresh('x', [&](const std::string& x) {
          FormulaPtr inner = dz::conj(dz::equal(dz::var(y), pair(dz::var(l.var), dz::var(x))),
                                      dz::equal(dz::var(x), term(*l.body)));
          if (l.bound) inner = dz::conj(inner, bound_atom(l.bound->relation, dz::var(l.var), bound_term));
          inner = dz::exists(std::vector<std::string>{l.var, x}, inner);
          return dz::iota(z, dz::forall(y, dz::iff(dz::member(dz::var(y), dz::var(z)), inner)));
        });
      });
    });
  }

  TermPtr term_node(const PstTerm::Iota& io) {
    TermPtr bound_term = io.bound ? term(*io.bound->term) : nullptr;
    if (!io.tuple_pattern) {
      const std::string& v = io.pattern.front();
      FormulaPtr cond = formula(*io.condition);
      if (io.bound) cond = dz::conj(bound_atom(io.bound->relation, dz::var(v), bound_term), cond);
      return dz::iota(v, cond);
    }
    return with_fresh('x', [&](const std::string& x) {
      std::vector<TermPtr> vars;
      for (const auto& v : io.pattern) vars.push_back(dz::var(v));
      FormulaPtr inner = dz::equal(dz::var(x), pair_nest(vars));
      if (io.bound) inner = dz::conj(inner, bound_atom(io.bound->relation, dz::var(x), bound_term));
      inner = dz::conj(inner, formula(*io.condition));
      return dz::iota(x, dz::exists(io.pattern, inner));
    });
  }

  FormulaPtr formula_node(const PstFormula::RelApp& r) {
    require(r.symbol, DefKind::Relation);
    return dz::rel(r.symbol, terms(r.args));
  }

  FormulaPtr formula_node(const PstFormula::InfixRelChain& c) {
    FormulaPtr out;
    for (std::size_t i = 0; i < c.relations.size(); ++i) {
      FormulaPtr link = bound_atom(c.relations[i], term(*c.terms[i]), term(*c.terms[i + 1]));
      out = out ? dz::conj(out, link) : link;
    }
    return out;
  }

  FormulaPtr formula_node(const PstFormula::MultiMembership& m) {
    FormulaPtr out;
    for (const auto& t : m.terms) {
      FormulaPtr link = bound_atom(m.relation, term(*t), term(*m.bound));
      out = out ? dz::conj(out, link) : link;
    }
    return out;
  }

  FormulaPtr formula_node(const PstFormula::Equal& e) { return dz::equal(term(*e.left), term(*e.right)); }
  FormulaPtr formula_node(const PstFormula::PartialEqual& e) { return dz::pequal(term(*e.left), term(*e.right)); }
  FormulaPtr formula_node(const PstFormula::Defined& d) { return dz::defined(term(*d.term)); }
  FormulaPtr formula_node(const PstFormula::Undefined& d) { return dz::neg(dz::defined(term(*d.term))); }

  FormulaPtr formula_node(const PstFormula::SetRelApp& s) {
    return dz::member(pair(term(*s.left), term(*s.right)), term(*s.relation));
  }

  FormulaPtr formula_node(const PstFormula::Not& n) { return dz::neg(formula(*n.body)); }

  FormulaPtr formula_node(const PstFormula::Binary& b) {
    using K = dz::Formula::Kind;
    static const K kinds[] = {K::And, K::Or, K::Implies, K::Iff};
    return dz::binary(kinds[static_cast<int>(b.op)], formula(*b.left), formula(*b.right));
  }

  FormulaPtr formula_node(const PstFormula::Quantified& q) {
    FormulaPtr body = formula(*q.body);
    if (q.bound) {
      FormulaPtr bounds;
      for (const auto& v : q.vars) {
        FormulaPtr b = bound_atom(q.bound->relation, dz::var(v), term(*q.bound->term));
        bounds = bounds ? dz::conj(bounds, b) : b;
      }
      body = q.kind == Quantifier::Exists ? dz::conj(bounds, body) : dz::implies(bounds, body);
    }
    return q.kind == Quantifier::Exists ? dz::exists(q.vars, body) : dz::forall(q.vars, body);
  }

  FormulaPtr bound_atom(const std::string& relation, TermPtr l, TermPtr r) {
    if (relation == "\\in") return dz::member(std::move(l), std::move(r));
    if (relation == "=") return dz::equal(std::move(l), std::move(r));
    if (relation == "\\simeq") return dz::pequal(std::move(l), std::move(r));
    require(relation, DefKind::Relation);
    return dz::rel(relation, {std::move(l), std::move(r)});
  }

  std::vector<TermPtr> terms(const std::vector<PstTermPtr>& in) {
    std::vector<TermPtr> out;
    out.reserve(in.size());
    for (const auto& t : in) out.push_back(term(*t));
    return out;
  }

  static TermPtr pair(TermPtr a, TermPtr b) { return dz::fun(kPairSymbol, {std::move(a), std::move(b)}); }

  static TermPtr pair_nest(const std::vector<TermPtr>& items) {
    TermPtr out = items.back();
    for (std::size_t i = items.size() - 1; i-- > 0;) out = pair(items[i], out);
    return out;
  }

  void require(const std::string& symbol, DefKind kind) const {
    const SymbolInfo* info = symbols_.find(symbol);
    if (!info || info->kind != kind) throw UnregisteredSymbol(symbol);
  }

  const SymbolTable& symbols_;
  std::set<std::string> avoid_;
};

bool negation_of(const PstFormula& a, const PstFormula& b) {
  const auto* n = std::get_if<PstFormula::Not>(&a.node);
  return n && structurally_equal(*n->body, b);
}

}  // namespace

dz::TermPtr translate_term(const PstTerm& t, const SymbolTable& symbols) {
  std::set<std::string> names;
  collect_names(t, names);
  return Translator(symbols, std::move(names)).term(t);
}

dz::FormulaPtr translate_formula(const PstFormula& f, const SymbolTable& symbols) {
  std::set<std::string> names;
  collect_names(f, names);
  return Translator(symbols, std::move(names)).formula(f);
}

Translation translate_definition(const PstDefinition& def, const SymbolTable& symbols) {
  std::set<std::string> names;
  collect_names(def, names);
  Translator tr(symbols, names);
  Translation out;
  dz::DefiningAxiom& ax = out.axiom;
  ax.symbol = def.symbol;
  ax.params = def.params;
  ax.infix = def.infix;
  ax.kind = def.kind == DefKind::Function ? dz::AxiomKind::Function : dz::AxiomKind::Relation;

  std::vector<const PstFormula*> guards;
  for (const auto& c : def.clauses) {
    if (c.guard) guards.push_back(c.guard->get());
  }
  for (std::size_t i = 0; i < guards.size(); ++i) {
    for (std::size_t j = i + 1; j < guards.size(); ++j) {
      if (!negation_of(*guards[i], *guards[j]) && !negation_of(*guards[j], *guards[i])) {
        out.warnings.push_back(def.label + ": guards of clauses " + std::to_string(i + 1) + " and " +
                               std::to_string(j + 1) + " are not syntactically exclusive");
      }
    }
  }

  const bool single = def.clauses.size() == 1 && !def.clauses[0].guard;
  if (single && !std::holds_alternative<UndefinedBody>(def.clauses[0].body)) {
    if (ax.kind == dz::AxiomKind::Function) {
      ax.term = tr.term(*std::get<PstTermPtr>(def.clauses[0].body));
    } else {
      ax.formula = tr.formula(*std::get<PstFormulaPtr>(def.clauses[0].body));
    }
  } else {
    // Guard of each clause; an unguarded final clause applies when no earlier guard holds.
    auto clause_guard = [&](const Clause& c, const std::vector<dz::FormulaPtr>& earlier) -> dz::FormulaPtr {
      if (c.guard) return tr.formula(**c.guard);
      if (earlier.empty()) return nullptr;
      dz::FormulaPtr any;
      for (const auto& g : earlier) any = any ? dz::disj(any, g) : g;
      return dz::neg(any);
    };
    auto assemble = [&](auto&& value) {
      std::vector<dz::FormulaPtr> earlier;
      dz::FormulaPtr disjunction;
      for (const auto& c : def.clauses) {
        dz::FormulaPtr g = clause_guard(c, earlier);
        if (c.guard) earlier.push_back(g);
        if (std::holds_alternative<UndefinedBody>(c.body)) continue;
        dz::FormulaPtr v = value(c);
        dz::FormulaPtr d = g ? dz::conj(g, v) : v;
        disjunction = disjunction ? dz::disj(disjunction, d) : d;
      }
      return disjunction;
    };
    if (ax.kind == dz::AxiomKind::Function) {
      ax.term = tr.with_fresh('y', [&](const std::string& y) {
        dz::FormulaPtr body = assemble([&](const Clause& c) {
          return dz::pequal(dz::var(y), tr.term(*std::get<PstTermPtr>(c.body)));
        });
        if (!body) body = dz::neg(dz::equal(dz::var(y), dz::var(y)));
        return dz::iota(y, body);
      });
    } else {
      ax.formula = assemble([&](const Clause& c) { return tr.formula(*std::get<PstFormulaPtr>(c.body)); });
    }
  }

  const auto free = ax.term ? dz::free_vars(*ax.term) : dz::free_vars(*ax.formula);
  for (const auto& v : free) {
    if (std::find(ax.params.begin(), ax.params.end(), v) == ax.params.end()) {
      throw TranslationError(def.label + ": variable " + v + " is free in the definiens but is not a parameter",
                             def.label);
    }
  }
  return out;
}

}  // namespace pst
