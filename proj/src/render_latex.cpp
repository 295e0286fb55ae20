#include <sstream>

#include "pst/render.hpp"

namespace pst {

namespace {

// Binding strength of formula constructs, loosest first; mirrors the grammar.
enum Level { kIffLevel, kImpLevel, kOrLevel, kAndLevel, kUnaryLevel };

std::string join(const std::vector<std::string>& parts, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

class PstPrinter {
 public:
  PstPrinter(const SymbolTable& symbols, PstStyle style) : symbols_(symbols), latex_(style == PstStyle::Latex) {}

  std::string sym(const std::string& s) const {
    if (!latex_ || s == "=") return s;
    return "\\mathop{\\mathtt{" + s + "}}";
  }
  std::string lbrace() const { return latex_ ? "\\lbrace " : "{"; }
  std::string rbrace() const { return latex_ ? " \\rbrace" : "}"; }
  std::string seq(const std::string& inner) const { return latex_ ? "\\seq{" + inner + "}" : "<" + inner + ">"; }
  std::string iff() const { return latex_ ? "\\leftrightarrow" : "\\iff"; }

  std::string bound(const Bound& b) const { return " " + sym(b.relation) + " " + term(*b.term); }

  std::string terms(const std::vector<PstTermPtr>& ts) const {
    std::vector<std::string> parts;
    for (const auto& t : ts) parts.push_back(term(*t));
    return join(parts);
  }

  int precedence(const std::string& symbol) const {
    const SymbolInfo* info = symbols_.find(symbol);
    return info && info->precedence ? *info->precedence : 0;
  }

  // min_prec: the loosest infix precedence allowed without parentheses.
  std::string term(const PstTerm& t, int min_prec = 0) const {
    return std::visit(
        [&](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PstTerm::Variable>) {
            return x.name;
          } else if constexpr (std::is_same_v<T, PstTerm::FunApp>) {
            if (x.args.empty()) return sym(x.symbol);
            return sym(x.symbol) + "(" + terms(x.args) + ")";
          } else if constexpr (std::is_same_v<T, PstTerm::InfixFunApp>) {
            const int p = precedence(x.symbol);
            std::string s = term(*x.left, p) + " " + sym(x.symbol) + " " + term(*x.right, p + 1);
            return p < min_prec ? "(" + s + ")" : s;
          } else if constexpr (std::is_same_v<T, PstTerm::SetApp>) {
            const bool simple = std::holds_alternative<PstTerm::Variable>(x.fun->node) ||
                                std::holds_alternative<PstTerm::SetApp>(x.fun->node) ||
                                (std::holds_alternative<PstTerm::FunApp>(x.fun->node) &&
                                 std::get<PstTerm::FunApp>(x.fun->node).args.empty());
            const std::string f = simple ? term(*x.fun) : "(" + term(*x.fun) + ")";
            return f + "(" + terms(x.args) + ")";
          } else if constexpr (std::is_same_v<T, PstTerm::Tuple>) {
            return seq(terms(x.elements));
          } else if constexpr (std::is_same_v<T, PstTerm::FiniteSet>) {
            if (x.elements.empty()) return latex_ ? "\\lbrace \\rbrace" : "{}";
            return lbrace() + terms(x.elements) + rbrace();
          } else if constexpr (std::is_same_v<T, PstTerm::SetBuilder>) {
            std::string s = lbrace() + term(*x.body);
            if (x.bound) s += bound(*x.bound);
            s += " : " + formula(*x.condition);
            if (!x.fixed.empty()) {
              s += latex_ ? ", \\mbox{ $" + join(x.fixed) + "$ fixed}" : ", " + join(x.fixed) + " fixed";
            }
            return s + rbrace();
          } else if constexpr (std::is_same_v<T, PstTerm::Lambda>) {
            std::string s = "(\\lambda " + x.var;
            if (x.bound) s += bound(*x.bound);
            return s + ")(" + term(*x.body) + ")";
          } else {
            std::string s = "(! ";
            s += x.tuple_pattern ? seq(join(x.pattern)) : x.pattern.front();
            if (x.bound) s += bound(*x.bound);
            return s + ")(" + formula(*x.condition) + ")";
          }
        },
        t.node);
  }

  static int level(const PstFormula& f) {
    if (const auto* b = std::get_if<PstFormula::Binary>(&f.node)) {
      switch (b->op) {
        case Connective::Iff: return kIffLevel;
        case Connective::Implies: return kImpLevel;
        case Connective::Or: return kOrLevel;
        case Connective::And: return kAndLevel;
      }
    }
    return kUnaryLevel;
  }

  std::string formula(const PstFormula& f, int min_level = kIffLevel) const {
    std::string s = std::visit(
        [&](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PstFormula::RelApp>) {
            if (x.args.empty()) return sym(x.symbol);
            return sym(x.symbol) + "[" + terms(x.args) + "]";
          } else if constexpr (std::is_same_v<T, PstFormula::InfixRelChain>) {
            std::string out = term(*x.terms[0]);
            for (std::size_t i = 0; i < x.relations.size(); ++i) {
              out += " " + sym(x.relations[i]) + " " + term(*x.terms[i + 1]);
            }
            return out;
          } else if constexpr (std::is_same_v<T, PstFormula::MultiMembership>) {
            return terms(x.terms) + " " + sym(x.relation) + " " + term(*x.bound);
          } else if constexpr (std::is_same_v<T, PstFormula::Equal>) {
            return term(*x.left) + " = " + term(*x.right);
          } else if constexpr (std::is_same_v<T, PstFormula::PartialEqual>) {
            return term(*x.left) + " \\simeq " + term(*x.right);
          } else if constexpr (std::is_same_v<T, PstFormula::Defined>) {
            return term(*x.term) + (latex_ ? "\\mathord{\\downarrow}" : " \\downarrow");
          } else if constexpr (std::is_same_v<T, PstFormula::Undefined>) {
            return term(*x.term) + (latex_ ? "\\mathord{\\uparrow}" : " \\uparrow");
          } else if constexpr (std::is_same_v<T, PstFormula::SetRelApp>) {
            const std::string r = term(*x.relation);
            return term(*x.left) + (latex_ ? " \\mbox{ $" + r + "$ } " : " " + r + " ") + term(*x.right);
          } else if constexpr (std::is_same_v<T, PstFormula::Not>) {
            return "\\neg " + formula(*x.body, kUnaryLevel);
          } else if constexpr (std::is_same_v<T, PstFormula::Binary>) {
            switch (x.op) {
              case Connective::Iff:
                return formula(*x.left, kImpLevel) + " " + iff() + " " + formula(*x.right, kImpLevel);
              case Connective::Implies:
                return formula(*x.left, kOrLevel) + " \\rightarrow " + formula(*x.right, kImpLevel);
              case Connective::Or:
                return formula(*x.left, kOrLevel) + " \\vee " + formula(*x.right, kAndLevel);
              case Connective::And:
                return formula(*x.left, kAndLevel) + " \\wedge " + formula(*x.right, kUnaryLevel);
            }
            return {};
          } else {
            std::string out = std::string("(") + (x.kind == Quantifier::Forall ? "\\forall " : "\\exists ") +
                              join(x.vars);
            if (x.bound) out += bound(*x.bound);
            out += ")";
            const bool nested = std::holds_alternative<PstFormula::Quantified>(x.body->node);
            return out + (nested ? formula(*x.body) : "(" + formula(*x.body) + ")");
          }
        },
        f.node);
    return level(f) < min_level ? "(" + s + ")" : s;
  }

  std::string head(const PstDefinition& d) const {
    if (d.infix) return d.params[0] + " " + sym(d.symbol) + " " + d.params[1];
    if (d.params.empty()) return sym(d.symbol);
    const bool rel = d.kind == DefKind::Relation;
    return sym(d.symbol) + (rel ? "[" : "(") + join(d.params) + (rel ? "]" : ")");
  }

  std::string math(const std::string& s) const { return latex_ ? "$" + s + "$" : s; }

  std::string definition(const PstDefinition& d) const {
    std::ostringstream out;
    out << "DEFINITION " << d.label << ": ";
    const char* kind = d.kind == DefKind::Function ? "function" : "relation";
    if (d.infix) {
      out << "Infix " << kind;
    } else {
      out << d.arity << "-ary " << kind;
    }
    out << " " << math(sym(d.symbol)) << ".";
    for (const auto& c : d.clauses) {
      out << " ";
      if (c.guard) {
        out << "If " << math(formula(**c.guard)) << " then ";
      } else if (c.otherwise) {
        out << "Otherwise ";
      }
      std::string body = head(d);
      if (const auto* t = std::get_if<PstTermPtr>(&c.body)) {
        body += " \\simeq " + term(**t);
      } else if (const auto* f = std::get_if<PstFormulaPtr>(&c.body)) {
        body += " " + iff() + " " + formula(**f);
      } else {
        body += latex_ ? "\\mathord{\\uparrow}" : " \\uparrow";
      }
      out << math(body) << ".";
    }
    if (d.precedence) out << " Precedence " << *d.precedence << ".";
    return out.str();
  }

 private:
  const SymbolTable& symbols_;
  bool latex_;
};

// ---------------------------------------------------------------------------
// DZFC

using K = dz::Formula::Kind;

std::string dz_sym(const std::string& s) { return "\\mathop{\\mathtt{" + s + "}}"; }

std::string dz_formula(const dz::Formula& f);

std::string dz_term(const dz::Term& t) {
  switch (t.kind) {
    case dz::Term::Kind::Var: return t.name;
    case dz::Term::Kind::FunApp: {
      if (t.args.empty()) return dz_sym(t.name);
      std::vector<std::string> parts;
      for (const auto& a : t.args) parts.push_back(dz_term(*a));
      return dz_sym(t.name) + "(" + join(parts) + ")";
    }
    case dz::Term::Kind::Iota: {
      const bool q = t.body->is_quantifier();
      return "(\\iota " + t.name + ")" + (q ? dz_formula(*t.body) : "(" + dz_formula(*t.body) + ")");
    }
  }
  return {};
}

// Atoms whose text starts with an iota are bracketed so the description is
// not read as applied to what follows.
std::string dz_atom(const dz::Formula& f) {
  auto infix = [&](const char* op) { return dz_term(*f.args[0]) + " " + op + " " + dz_term(*f.args[1]); };
  std::string s;
  switch (f.kind) {
    case K::Member: s = infix("\\in"); break;
    case K::Equal: s = infix("="); break;
    case K::PartialEqual: s = infix("\\simeq"); break;
    case K::Defined: s = dz_term(*f.args[0]) + "\\mathord{\\downarrow}"; break;
    default: {
      std::vector<std::string> parts;
      for (const auto& a : f.args) parts.push_back(dz_term(*a));
      return f.args.empty() ? dz_sym(f.name) : dz_sym(f.name) + "[" + join(parts) + "]";
    }
  }
  const bool lead_iota = !f.args.empty() && f.args[0]->kind == dz::Term::Kind::Iota;
  return lead_iota ? "(" + s + ")" : s;
}

const char* dz_connective(K k) {
  switch (k) {
    case K::And: return "\\wedge";
    case K::Or: return "\\vee";
    case K::Implies: return "\\rightarrow";
    default: return "\\leftrightarrow";
  }
}

std::string dz_formula(const dz::Formula& f) {
  if (f.is_atom()) return dz_atom(f);
  if (f.kind == K::Not) {
    const bool wrap = f.left->is_binary();
    return "\\neg " + (wrap ? "(" + dz_formula(*f.left) + ")" : dz_formula(*f.left));
  }
  if (f.is_quantifier()) {
    std::vector<std::string> vars{f.name};
    const dz::Formula* body = f.left.get();
    while (body->kind == f.kind) {
      vars.push_back(body->name);
      body = body->left.get();
    }
    const std::string prefix =
        std::string("(") + (f.kind == K::Forall ? "\\forall " : "\\exists ") + join(vars) + ")";
    return prefix + (body->is_quantifier() ? dz_formula(*body) : "(" + dz_formula(*body) + ")");
  }
  // Left-nested runs of one associative connective print flat.
  const bool assoc = f.kind == K::And || f.kind == K::Or;
  const bool left_flat = !f.left->is_binary() || (assoc && f.left->kind == f.kind);
  const std::string l = left_flat ? dz_formula(*f.left) : "(" + dz_formula(*f.left) + ")";
  const std::string r = f.right->is_binary() ? "(" + dz_formula(*f.right) + ")" : dz_formula(*f.right);
  return l + " " + dz_connective(f.kind) + " " + r;
}

}  // namespace

std::string render(const PstTerm& t, const SymbolTable& symbols, PstStyle style) {
  return PstPrinter(symbols, style).term(t);
}

std::string render(const PstFormula& f, const SymbolTable& symbols, PstStyle style) {
  return PstPrinter(symbols, style).formula(f);
}

std::string render(const PstDefinition& d, const SymbolTable& symbols, PstStyle style) {
  return PstPrinter(symbols, style).definition(d);
}

std::string render_latex(const dz::Term& t) { return dz_term(t); }
std::string render_latex(const dz::Formula& f) { return dz_formula(f); }

std::string render_latex(const dz::DefiningAxiom& a) {
  std::string head = dz_sym(a.symbol);
  if (!a.params.empty()) {
    head += a.kind == dz::AxiomKind::Function ? "(" + join(a.params) + ")" : "[" + join(a.params) + "]";
  }
  if (a.kind == dz::AxiomKind::Function) return head + " \\simeq " + dz_term(*a.term);
  return head + " \\leftrightarrow " + dz_formula(*a.formula);
}

}  // namespace pst
