#include "pst/nl.hpp"

#include <cctype>
#include <functional>
#include <optional>

namespace pst {

namespace {

enum Level { kIffLevel, kImpLevel, kOrLevel, kAndLevel, kUnaryLevel };

// An argument of a template, rendered on demand in running text or in math.
struct Arg {
  std::function<std::string()> text;
  std::function<std::string()> math;
};

Arg raw(std::string text, std::string math) {
  return {[text] { return text; }, [math] { return math; }};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// "A", "A and B", "A, B and C".
std::string series(const std::vector<std::string>& items) {
  if (items.size() <= 1) return items.empty() ? "" : items[0];
  std::vector<std::string> head(items.begin(), items.end() - 1);
  return join(head, ", ") + " and " + items.back();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string plural_noun(const std::string& w) {
  if (ends_with(w, "is")) return w.substr(0, w.size() - 2) + "es";
  if (ends_with(w, "s") || ends_with(w, "x") || ends_with(w, "ch") || ends_with(w, "sh")) return w + "es";
  if (w.size() > 1 && w.back() == 'y' && std::string("aeiou").find(w[w.size() - 2]) == std::string::npos) {
    return w.substr(0, w.size() - 1) + "ies";
  }
  return w + "s";
}

// "a topological space" -> "topological spaces"; the head noun is the last
// word before the first preposition.
std::string plural_phrase(std::string p) {
  for (const char* art : {"a ", "an "}) {
    if (p.rfind(art, 0) == 0) {
      p = p.substr(std::string(art).size());
      break;
    }
  }
  std::size_t end = p.size();
  for (const char* prep : {" for ", " of ", " on ", " in ", " with ", " over ", " from ", " to ", " generated "}) {
    end = std::min(end, p.find(prep));
  }
  const std::size_t start = p.rfind(' ', end == 0 ? 0 : end - 1);
  const std::size_t w0 = start == std::string::npos || start >= end ? 0 : start + 1;
  return p.substr(0, w0) + plural_noun(p.substr(w0, end - w0)) + p.substr(end);
}

class NlRenderer {
 public:
  NlRenderer(const Lexicon& lex, const SymbolTable& symbols) : lex_(lex), symbols_(symbols) {}

  const LexEntry& entry(const std::string& symbol) const {
    const LexEntry* e = lex_.find(symbol);
    if (!e) throw MissingLexiconEntry({symbol});
    return *e;
  }

  std::string apply(const LexEntry& e, const std::string& tmpl, const std::vector<Arg>& args, bool math) const {
    if (static_cast<int>(args.size()) != e.arity) {
      throw TemplateArityMismatch("lexicon entry '" + e.name + "' has arity " + std::to_string(e.arity) +
                                  " but is applied to " + std::to_string(args.size()) + " arguments");
    }
    std::string out;
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
      const char c = tmpl[i];
      if (c == '$' && math) continue;
      if (c != '#') {
        out += c;
        continue;
      }
      std::size_t j = i + 1;
      const bool forced = j < tmpl.size() && tmpl[j] == '^';
      if (forced) ++j;
      std::size_t k = j;
      while (k < tmpl.size() && std::isdigit(static_cast<unsigned char>(tmpl[k]))) ++k;
      if (k == j) {
        out += c;
        continue;
      }
      const int index = std::stoi(tmpl.substr(j, k - j));
      if (index >= static_cast<int>(args.size())) {
        throw TemplateArityMismatch("template for '" + e.name + "' uses #" + std::to_string(index) +
                                    " but the symbol has arity " + std::to_string(args.size()));
      }
      out += forced || math ? args[index].math() : args[index].text();
      i = k - 1;
    }
    return out;
  }

  int precedence(const std::string& symbol) const {
    const SymbolInfo* info = symbols_.find(symbol);
    return info && info->precedence ? *info->precedence : 0;
  }

  Arg term_arg(const PstTermPtr& t, int min_prec = 0) const {
    return {[this, t] { return text(*t); }, [this, t, min_prec] { return math(*t, min_prec); }};
  }

  std::vector<Arg> term_args(const std::vector<PstTermPtr>& ts) const {
    std::vector<Arg> out;
    for (const auto& t : ts) out.push_back(term_arg(t));
    return out;
  }

  // -------------------------------------------------------------------------
  // Which constructs need words.

  bool wordy(const PstTerm& t) const {
    return std::visit(
        [&](const auto& x) -> bool {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PstTerm::Variable>) {
            return false;
          } else if constexpr (std::is_same_v<T, PstTerm::FunApp>) {
            return !entry(x.symbol).get("symb") || any(x.args);
          } else if constexpr (std::is_same_v<T, PstTerm::InfixFunApp>) {
            return !entry(x.symbol).get("symb") || wordy(*x.left) || wordy(*x.right);
          } else if constexpr (std::is_same_v<T, PstTerm::SetApp>) {
            return wordy(*x.fun) || any(x.args);
          } else if constexpr (std::is_same_v<T, PstTerm::Tuple> || std::is_same_v<T, PstTerm::FiniteSet>) {
            return any(x.elements);
          } else if constexpr (std::is_same_v<T, PstTerm::SetBuilder>) {
            return wordy(*x.body) || (x.bound && wordy_bound(*x.bound)) || wordy(*x.condition);
          } else if constexpr (std::is_same_v<T, PstTerm::Lambda>) {
            return (x.bound && wordy_bound(*x.bound)) || wordy(*x.body);
          } else {
            return true;
          }
        },
        t.node);
  }

  bool wordy_bound(const Bound& b) const { return !entry(b.relation).get("symb") || wordy(*b.term); }

  bool any(const std::vector<PstTermPtr>& ts) const {
    for (const auto& t : ts) {
      if (wordy(*t)) return true;
    }
    return false;
  }

  bool wordy(const PstFormula& f) const {
    return std::visit(
        [&](const auto& x) -> bool {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PstFormula::RelApp>) {
            return !entry(x.symbol).get("symb") || any(x.args);
          } else if constexpr (std::is_same_v<T, PstFormula::InfixRelChain>) {
            for (const auto& r : x.relations) {
              if (!entry(r).get("symb")) return true;
            }
            return any(x.terms);
          } else if constexpr (std::is_same_v<T, PstFormula::MultiMembership>) {
            return !entry(x.relation).get("symb") || any(x.terms) || wordy(*x.bound);
          } else if constexpr (std::is_same_v<T, PstFormula::Equal> || std::is_same_v<T, PstFormula::PartialEqual>) {
            return wordy(*x.left) || wordy(*x.right);
          } else if constexpr (std::is_same_v<T, PstFormula::Defined> || std::is_same_v<T, PstFormula::Undefined>) {
            return wordy(*x.term);
          } else if constexpr (std::is_same_v<T, PstFormula::SetRelApp>) {
            return wordy(*x.relation) || wordy(*x.left) || wordy(*x.right);
          } else if constexpr (std::is_same_v<T, PstFormula::Not>) {
            return wordy(*x.body);
          } else if constexpr (std::is_same_v<T, PstFormula::Binary>) {
            return wordy(*x.left) || wordy(*x.right);
          } else {
            return true;
          }
        },
        f.node);
  }

  // -------------------------------------------------------------------------
  // Terms

  // `vars R bound` for a binder, in words or math.
  std::string binder(const Arg& vars, const std::optional<Bound>& bound, bool in_math) const {
    if (!bound) return in_math ? vars.math() : vars.text();
    const LexEntry& e = entry(bound->relation);
    const std::vector<Arg> args{vars, term_arg(bound->term)};
    if (in_math) {
      if (auto s = e.get("symb")) return apply(e, *s, args, true);
      return "\\mbox{" + binder(vars, bound, false) + "}";
    }
    const bool words = wordy(*bound->term);
    if (words) {
      if (auto p = e.get("prep")) return apply(e, *p, args, false);
    }
    for (const char* key : {"symb", "prep", "reln"}) {
      if (auto s = e.get(key)) return apply(e, *s, args, false);
    }
    throw MissingLexiconEntry({bound->relation});
  }

  static Arg var_list(const std::vector<std::string>& vars) {
    std::vector<std::string> text;
    for (const auto& v : vars) text.push_back("$" + v + "$");
    return raw(join(text, ", "), join(vars, ","));
  }

  std::string application(const std::string& symbol, const std::vector<Arg>& args, bool words) const {
    const LexEntry& e = entry(symbol);
    if (words) {
      if (auto w = e.get("word")) return apply(e, *w, args, false);
    }
    if (auto s = e.get("symb")) return apply(e, *s, args, false);
    if (auto w = e.get("word")) return apply(e, *w, args, false);
    throw MissingLexiconEntry({symbol});
  }

  std::string text(const PstTerm& t) const {
    return std::visit(
        [&](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PstTerm::Variable>) {
            return "$" + x.name + "$";
          } else if constexpr (std::is_same_v<T, PstTerm::FunApp>) {
            return application(x.symbol, term_args(x.args), wordy(t));
          } else if constexpr (std::is_same_v<T, PstTerm::InfixFunApp>) {
            return application(x.symbol, {term_arg(x.left), term_arg(x.right)}, wordy(t));
          } else {
            if (!wordy(t)) return "$" + math(t) + "$";
            if constexpr (std::is_same_v<T, PstTerm::SetApp>) {
              std::vector<std::string> args;
              for (const auto& a : x.args) args.push_back(text(*a));
              return "the value of " + text(*x.fun) + " at " + series(args);
            } else if constexpr (std::is_same_v<T, PstTerm::Tuple>) {
              std::vector<std::string> parts;
              for (const auto& a : x.elements) parts.push_back(text(*a));
              return "the tuple of " + series(parts);
            } else if constexpr (std::is_same_v<T, PstTerm::FiniteSet>) {
              std::vector<std::string> parts;
              for (const auto& a : x.elements) parts.push_back(text(*a));
              return "the set containing " + series(parts);
            } else if constexpr (std::is_same_v<T, PstTerm::SetBuilder>) {
              return "the set of " + binder(term_arg(x.body), x.bound, false) + " such that " + text(*x.condition);
            } else if constexpr (std::is_same_v<T, PstTerm::Lambda>) {
              return "the function mapping each " + binder(var_list({x.var}), x.bound, false) + " to " +
                     text(*x.body);
            } else {
              const Arg pattern = x.tuple_pattern ? raw("$(" + join(x.pattern, ",") + ")$", "(" + join(x.pattern, ",") + ")")
                                                  : var_list(x.pattern);
              return "the unique " + binder(pattern, x.bound, false) + " such that " + text(*x.condition);
            }
          }
        },
        t.node);
  }

  std::string math(const PstTerm& t, int min_prec = 0) const {
    return std::visit(
        [&](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PstTerm::Variable>) {
            return x.name;
          } else if constexpr (std::is_same_v<T, PstTerm::FunApp>) {
            const LexEntry& e = entry(x.symbol);
            if (auto s = e.get("symb")) return apply(e, *s, term_args(x.args), true);
            return "\\mbox{" + text(t) + "}";
          } else if constexpr (std::is_same_v<T, PstTerm::InfixFunApp>) {
            const LexEntry& e = entry(x.symbol);
            const auto s = e.get("symb");
            if (!s) return "\\mbox{" + text(t) + "}";
            const int p = precedence(x.symbol);
            const std::string out = apply(e, *s, {term_arg(x.left, p), term_arg(x.right, p + 1)}, true);
            return p < min_prec ? "(" + out + ")" : out;
          } else if constexpr (std::is_same_v<T, PstTerm::SetApp>) {
            const bool simple = std::holds_alternative<PstTerm::Variable>(x.fun->node);
            std::vector<std::string> args;
            for (const auto& a : x.args) args.push_back(math(*a));
            return (simple ? math(*x.fun) : "(" + math(*x.fun) + ")") + "(" + join(args, ",") + ")";
          } else if constexpr (std::is_same_v<T, PstTerm::Tuple>) {
            std::vector<std::string> parts;
            for (const auto& a : x.elements) parts.push_back(math(*a));
            return "(" + join(parts, ",") + ")";
          } else if constexpr (std::is_same_v<T, PstTerm::FiniteSet>) {
            std::vector<std::string> parts;
            for (const auto& a : x.elements) parts.push_back(math(*a));
            return "\\{" + join(parts, ",") + "\\}";
          } else if constexpr (std::is_same_v<T, PstTerm::SetBuilder>) {
            return "\\set{" + binder(term_arg(x.body), x.bound, true) + " : " + math(*x.condition) + "}";
          } else if constexpr (std::is_same_v<T, PstTerm::Lambda>) {
            return "(\\lambda " + binder(var_list({x.var}), x.bound, true) + ")(" + math(*x.body) + ")";
          } else {
            const Arg pattern = x.tuple_pattern ? raw("", "(" + join(x.pattern, ",") + ")") : var_list(x.pattern);
            return "(\\iota " + binder(pattern, x.bound, true) + ")(" + math(*x.condition) + ")";
          }
        },
        t.node);
  }

  // -------------------------------------------------------------------------
  // Formulas

  // The text of relation `symbol` on `args`; nullopt when a negated form is
  // requested and the lexicon has none.
  std::optional<std::string> relation_text(const std::string& symbol, const std::vector<Arg>& args, bool words,
                                           bool negated) const {
    const LexEntry& e = entry(symbol);
    const char* sym_key = negated ? "nsym" : "symb";
    const char* rel_key = negated ? "negn" : "reln";
    if (!words && e.get("symb")) {
      if (auto s = e.get(sym_key)) return apply(e, *s, args, false);
      return std::nullopt;
    }
    if (auto r = e.get(rel_key)) return apply(e, *r, args, false);
    if (e.get("reln")) return std::nullopt;
    if (auto s = e.get(sym_key)) return apply(e, *s, args, false);
    if (negated) return std::nullopt;
    throw MissingLexiconEntry({symbol});
  }

  // Relation symbol and arguments of an atom that renders through a template.
  struct Atom {
    std::string symbol;
    std::vector<Arg> args;
    bool words = false;
  };

  std::optional<Atom> atom_of(const PstFormula& f) const {
    if (const auto* r = std::get_if<PstFormula::RelApp>(&f.node)) return Atom{r->symbol, term_args(r->args), wordy(f)};
    if (const auto* e = std::get_if<PstFormula::Equal>(&f.node)) {
      return Atom{"=", {term_arg(e->left), term_arg(e->right)}, wordy(f)};
    }
    if (const auto* e = std::get_if<PstFormula::PartialEqual>(&f.node)) {
      return Atom{"\\simeq", {term_arg(e->left), term_arg(e->right)}, wordy(f)};
    }
    if (const auto* c = std::get_if<PstFormula::InfixRelChain>(&f.node); c && c->terms.size() == 2) {
      return Atom{c->relations[0], {term_arg(c->terms[0]), term_arg(c->terms[1])}, wordy(f)};
    }
    if (const auto* m = std::get_if<PstFormula::MultiMembership>(&f.node)) {
      std::vector<std::string> t, mm;
      for (const auto& a : m->terms) {
        t.push_back(text(*a));
        mm.push_back(math(*a));
      }
      return Atom{m->relation, {raw(join(t, ", "), join(mm, ",")), term_arg(m->bound)}, wordy(f)};
    }
    return std::nullopt;
  }

  // The part of a symb template between `#0 ` and ` #1`, if it has that shape.
  std::optional<std::string> infix_operator(const std::string& symbol) const {
    const auto s = entry(symbol).get("symb");
    if (!s || s->rfind("#0 ", 0) != 0 || !ends_with(*s, " #1")) return std::nullopt;
    return s->substr(3, s->size() - 6);
  }

  std::string text(const PstFormula& f) const {
    if (auto a = atom_of(f)) return *relation_text(a->symbol, a->args, a->words, false);
    return std::visit(
        [&](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PstFormula::InfixRelChain>) {
            std::vector<std::string> ops;
            if (!wordy(f)) {
              for (const auto& r : x.relations) {
                if (auto op = infix_operator(r)) ops.push_back(*op);
              }
            }
            if (ops.size() == x.relations.size()) {
              std::string out = text(*x.terms[0]);
              for (std::size_t i = 0; i < ops.size(); ++i) out += " " + ops[i] + " " + text(*x.terms[i + 1]);
              return out;
            }
            std::vector<std::string> parts;
            for (std::size_t i = 0; i < x.relations.size(); ++i) {
              parts.push_back(*relation_text(x.relations[i], {term_arg(x.terms[i]), term_arg(x.terms[i + 1])},
                                             wordy(f), false));
            }
            return join(parts, " and ");
          } else if constexpr (std::is_same_v<T, PstFormula::Defined>) {
            return text(*x.term) + " is defined";
          } else if constexpr (std::is_same_v<T, PstFormula::Undefined>) {
            return text(*x.term) + " is undefined";
          } else if constexpr (std::is_same_v<T, PstFormula::SetRelApp>) {
            return text(*x.left) + " " + text(*x.relation) + " " + text(*x.right);
          } else if constexpr (std::is_same_v<T, PstFormula::Not>) {
            if (auto a = atom_of(*x.body)) {
              if (auto s = relation_text(a->symbol, a->args, a->words, true)) return *s;
            }
            return "it is not the case that " + text(*x.body);
          } else if constexpr (std::is_same_v<T, PstFormula::Binary>) {
            switch (x.op) {
              case Connective::And: return conjunction(f);
              case Connective::Or: return text(*x.left) + " or " + text(*x.right);
              case Connective::Implies: return "if " + text(*x.left) + " then " + text(*x.right);
              case Connective::Iff: return text(*x.left) + " if and only if " + text(*x.right);
            }
            return {};
          } else if constexpr (std::is_same_v<T, PstFormula::Quantified>) {
            const std::string b = binder(var_list(x.vars), x.bound, false);
            if (x.kind == Quantifier::Forall) return "for every " + b + ", " + text(*x.body);
            return std::string(x.vars.size() > 1 ? "there exist " : "there exists ") + b + " such that " +
                   text(*x.body);
          } else {
            return {};  // atoms handled above
          }
        },
        f.node);
  }

  // A conjunct that can join a plural sentence: subject and predicate of its
  // reln (or negn) template.
  struct Plural {
    std::string symbol;
    bool negated = false;
    std::string subject, predicate;
    std::vector<Arg> args;
  };

  std::optional<Plural> plural_form(const PstFormula& f) const {
    bool negated = false;
    const PstFormula* body = &f;
    if (const auto* n = std::get_if<PstFormula::Not>(&f.node)) {
      negated = true;
      body = n->body.get();
    }
    const auto* r = std::get_if<PstFormula::RelApp>(&body->node);
    if (!r) return std::nullopt;
    const LexEntry& e = entry(r->symbol);
    if (!wordy(*body) && e.get("symb")) return std::nullopt;
    const auto tmpl = e.get(negated ? "negn" : "reln");
    if (!tmpl) return std::nullopt;
    const std::string copula = negated ? " is not " : " is ";
    const auto cut = tmpl->find(copula);
    if (cut == std::string::npos) return std::nullopt;
    Plural p{r->symbol, negated, {}, {}, term_args(r->args)};
    p.subject = apply(e, tmpl->substr(0, cut), p.args, false);
    p.predicate = apply(e, tmpl->substr(cut + copula.size()), p.args, false);
    return p;
  }

  std::string merge(const std::vector<Plural>& group) const {
    std::vector<std::string> subjects;
    for (const auto& p : group) subjects.push_back(p.subject);
    const Plural& first = group.front();
    const LexEntry& e = entry(first.symbol);
    std::string predicate;
    if (auto t = e.get(first.negated ? "nplu" : "plur")) {
      predicate = apply(e, *t, first.args, false);
    } else {
      predicate = (first.negated ? "are not " : "are ") + plural_phrase(first.predicate);
    }
    return series(subjects) + " " + predicate;
  }

  std::string conjunction(const PstFormula& f) const {
    std::vector<const PstFormula*> items;
    std::function<void(const PstFormula&)> flatten = [&](const PstFormula& g) {
      const auto* b = std::get_if<PstFormula::Binary>(&g.node);
      if (b && b->op == Connective::And) {
        flatten(*b->left);
        flatten(*b->right);
      } else {
        items.push_back(&g);
      }
    };
    flatten(f);
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < items.size();) {
      std::vector<Plural> group;
      if (auto p = plural_form(*items[i])) group.push_back(*p);
      std::size_t j = i + 1;
      while (!group.empty() && j < items.size()) {
        auto q = plural_form(*items[j]);
        if (!q || q->symbol != group[0].symbol || q->negated != group[0].negated ||
            q->predicate != group[0].predicate) {
          break;
        }
        group.push_back(*q);
        ++j;
      }
      if (group.size() >= 2) {
        parts.push_back(merge(group));
        i = j;
      } else {
        parts.push_back(text(*items[i]));
        ++i;
      }
    }
    return join(parts, " and ");
  }

  std::string math(const PstFormula& f, int min_level = kIffLevel) const {
    int level = kUnaryLevel;
    std::string s = std::visit(
        [&](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PstFormula::Defined>) {
            return math(*x.term) + "\\mathord{\\downarrow}";
          } else if constexpr (std::is_same_v<T, PstFormula::Undefined>) {
            return math(*x.term) + "\\mathord{\\uparrow}";
          } else if constexpr (std::is_same_v<T, PstFormula::SetRelApp>) {
            return math(*x.left) + " \\mathrel{" + math(*x.relation) + "} " + math(*x.right);
          } else if constexpr (std::is_same_v<T, PstFormula::InfixRelChain>) {
            std::string out = math(*x.terms[0]);
            for (std::size_t i = 0; i < x.relations.size(); ++i) {
              const auto op = infix_operator(x.relations[i]);
              if (!op) return "\\mbox{" + text(f) + "}";
              std::string bare;
              for (char c : *op) {
                if (c != '$') bare += c;
              }
              out += " " + bare + " " + math(*x.terms[i + 1]);
            }
            return out;
          } else if constexpr (std::is_same_v<T, PstFormula::Not>) {
            return "\\neg " + math(*x.body, kUnaryLevel);
          } else if constexpr (std::is_same_v<T, PstFormula::Binary>) {
            switch (x.op) {
              case Connective::Iff:
                level = kIffLevel;
                return math(*x.left, kImpLevel) + " \\leftrightarrow " + math(*x.right, kImpLevel);
              case Connective::Implies:
                level = kImpLevel;
                return math(*x.left, kOrLevel) + " \\rightarrow " + math(*x.right, kImpLevel);
              case Connective::Or:
                level = kOrLevel;
                return math(*x.left, kOrLevel) + " \\vee " + math(*x.right, kAndLevel);
              case Connective::And:
                level = kAndLevel;
                return math(*x.left, kAndLevel) + " \\wedge " + math(*x.right, kUnaryLevel);
            }
            return {};
          } else if constexpr (std::is_same_v<T, PstFormula::Quantified>) {
            const std::string q = x.kind == Quantifier::Forall ? "\\forall " : "\\exists ";
            return "(" + q + binder(var_list(x.vars), x.bound, true) + ")(" + math(*x.body) + ")";
          } else {
            const auto a = atom_of(f);
            const LexEntry& e = entry(a->symbol);
            if (auto t = e.get("symb")) return apply(e, *t, a->args, true);
            return "\\mbox{" + text(f) + "}";
          }
        },
        f.node);
    return level < min_level ? "(" + s + ")" : s;
  }

  // -------------------------------------------------------------------------
  // Definitions

  std::string head(const PstDefinition& d) const {
    std::vector<Arg> args;
    for (const auto& p : d.params) args.push_back(raw("$" + p + "$", p));
    const LexEntry& e = entry(d.symbol);
    if (d.kind == DefKind::Relation) {
      for (const char* key : {"reln", "symb"}) {
        if (auto t = e.get(key)) return apply(e, *t, args, false);
      }
      throw MissingLexiconEntry({d.symbol});
    }
    for (const char* key : {"word", "symb"}) {
      if (auto t = e.get(key)) return "\\emph{" + apply(e, *t, args, false) + "}";
    }
    throw MissingLexiconEntry({d.symbol});
  }

  static std::string capitalize(std::string s) {
    const std::string emph = "\\emph{";
    const std::size_t at = s.rfind(emph, 0) == 0 ? emph.size() : 0;
    if (at < s.size() && std::islower(static_cast<unsigned char>(s[at]))) {
      s[at] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[at])));
    }
    return s;
  }

  std::string definition(const PstDefinition& d) const {
    std::set<std::string> used{d.symbol};
    for (const auto& c : d.clauses) {
      if (c.guard) collect_symbols(**c.guard, used);
      if (const auto* t = std::get_if<PstTermPtr>(&c.body)) collect_symbols(**t, used);
      if (const auto* f = std::get_if<PstFormulaPtr>(&c.body)) collect_symbols(**f, used);
    }
    std::vector<std::string> missing;
    for (const auto& s : used) {
      if (!lex_.find(s)) missing.push_back(s);
    }
    if (!missing.empty()) throw MissingLexiconEntry(missing);

    const std::string h = head(d);
    std::vector<std::string> sentences;
    for (const auto& c : d.clauses) {
      std::string body;
      if (const auto* t = std::get_if<PstTermPtr>(&c.body)) {
        body = h + " is " + text(**t);
      } else if (const auto* f = std::get_if<PstFormulaPtr>(&c.body)) {
        body = h + " if and only if " + text(**f);
      } else {
        body = h + " is undefined";
      }
      if (c.guard) {
        sentences.push_back("If " + text(**c.guard) + " then " + body);
      } else if (c.otherwise && d.clauses.size() > 1) {
        sentences.push_back("Otherwise " + body);
      } else {
        sentences.push_back(capitalize(body));
      }
    }
    return "{\\bf Definition:} " + join(sentences, ". ") + ".";
  }

 private:
  const Lexicon& lex_;
  const SymbolTable& symbols_;
};

}  // namespace

std::string render_nl(const PstDefinition& def, const Lexicon& lexicon, const SymbolTable& symbols) {
  return NlRenderer(lexicon, symbols).definition(def);
}

}  // namespace pst
