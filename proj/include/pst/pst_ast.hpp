#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace pst {

// Surface (sugared) language. Nodes are immutable and shared.
struct PstTerm;
struct PstFormula;
using PstTermPtr = std::shared_ptr<const PstTerm>;
using PstFormulaPtr = std::shared_ptr<const PstFormula>;

// `x R t` restriction attached to a binder: `(\forall U \subseteq X)`.
struct Bound {
  std::string relation;
  PstTermPtr term;
};

struct PstTerm {
  struct Variable {
    std::string name;
  };
  // Prefix application of a defined function; 0-ary constants have no args.
  struct FunApp {
    std::string symbol;
    std::vector<PstTermPtr> args;
  };
  struct InfixFunApp {
    std::string symbol;
    PstTermPtr left, right;
  };
  // Any term used as a function: `f(x)`.
  struct SetApp {
    PstTermPtr fun;
    std::vector<PstTermPtr> args;
  };
  struct Tuple {
    std::vector<PstTermPtr> elements;  // at least 2
  };
  struct FiniteSet {
    std::vector<PstTermPtr> elements;
  };
  // `{t : phi}`, `{x R s : phi}`, `{t : phi, f fixed}`. A bound is only
  // present when the body is a variable.
  struct SetBuilder {
    PstTermPtr body;
    std::optional<Bound> bound;
    PstFormulaPtr condition;
    std::vector<std::string> fixed;
  };
  struct Lambda {
    std::string var;
    std::optional<Bound> bound;
    PstTermPtr body;
  };
  // `(!x)(phi)`, `(!<Y,T'>)(phi)`, `(!T \subseteq S)(phi)`.
  struct Iota {
    std::vector<std::string> pattern;
    bool tuple_pattern = false;
    std::optional<Bound> bound;
    PstFormulaPtr condition;
  };

  std::variant<Variable, FunApp, InfixFunApp, SetApp, Tuple, FiniteSet, SetBuilder, Lambda, Iota> node;
};

enum class Quantifier { Forall, Exists };
enum class Connective { And, Or, Implies, Iff };

struct PstFormula {
  struct RelApp {
    std::string symbol;
    std::vector<PstTermPtr> args;
  };
  // t1 R1 t2 R2 ... tn; also any single binary infix relation other than
  // `=` and `\simeq`.
  struct InfixRelChain {
    std::vector<PstTermPtr> terms;
    std::vector<std::string> relations;
  };
  struct MultiMembership {
    std::vector<PstTermPtr> terms;
    std::string relation;
    PstTermPtr bound;
  };
  struct Equal {
    PstTermPtr left, right;
  };
  struct PartialEqual {
    PstTermPtr left, right;
  };
  struct Defined {
    PstTermPtr term;
  };
  struct Undefined {
    PstTermPtr term;
  };
  // `x R y` where R is a term (a set of pairs) rather than a defined symbol.
  struct SetRelApp {
    PstTermPtr relation;
    PstTermPtr left, right;
  };
  struct Not {
    PstFormulaPtr body;
  };
  struct Binary {
    Connective op;
    PstFormulaPtr left, right;
  };
  struct Quantified {
    Quantifier kind;
    std::vector<std::string> vars;
    std::optional<Bound> bound;
    PstFormulaPtr body;
  };

  std::variant<RelApp, InfixRelChain, MultiMembership, Equal, PartialEqual, Defined, Undefined, SetRelApp, Not,
               Binary, Quantified>
      node;
};

struct UndefinedBody {};

struct Clause {
  std::optional<PstFormulaPtr> guard;
  std::variant<PstTermPtr, PstFormulaPtr, UndefinedBody> body;
  bool otherwise = false;
};

enum class DefKind { Function, Relation };

struct PstDefinition {
  std::string label;
  DefKind kind = DefKind::Function;
  bool infix = false;
  int arity = 0;
  std::optional<int> precedence;
  std::string symbol;
  std::vector<std::string> params;
  std::vector<Clause> clauses;
  std::vector<std::string> roles;  // `% protected-role:` annotations

  bool otherwise_present() const {
    return !clauses.empty() && clauses.back().otherwise;
  }
  // Book tag: the label prefix before the first '.'.
  std::string book() const;
};

// Constructors.
namespace pt {
PstTermPtr var(std::string name);
PstTermPtr fun(std::string symbol, std::vector<PstTermPtr> args = {});
PstTermPtr infix(std::string symbol, PstTermPtr l, PstTermPtr r);
PstTermPtr setapp(PstTermPtr f, std::vector<PstTermPtr> args);
PstTermPtr tuple(std::vector<PstTermPtr> elements);
PstTermPtr finite_set(std::vector<PstTermPtr> elements);
PstTermPtr set_builder(PstTermPtr body, std::optional<Bound> bound, PstFormulaPtr cond,
                       std::vector<std::string> fixed = {});
PstTermPtr lambda(std::string var, std::optional<Bound> bound, PstTermPtr body);
PstTermPtr iota(std::vector<std::string> pattern, bool tuple_pattern, std::optional<Bound> bound,
                PstFormulaPtr cond);

PstFormulaPtr rel(std::string symbol, std::vector<PstTermPtr> args);
PstFormulaPtr chain(std::vector<PstTermPtr> terms, std::vector<std::string> relations);
PstFormulaPtr infix_rel(std::string relation, PstTermPtr l, PstTermPtr r);  // normalizes = and \simeq
PstFormulaPtr multi(std::vector<PstTermPtr> terms, std::string relation, PstTermPtr bound);
PstFormulaPtr equal(PstTermPtr l, PstTermPtr r);
PstFormulaPtr pequal(PstTermPtr l, PstTermPtr r);
PstFormulaPtr defined(PstTermPtr t);
PstFormulaPtr undefined(PstTermPtr t);
PstFormulaPtr setrel(PstTermPtr relation, PstTermPtr l, PstTermPtr r);
PstFormulaPtr neg(PstFormulaPtr f);
PstFormulaPtr binary(Connective op, PstFormulaPtr l, PstFormulaPtr r);
PstFormulaPtr quant(Quantifier q, std::vector<std::string> vars, std::optional<Bound> bound, PstFormulaPtr body);
}  // namespace pt

bool structurally_equal(const PstTerm& a, const PstTerm& b);
bool structurally_equal(const PstFormula& a, const PstFormula& b);
bool structurally_equal(const PstDefinition& a, const PstDefinition& b);

// Free variables in the PST sense: set-builders bind the non-fixed variables
// of their body term, lambdas and iotas bind their patterns, quantifiers bind
// their variables.
std::set<std::string> free_vars(const PstTerm& t);
std::set<std::string> free_vars(const PstFormula& f);
// Every variable name occurring anywhere (bound or free).
void collect_names(const PstTerm& t, std::set<std::string>& out);
void collect_names(const PstFormula& f, std::set<std::string>& out);
void collect_names(const PstDefinition& d, std::set<std::string>& out);
// Defined symbols referenced (function and relation names, infix included).
void collect_symbols(const PstTerm& t, std::set<std::string>& out);
void collect_symbols(const PstFormula& f, std::set<std::string>& out);

// Variables bound by a set-builder, in order of first occurrence in the body.
std::vector<std::string> set_builder_binders(const PstTerm::SetBuilder& sb);

}  // namespace pst
