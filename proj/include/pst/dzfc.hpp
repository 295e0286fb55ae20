#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pst/saturating.hpp"

namespace pst::dz {

// Core language: first-order logic of partial terms with iota and defined
// symbols. Nodes are immutable, shared, and carry their saturated length.
struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Term {
  enum class Kind { Var, FunApp, Iota };
  Kind kind;
  std::string name;  // variable name, function symbol, or iota binder
  std::vector<TermPtr> args;
  FormulaPtr body;   // iota only
  std::int64_t length = 0;
};

struct Formula {
  enum class Kind { Member, Equal, PartialEqual, Defined, RelApp, Not, And, Or, Implies, Iff, Forall, Exists };
  Kind kind;
  std::string name;  // relation symbol or quantified variable
  std::vector<TermPtr> args;  // atoms: the argument terms (two for Member/Equal/PartialEqual)
  FormulaPtr left, right;     // Not and quantifiers use `left` as the body
  std::int64_t length = 0;

  bool is_atom() const { return kind <= Kind::RelApp; }
  bool is_quantifier() const { return kind == Kind::Forall || kind == Kind::Exists; }
  bool is_binary() const { return kind >= Kind::And && kind <= Kind::Iff; }
  const FormulaPtr& body() const { return left; }
};

TermPtr var(std::string name);
TermPtr fun(std::string symbol, std::vector<TermPtr> args = {});
TermPtr iota(std::string var, FormulaPtr body);

FormulaPtr member(TermPtr l, TermPtr r);
FormulaPtr equal(TermPtr l, TermPtr r);
FormulaPtr pequal(TermPtr l, TermPtr r);
FormulaPtr defined(TermPtr t);
FormulaPtr rel(std::string symbol, std::vector<TermPtr> args);
FormulaPtr atom(Formula::Kind kind, std::string symbol, std::vector<TermPtr> args);
FormulaPtr neg(FormulaPtr f);
FormulaPtr binary(Formula::Kind kind, FormulaPtr l, FormulaPtr r);
FormulaPtr conj(FormulaPtr l, FormulaPtr r);
FormulaPtr disj(FormulaPtr l, FormulaPtr r);
FormulaPtr implies(FormulaPtr l, FormulaPtr r);
FormulaPtr iff(FormulaPtr l, FormulaPtr r);
FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr exists(std::string var, FormulaPtr body);
FormulaPtr quant(Formula::Kind kind, std::string var, FormulaPtr body);
// Nested single binders, first variable outermost.
FormulaPtr exists(const std::vector<std::string>& vars, FormulaPtr body);
FormulaPtr forall(const std::vector<std::string>& vars, FormulaPtr body);

enum class AxiomKind { Function, Relation };

// f(params) ≃ term, or R(params) ↔ formula.
struct DefiningAxiom {
  std::string symbol;
  AxiomKind kind = AxiomKind::Function;
  std::vector<std::string> params;
  TermPtr term;        // functions
  FormulaPtr formula;  // relations
  bool infix = false;  // presentation only
};

// The formula `f(ȳ) ≃ rhs` or `R[ȳ] ↔ rhs` stated by an axiom.
FormulaPtr axiom_formula(const DefiningAxiom& ax);

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
void collect_names(const Term& t, std::set<std::string>& out);
void collect_names(const Formula& f, std::set<std::string>& out);
// Defined function and relation symbols (Member/Equal are primitives and excluded).
void collect_symbols(const Term& t, std::set<std::string>& out);
void collect_symbols(const Formula& f, std::set<std::string>& out);

// Names from x_{0}, y_{0}, z_{0}, x_{1}, ... not in `avoid`.
std::vector<std::string> fresh_vars(std::size_t count, const std::set<std::string>& avoid);
// Smallest `<letter>_{k}` not in `avoid`.
std::string fresh_name(char letter, const std::set<std::string>& avoid);

bool alpha_equal(const Term& a, const Term& b);
bool alpha_equal(const Formula& a, const Formula& b);
bool alpha_equal(const DefiningAxiom& a, const DefiningAxiom& b);
bool structurally_equal(const Term& a, const Term& b);
bool structurally_equal(const Formula& a, const Formula& b);

inline std::int64_t symbol_length(const Term& t) { return t.length; }
inline std::int64_t symbol_length(const Formula& f) { return f.length; }

// Capture-avoiding simultaneous substitution of terms for free variables.
using Substitution = std::map<std::string, TermPtr>;
TermPtr substitute(const TermPtr& t, const Substitution& s);
FormulaPtr substitute(const FormulaPtr& f, const Substitution& s);

// Compact single-line text form, for diagnostics and test failure messages.
std::string to_string(const Term& t);
std::string to_string(const Formula& f);

}  // namespace pst::dz
