#include <doctest.h>

#include "pst/parser.hpp"

using namespace pst;
namespace p = pst::pt;

namespace {

SymbolTable table() {
  SymbolTable t = base_symbols();
  t.add({"\\cup", DefKind::Function, true, 2, 30, false});
  t.add({"\\cap", DefKind::Function, true, 2, 30, false});
  t.add({"+", DefKind::Function, true, 2, 40, false});
  t.add({"*", DefKind::Function, true, 2, 50, false});
  t.add({"\\prec", DefKind::Relation, true, 2, std::nullopt, false});
  t.add({"\\subseteq", DefKind::Relation, true, 2, std::nullopt, false});
  t.add({"TOPSP", DefKind::Relation, false, 2, std::nullopt, false});
  t.add({"\\wp", DefKind::Function, false, 1, std::nullopt, false});
  t.add({"1_{N}", DefKind::Function, false, 0, std::nullopt, false});
  return t;
}

bool same(const PstTermPtr& a, const PstTermPtr& b) { return structurally_equal(*a, *b); }
bool same(const PstFormulaPtr& a, const PstFormulaPtr& b) { return structurally_equal(*a, *b); }

}  // namespace

TEST_CASE("infix functions nest by precedence and associate left") {
  const auto t = table();
  auto x = p::var("x"), y = p::var("y"), z = p::var("z");
  CHECK(same(parse_term("x + y * z", t), p::infix("+", x, p::infix("*", y, z))));
  CHECK(same(parse_term("x * y + z", t), p::infix("+", p::infix("*", x, y), z)));
  CHECK(same(parse_term("x + y + z", t), p::infix("+", p::infix("+", x, y), z)));
  CHECK(same(parse_term("x \\cup y \\cap z", t), p::infix("\\cap", p::infix("\\cup", x, y), z)));
  CHECK(same(parse_term("x + (y + z)", t), p::infix("+", x, p::infix("+", y, z))));
}

TEST_CASE("connectives: and binds tighter than or, implication nests right") {
  const auto t = table();
  auto a = p::rel("TOPSP", {p::var("a"), p::var("a")});
  auto b = p::rel("TOPSP", {p::var("b"), p::var("b")});
  auto c = p::rel("TOPSP", {p::var("c"), p::var("c")});
  CHECK(same(parse_formula("TOPSP[a,a] \\vee TOPSP[b,b] \\wedge TOPSP[c,c]", t),
             p::binary(Connective::Or, a, p::binary(Connective::And, b, c))));
  CHECK(same(parse_formula("TOPSP[a,a] \\rightarrow TOPSP[b,b] \\rightarrow TOPSP[c,c]", t),
             p::binary(Connective::Implies, a, p::binary(Connective::Implies, b, c))));
  CHECK(same(parse_formula("\\neg TOPSP[a,a] \\wedge TOPSP[b,b]", t),
             p::binary(Connective::And, p::neg(a), b)));
}

TEST_CASE("chains and multi-membership") {
  const auto t = table();
  auto a = p::var("a"), x = p::var("x"), b = p::var("b"), X = p::var("X");
  CHECK(same(parse_formula("a \\prec x \\prec b", t), p::chain({a, x, b}, {"\\prec", "\\prec"})));
  CHECK(same(parse_formula("a, b \\in X", t), p::multi({a, b}, "\\in", X)));
  CHECK(same(parse_formula("x = a", t), p::equal(x, a)));
  CHECK(same(parse_formula("x \\simeq a", t), p::pequal(x, a)));
}

TEST_CASE("bounded quantifiers, set-builders, lambdas and descriptions") {
  const auto t = table();
  auto x = p::var("x"), y = p::var("y"), X = p::var("X");
  CHECK(same(parse_formula("(\\forall x,y \\in X)(x = y)", t),
             p::quant(Quantifier::Forall, {"x", "y"}, Bound{"\\in", X}, p::equal(x, y))));
  CHECK(same(parse_term("{x \\subseteq X : x = x}", t),
             p::set_builder(x, Bound{"\\subseteq", X}, p::equal(x, x))));
  CHECK(same(parse_term("{<x,y> : x \\in y}", t),
             p::set_builder(p::tuple({x, y}), std::nullopt, p::infix_rel("\\in", x, y))));
  CHECK(same(parse_term("(\\lambda x \\in X)(\\wp(x))", t),
             p::lambda("x", Bound{"\\in", X}, p::fun("\\wp", {x}))));
  CHECK(same(parse_term("(!<x,y>)(x = y)", t), p::iota({"x", "y"}, true, std::nullopt, p::equal(x, y))));
  CHECK(same(parse_term("{x, 1_{N}}", t), p::finite_set({x, p::fun("1_{N}")})));
}

TEST_CASE("fixed variables in a set-builder") {
  const auto t = table();
  auto f = p::var("f"), x = p::var("x"), X = p::var("X");
  CHECK(same(parse_term("{f + x : x \\in X, f fixed}", t),
             p::set_builder(p::infix("+", f, x), std::nullopt, p::infix_rel("\\in", x, X), {"f"})));
}

TEST_CASE("definitions with guards and Otherwise") {
  const auto parsed = parse_corpus(
      "DEFINITION T.1: 1-ary function Half. If TOPSP[x,x] then Half(x) \\simeq x. Otherwise Half(x) \\uparrow.\n"
      "DEFINITION T.2: Infix function \\oplus. x \\oplus y \\simeq Half(x). Precedence 60.\n",
      table());
  REQUIRE(parsed.errors.empty());
  REQUIRE(parsed.definitions.size() == 2);
  const auto& half = parsed.definitions[0];
  CHECK(half.symbol == "Half");
  CHECK(half.params == std::vector<std::string>{"x"});
  REQUIRE(half.clauses.size() == 2);
  CHECK(half.clauses[0].guard.has_value());
  CHECK(half.otherwise_present());
  CHECK(std::holds_alternative<UndefinedBody>(half.clauses[1].body));
  const auto& oplus = parsed.definitions[1];
  CHECK(oplus.infix);
  CHECK(oplus.precedence == 60);
  CHECK(parsed.symbols.contains("\\oplus"));
  CHECK(half.book() == "T");
}

TEST_CASE("errors are collected per definition with their labels") {
  const auto parsed = parse_corpus(
      "DEFINITION E.1: 1-ary relation OK. OK[x] \\iff x \\in x.\n"
      "DEFINITION E.2: 1-ary relation BAD. BAD[x] \\iff x \\in \\wedge x.\n"
      "DEFINITION E.3: 1-ary relation UNK. UNK[x] \\iff NOPE[x].\n"
      "DEFINITION E.4: 1-ary relation LAST. LAST[x] \\iff OK[x].\n");
  // Unregistered names parse by their lexical class; translation rejects them.
  CHECK(parsed.definitions.size() == 3);
  REQUIRE(parsed.errors.size() == 1);
  CHECK(parsed.errors[0].label == "E.2");
  CHECK(parsed.errors[0].pos.line == 2);
  CHECK(parsed.definitions[1].label == "E.3");
}

TEST_CASE("redefinition is a parse error") {
  const auto parsed = parse_corpus(
      "DEFINITION D.1: 1-ary relation S. S[x] \\iff x \\in x.\n"
      "DEFINITION D.2: 1-ary relation S. S[x] \\iff x \\in x.\n");
  CHECK(parsed.definitions.size() == 1);
  REQUIRE(parsed.errors.size() == 1);
  CHECK(parsed.errors[0].label == "D.2");
}

TEST_CASE("an infix function without precedence is an unknown symbol") {
  SymbolTable t = base_symbols();
  t.add({"\\oplus", DefKind::Function, true, 2, std::nullopt, false});
  CHECK_THROWS_AS(parse_term("x \\oplus y", t), UnknownSymbolError);
}

TEST_CASE("expression parse errors throw") {
  CHECK_THROWS_AS(parse_term("x +", table()), ParseError);
  CHECK_THROWS_AS(parse_formula("x = ", table()), ParseError);
}

TEST_CASE("empty corpus") {
  const auto parsed = parse_corpus("");
  CHECK(parsed.definitions.empty());
  CHECK(parsed.errors.empty());
}

TEST_CASE("protected-role comments attach to the next definition") {
  const auto parsed = parse_corpus(
      "% protected-role: subset\nDEFINITION R.1: 1-ary relation S. S[x] \\iff x \\in x.\n"
      "DEFINITION R.2: 1-ary relation U. U[x] \\iff x \\in x.\n");
  REQUIRE(parsed.definitions.size() == 2);
  CHECK(parsed.definitions[0].roles == std::vector<std::string>{"subset"});
  CHECK(parsed.definitions[1].roles.empty());
}
