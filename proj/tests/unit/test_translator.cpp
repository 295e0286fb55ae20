#include <doctest.h>

#include "../support.hpp"
#include "pst/translator.hpp"

using namespace pst;
using namespace pst::dz;

namespace {

const DefStore& store() {
  static const DefStore s = testing::corpus_store();
  return s;
}

TermPtr v(const char* n) { return var(n); }
TermPtr pair(TermPtr a, TermPtr b) { return fun(kPairSymbol, {std::move(a), std::move(b)}); }

DefiningAxiom function_axiom(std::string symbol, std::vector<std::string> params, TermPtr rhs) {
  DefiningAxiom ax;
  ax.symbol = std::move(symbol);
  ax.kind = AxiomKind::Function;
  ax.params = std::move(params);
  ax.term = std::move(rhs);
  return ax;
}

DefiningAxiom relation_axiom(std::string symbol, std::vector<std::string> params, FormulaPtr rhs) {
  DefiningAxiom ax;
  ax.symbol = std::move(symbol);
  ax.kind = AxiomKind::Relation;
  ax.params = std::move(params);
  ax.formula = std::move(rhs);
  return ax;
}

// (ι z)(∀w)(w ∈ z ↔ φ(w))
TermPtr comprehension(const char* z, const char* w, FormulaPtr phi) {
  return iota(z, forall(w, iff(member(v(w), v(z)), std::move(phi))));
}

}  // namespace

TEST_CASE("Oneptcompactification translates to the printed DZFC") {
  auto inner = iota("x_{0}", exists(std::vector<std::string>{"Y", "T'"},
                                    conj(equal(v("x_{0}"), pair(v("Y"), v("T'"))),
                                         conj(rel("COMPACTIFICATION", {v("Y"), v("T'"), v("X"), v("T")}),
                                              rel("\\approx_{C}", {fun("\\backslash", {v("Y"), v("X")}),
                                                                   fun("1_{N}")})))));
  auto expected = function_axiom(
      "Oneptcompactification", {"X", "T"},
      iota("y_{0}", conj(rel("TOPSP", {v("X"), v("T")}), pequal(v("y_{0}"), inner))));
  CHECK(alpha_equal(store().at("Oneptcompactification").axiom, expected));
}

TEST_CASE("FCN translates to the printed DZFC") {
  auto value = iota("x_{0}", member(pair(v("x"), v("x_{0}")), v("f")));
  auto set = comprehension("z_{0}", "y_{0}",
                           exists(std::vector<std::string>{"x", "y"}, conj(equal(v("y_{0}"), pair(v("x"), v("y"))), equal(value, v("y")))));
  auto expected = relation_axiom("FCN", {"f"}, equal(v("f"), set));
  CHECK(alpha_equal(store().at("FCN").axiom, expected));
}

TEST_CASE("Cartespow translates to the printed DZFC") {
  auto graph = comprehension(
      "z_{0}", "y_{0}",
      exists(std::vector<std::string>{"b", "x_{0}"}, conj(conj(equal(v("y_{0}"), pair(v("b"), v("x_{0}"))), equal(v("x_{0}"), v("A"))),
                                  member(v("b"), v("B")))));
  auto expected = function_axiom("Cartespow", {"A", "B"}, fun("Cartesprod", {graph, v("B")}));
  CHECK(alpha_equal(store().at("Cartespow").axiom, expected));
}

TEST_CASE("alpha-equivalence is not fooled by capture") {
  // (∃x)(x ∈ y) and (∃y)(y ∈ y) differ.
  CHECK_FALSE(alpha_equal(*exists("x", member(v("x"), v("y"))), *exists("y", member(v("y"), v("y")))));
  CHECK(alpha_equal(*exists("x", member(v("x"), v("y"))), *exists("w", member(v("w"), v("y")))));
}

TEST_CASE("bounded quantifiers relativize") {
  const auto& symbols = store().symbols();
  auto f = parse_formula("(\\forall x \\in X)(\\exists y \\subseteq x)(y = y)", symbols);
  auto expected = forall("x", implies(member(v("x"), v("X")),
                                      exists("y", conj(rel("\\subseteq", {v("y"), v("x")}), equal(v("y"), v("y"))))));
  CHECK(alpha_equal(*translate_formula(*f, symbols), *expected));
}

TEST_CASE("fresh variables avoid names in the input") {
  const auto& symbols = store().symbols();
  // The body already uses z_{0} and y_{0}; the comprehension must not capture them.
  auto t = parse_term("{x : x \\in z_{0} \\wedge y_{0} \\in x}", symbols);
  auto out = translate_term(*t, symbols);
  auto fv = free_vars(*out);
  CHECK(fv == std::set<std::string>{"y_{0}", "z_{0}"});
}

TEST_CASE("chains split into conjunctions") {
  const auto& symbols = store().symbols();
  auto f = parse_formula("a <_{\\mathbb{R}} x <_{\\mathbb{R}} b", symbols);
  auto expected = conj(rel("<_{\\mathbb{R}}", {v("a"), v("x")}), rel("<_{\\mathbb{R}}", {v("x"), v("b")}));
  CHECK(alpha_equal(*translate_formula(*f, symbols), *expected));
}

TEST_CASE("a fixed variable must occur in the set-builder body") {
  const auto& symbols = store().symbols();
  auto t = parse_term("{x : x \\in X, f fixed}", symbols);
  CHECK_THROWS_AS(translate_term(*t, symbols), FixedVarNotFree);
}

TEST_CASE("unregistered symbols are rejected") {
  SymbolTable with_extra = store().symbols();
  with_extra.add({"GHOST", DefKind::Relation, false, 1, std::nullopt, false});
  auto f = parse_formula("GHOST[x]", with_extra);
  CHECK_THROWS_AS(translate_formula(*f, store().symbols()), UnregisteredSymbol);
}
