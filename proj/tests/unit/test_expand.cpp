#include <doctest.h>

#include "../support.hpp"
#include "pst/expand.hpp"
#include "pst/metrics.hpp"

using namespace pst;
using namespace pst::dz;

namespace {

const char* kSmall =
    "% protected-role: subset\n"
    "DEFINITION S.1: Infix relation \\subseteq. x \\subseteq y \\iff (\\forall z)(z \\in x \\rightarrow z \\in y).\n"
    "DEFINITION S.2: 1-ary function Sing. Sing(a) \\simeq {a}.\n"
    "DEFINITION S.3: 1-ary relation P. P[x] \\iff Sing(x) \\subseteq x.\n"
    "DEFINITION S.4: 1-ary relation Q. Q[x] \\iff P[x] \\wedge \\neg P[x].\n";

DefStore small_store() {
  DefStore store;
  auto parsed = parse_corpus(kSmall, store.symbols());
  REQUIRE(parsed.errors.empty());
  for (const auto& d : parsed.definitions) store.add(d);
  return store;
}

TermPtr v(const char* n) { return var(n); }

// (ι z)(∀w)(w ∈ z ↔ w = a)
TermPtr singleton(const TermPtr& a) {
  return iota("s", forall("w", iff(member(v("w"), v("s")), equal(v("w"), a))));
}

}  // namespace

TEST_CASE("relations unfold in place and functions become existentials") {
  const auto store = small_store();
  const auto out = expand(definiens_formula(store.at("P")), store);
  const auto expected =
      forall("z", implies(exists("n", conj(pequal(v("n"), singleton(v("x"))), member(v("z"), v("n")))),
                          member(v("z"), v("x"))));
  CHECK(alpha_equal(*out, *expected));
}

TEST_CASE("partial expansion keeps protected symbols") {
  const auto store = small_store();
  const auto out = expand(definiens_formula(store.at("P")), store, ExpandOptions::partial(store));
  const auto expected =
      exists("n", conj(pequal(v("n"), singleton(v("x"))), rel("\\subseteq", {v("n"), v("x")})));
  CHECK(alpha_equal(*out, *expected));
}

TEST_CASE("no mode leaves the formula alone") {
  const auto store = small_store();
  const auto f = definiens_formula(store.at("Q"));
  ExpandOptions none;
  none.mode = ExpandMode::None;
  CHECK(structurally_equal(*expand(f, store, none), *f));
}

TEST_CASE("expansion output has no defined symbols left") {
  const auto store = testing::corpus_store();
  const auto out = expand(definiens_formula(store.at("FINERTOP")), store, ExpandOptions::full(1'000'000));
  std::set<std::string> used;
  collect_symbols(*out, used);
  CHECK(used.empty());
}

TEST_CASE("argument substitution avoids capture") {
  // Sing's body binds w; substituting an argument named w must not be captured.
  const auto store = small_store();
  const auto f = rel("P", {v("w")});
  const auto out = expand(f, store);
  CHECK(free_vars(*out) == std::set<std::string>{"w"});
}

TEST_CASE("budget overrun throws") {
  DefStore store;
  testing::load_into(store, {"tests/fixtures/tower.pst"});
  CHECK_THROWS_AS(expand(definiens_formula(store.at("T_{20}")), store, ExpandOptions::full(10'000)), BudgetExceeded);
  CHECK_NOTHROW(expand(definiens_formula(store.at("T_{5}")), store, ExpandOptions::full(10'000)));
}
