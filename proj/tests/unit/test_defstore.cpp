#include <doctest.h>

#include <functional>

#include "../support.hpp"
#include "pst/dzfc_json.hpp"
#include "pst/translator.hpp"

using namespace pst;

TEST_CASE("chain fixture: sizes and depths") {
  DefStore store;
  testing::load_into(store, {"tests/fixtures/chain5.pst"});
  for (int k = 1; k <= 5; ++k) {
    const auto dag = dag_of(store, "P" + std::to_string(k));
    CHECK(dag_size(dag) == static_cast<std::size_t>(k));
    CHECK(dag_depth(dag) == k - 1);
  }
  CHECK(store.at("P3").deps == std::vector<std::string>{"P2"});
}

TEST_CASE("diamond fixture: shared node counted once") {
  DefStore store;
  testing::load_into(store, {"tests/fixtures/diamond.pst"});
  const auto d = dag_of(store, "D");
  CHECK(dag_size(d) == 4);
  CHECK(dag_depth(d) == 2);
  CHECK(d.nodes == std::vector<std::string>{"A", "B", "C", "D"});
  CHECK(dag_size(dag_of(store, "B")) == 2);
  CHECK(dag_depth(dag_of(store, "A")) == 0);
}

TEST_CASE("the pairing function is built in and feeds the DAG") {
  DefStore store;
  testing::load_into(store, {"corpus/foundations.pst"});
  CHECK(store.at(kPairSymbol).builtin);
  const auto& bij = store.at("BIJ");
  CHECK(bij.label == "FS.2.7");
  CHECK(bij.book == "FS");
  const auto dag = dag_of(store, "Dom");
  CHECK(std::find(dag.nodes.begin(), dag.nodes.end(), kPairSymbol) != dag.nodes.end());
}

TEST_CASE("lookup by label or symbol") {
  const auto store = testing::corpus_store();
  REQUIRE(store.find_id("FS.2.58"));
  CHECK(store.find_id("FS.2.58")->symbol == "FCN");
  CHECK(store.find_id("FCN")->label == "FS.2.58");
  CHECK(store.find_id("nothing") == nullptr);
  CHECK_THROWS_AS(store.at("nothing"), UnknownDefinition);
}

TEST_CASE("duplicate and forward references are rejected") {
  DefStore store;
  testing::load_into(store, {"tests/fixtures/chain5.pst"});
  auto again = parse_corpus("DEFINITION X.1: 1-ary relation P1. P1[x] \\iff x \\in x.");
  REQUIRE(again.definitions.size() == 1);
  CHECK_THROWS_AS(store.add(again.definitions[0]), DuplicateSymbol);

  SymbolTable ahead = store.symbols();
  ahead.add({"LATER", DefKind::Relation, false, 1, std::nullopt, false});
  auto forward = parse_corpus("DEFINITION X.2: 1-ary relation EARLY. EARLY[x] \\iff LATER[x].", ahead);
  REQUIRE(forward.definitions.size() == 1);
  CHECK_THROWS_AS(store.add(forward.definitions[0]), UnregisteredSymbol);
  const auto axiom = translate_definition(forward.definitions[0], ahead).axiom;
  try {
    store.add(forward.definitions[0], axiom);
    FAIL("expected ForwardReference");
  } catch (const ForwardReference& e) {
    CHECK(e.missing() == std::vector<std::string>{"LATER"});
  }
}

TEST_CASE("store JSON round trip") {
  const auto store = testing::corpus_store();
  const auto back = DefStore::from_json(store.to_json());
  CHECK(back.order() == store.order());
  for (const auto& s : store.order()) {
    const auto& a = store.at(s);
    const auto& b = back.at(s);
    CHECK(a.label == b.label);
    CHECK(a.deps == b.deps);
    CHECK(a.roles == b.roles);
    CHECK(dz::alpha_equal(a.axiom, b.axiom));
    CHECK(a.pst.has_value() == b.pst.has_value());
  }
  CHECK(back.to_json() == store.to_json());
}

TEST_CASE("axiom JSON round trip is structural") {
  const auto store = testing::corpus_store();
  for (const auto& s : store.order()) {
    const auto& ax = store.at(s).axiom;
    const auto back = dz::axiom_from_json(dz::to_json(ax));
    CHECK(dz::structurally_equal(*dz::axiom_formula(ax), *dz::axiom_formula(back)));
  }
}
