#include <doctest.h>

#include <set>

#include "../support.hpp"
#include "pst/api.hpp"

using namespace pst;

namespace {

Api fixture_api(const std::string& file) {
  DefStore store;
  testing::load_into(store, {file});
  return Api(std::move(store));
}

std::set<std::string> ids(const nlohmann::json& dag) {
  std::set<std::string> out;
  for (const auto& n : dag.at("nodes")) out.insert(n.at("id").get<std::string>());
  return out;
}

}  // namespace

TEST_CASE("chain head at radius 2") {
  const auto api = fixture_api("tests/fixtures/chain5.pst");
  const auto r = api.get("/dag/Chain.5", {{"radius", "2"}});
  REQUIRE(r.status == 200);
  CHECK(ids(r.body) == std::set<std::string>{"Chain.5", "Chain.4", "Chain.3"});
  const auto& nodes = r.body.at("nodes");
  CHECK(nodes[0].at("id") == "Chain.5");
  CHECK(nodes[0].at("frontier").is_null());
  CHECK(nodes[2].at("id") == "Chain.3");
  CHECK(nodes[2].at("frontier") == nlohmann::json{{"size", 2}, {"depth", 1}});
  CHECK(nodes[2].at("deps") == nlohmann::json{"Chain.2"});
}

TEST_CASE("a leaf is a single node") {
  const auto api = fixture_api("tests/fixtures/chain5.pst");
  const auto r = api.get("/dag/Chain.1", {{"radius", "1"}});
  REQUIRE(r.status == 200);
  REQUIRE(r.body.at("nodes").size() == 1);
  CHECK(r.body.at("nodes")[0].at("deps").empty());
  CHECK(r.body.at("nodes")[0].at("frontier").is_null());
}

TEST_CASE("frontier expansions reconstruct the whole DAG") {
  const auto api = fixture_api("tests/fixtures/diamond.pst");
  const auto& store = api.store();
  for (const auto& s : store.order()) {
    const auto whole = dag_of(store, s);
    std::set<std::string> all;
    for (const auto& n : whole.nodes) all.insert(api.id_of(n));
    for (int radius = 0; radius <= dag_depth(whole) + 1; ++radius) {
      const auto r = api.dag(api.id_of(s), std::to_string(radius));
      REQUIRE(r.status == 200);
      std::set<std::string> covered = ids(r.body);
      std::int64_t hidden_claimed = 0;
      for (const auto& n : r.body.at("nodes")) {
        if (n.at("frontier").is_null()) continue;
        hidden_claimed = std::max<std::int64_t>(hidden_claimed, n.at("frontier").at("size").get<std::int64_t>());
        for (const auto& below : dag_of(store, n.at("symbol").get<std::string>()).nodes) covered.insert(api.id_of(below));
      }
      CHECK(covered == all);
      if (radius >= dag_depth(whole)) {
        CHECK(ids(r.body) == all);
        CHECK(hidden_claimed == 0);
      }
    }
  }
}

TEST_CASE("errors") {
  const auto api = fixture_api("tests/fixtures/chain5.pst");
  CHECK(api.get("/dag/nope").status == 404);
  CHECK(api.get("/definitions/nope").status == 404);
  CHECK(api.get("/elsewhere").status == 404);
  CHECK(api.get("/dag/Chain.5", {{"radius", "-1"}}).status == 400);
  CHECK(api.get("/dag/Chain.5", {{"radius", "two"}}).status == 400);
  CHECK(api.get("/dag/Chain.5", {{"radius", ""}}).status == 400);
  CHECK(api.get("/dag/Chain.5").body.at("radius") == 1);
}

TEST_CASE("definition detail carries every form") {
  auto store = testing::corpus_store();
  const auto lex = with_defaults(parse_lexicon(testing::slurp(testing::source_path("corpus/fixture.lexicon"))));
  const Api api(std::move(store), lex);
  const auto r = api.get("/definitions/FS.2.58");
  REQUIRE(r.status == 200);
  CHECK(r.body.at("symbol") == "FCN");
  CHECK(r.body.at("dzfc_latex").get<std::string>().find("(\\iota z_{0})(\\forall y_{0})") != std::string::npos);
  CHECK(r.body.at("nl").get<std::string>().rfind("{\\bf Definition:}", 0) == 0);
  CHECK(r.body.at("summary").at("pst_depth") == 0);
  CHECK(r.body.at("summary").at("dzfc_depth") == 3);
  CHECK(r.body.at("dzfc").at("symbol") == "FCN");
  // Lookup by symbol gives the same body.
  CHECK(api.get("/definitions/FCN").body == r.body);
}

TEST_CASE("responses are deterministic") {
  const auto api = fixture_api("tests/fixtures/diamond.pst");
  for (const char* path : {"/definitions", "/stats", "/dag/Diamond.D", "/definitions/Diamond.B"}) {
    CHECK(api.get(path).body.dump() == api.get(path).body.dump());
  }
  const auto list = api.get("/definitions").body.at("definitions");
  CHECK(list.size() == 5);
  CHECK(api.get("/stats").body.at("definitions").size() == 4);
}
