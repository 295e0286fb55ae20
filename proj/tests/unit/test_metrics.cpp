#include <doctest.h>

#include <cmath>
#include <random>

#include "../support.hpp"
#include "pst/expand.hpp"
#include "pst/metrics.hpp"

using namespace pst;
using namespace pst::dz;

namespace {

TermPtr v(const char* n) { return var(n); }
FormulaPtr atom_xy() { return member(v("x"), v("y")); }

const DefStore& corpus() {
  static const DefStore s = testing::corpus_store();
  return s;
}

// Materialized expansion measured directly, the oracle for the profiler.
ExpandedMeasure materialized(const DefStore& store, const std::string& symbol, bool partial) {
  const auto opts = partial ? ExpandOptions::partial(store, 200'000) : ExpandOptions::full(200'000);
  const auto e = expand(definiens_formula(store.at(symbol)), store, opts);
  return {symbol_length(*e), quantifier_depth(*e, false), quantifier_depth(*e, true)};
}

void check_profiler_against_expansion(const DefStore& store) {
  auto full = Profiler::full(store);
  auto part = Profiler::partial(store);
  for (const auto& s : store.order()) {
    for (bool partial : {false, true}) {
      ExpandedMeasure want;
      try {
        want = materialized(store, s, partial);
      } catch (const BudgetExceeded&) {
        continue;
      }
      const auto got = (partial ? part : full).definiens(s);
      INFO(s << (partial ? " partial" : " full"));
      CHECK(got.length == want.length);
      CHECK(got.depth == want.depth);
      CHECK(got.alt_depth == want.alt_depth);
    }
  }
}

}  // namespace

TEST_CASE("saturating arithmetic") {
  CHECK(sat_add(kCountCap - 1, 1) == kCountCap);
  CHECK(sat_add(kCountCap - 1, 5) == kCountCap);
  CHECK(sat_add(kCountCap, 0) == kCountCap);
  CHECK(sat_add(3, 4) == 7);
  CHECK(sat_mul(1 << 16, 1 << 16) == kCountCap);
  CHECK(sat_mul(kCountCap, 0) == 0);
  CHECK(sat_mul(6, 7) == 42);
}

TEST_CASE("DZFC quantifier depth conventions") {
  // (∃x)(∃y) counts twice, one run.
  CHECK(quantifier_depth(*exists(std::vector<std::string>{"x", "y"}, atom_xy()), false) == 2);
  CHECK(quantifier_depth(*exists(std::vector<std::string>{"x", "y"}, atom_xy()), true) == 1);
  // ∀∃∀ alternates three times.
  auto f = forall("x", exists("y", forall("z", atom_xy())));
  CHECK(quantifier_depth(*f, false) == 3);
  CHECK(quantifier_depth(*f, true) == 3);
  // Iota does not count, but quantifiers inside it do.
  auto t = iota("y", exists("z", member(v("z"), v("y"))));
  CHECK(quantifier_depth(*equal(v("x"), t), false) == 1);
  // Siblings take the max.
  CHECK(quantifier_depth(*conj(exists("x", atom_xy()), forall(std::vector<std::string>{"x", "y", "z"}, atom_xy())), false) == 3);
  CHECK(quantifier_depth(*member(v("x"), v("y")), false) == 0);
}

TEST_CASE("PST depth of Basisgentop and FCN") {
  const auto& bgt = *corpus().at("Basisgentop").pst;
  CHECK(quantifier_depth(bgt, false) == 3);
  CHECK(quantifier_depth(bgt, true) == 2);
  const auto& fcn = corpus().at("FCN");
  CHECK(quantifier_depth(*fcn.pst, false) == 0);
  CHECK(quantifier_depth(*axiom_formula(fcn.axiom), false) == 3);
  CHECK(quantifier_depth(*axiom_formula(fcn.axiom), true) == 2);
}

TEST_CASE("profiler equals materialized expansion on the corpus and fixtures") {
  check_profiler_against_expansion(corpus());
  for (const char* f : {"tests/fixtures/chain5.pst", "tests/fixtures/diamond.pst", "tests/fixtures/synthetic.pst"}) {
    DefStore store;
    testing::load_into(store, {f});
    check_profiler_against_expansion(store);
  }
}

TEST_CASE("doubling tower saturates at 2^31 - 1") {
  DefStore store;
  testing::load_into(store, {"tests/fixtures/tower.pst"});
  auto full = Profiler::full(store);
  // T_0 = x ∈ x has length 3; each level adds one ∧ over two copies.
  std::int64_t exact = materialized(store, "T_{0}", false).length;
  for (int k = 0; k <= 40; ++k) {
    const auto name = "T_{" + std::to_string(k) + "}";
    if (k > 0) exact = 2 * exact + 1;
    const auto got = full.definiens(name).length;
    if (k <= 10) CHECK(got == materialized(store, name, false).length);
    CHECK(got == std::min(exact, kCountCap));
  }
  CHECK(full.definiens("T_{29}").length == kCountCap);
  CHECK(full.definiens("T_{28}").length < kCountCap);
}

TEST_CASE("alternating depth never exceeds depth on random formulas") {
  std::mt19937 rng(7);
  std::function<FormulaPtr(int)> gen = [&](int budget) -> FormulaPtr {
    const int pick = budget <= 0 ? 0 : static_cast<int>(rng() % 6);
    switch (pick) {
      case 0: return atom_xy();
      case 1: return neg(gen(budget - 1));
      case 2: return conj(gen(budget / 2), gen(budget / 2));
      case 3: return forall("x", gen(budget - 1));
      case 4: return exists("y", gen(budget - 1));
      default: return equal(v("x"), iota("z", gen(budget - 1)));
    }
  };
  for (int i = 0; i < 2000; ++i) {
    const auto f = gen(12);
    CHECK(quantifier_depth(*f, true) <= quantifier_depth(*f, false));
  }
}

TEST_CASE("synthetic report: hand-checked depths and means") {
  DefStore store;
  testing::load_into(store, {"tests/fixtures/synthetic.pst"});
  const auto report = corpus_report(store);
  REQUIRE(report.rows.size() == 3);
  // Q0 has no quantifiers; Q1 is ∀∃; Q2 is (∀a,b ∈ x) over Q1 and Q0.
  CHECK(report.rows[1].pst.depth == 2);
  CHECK(report.rows[1].pst.alt_depth == 2);
  CHECK(report.rows[2].pst.depth == 2);
  CHECK(report.rows[2].pst.alt_depth == 1);
  CHECK(report.rows[2].full.depth == 4);
  CHECK(report.rows[2].full.alt_depth == 2);
  CHECK(report.rows[2].dag_size == 3);
  CHECK(report.rows[2].dag_depth == 1);
  const auto& all = report.groups.at("All");
  CHECK(all.at("pst_depth").mean == doctest::Approx(4.0 / 3).epsilon(1e-9));
  CHECK(all.at("pst_alt_depth").mean == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(all.at("full_depth").mean == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(all.at("full_alt_depth").mean == doctest::Approx(4.0 / 3).epsilon(1e-9));
  CHECK(all.at("full_depth").max == 4);
  CHECK(report.pst_histogram.at(2) == std::make_pair<std::int64_t, std::int64_t>(2, 1));
  const auto text = report.to_text();
  CHECK(text.find("Quantifier depths") != std::string::npos);
  CHECK(text.find("1.33") != std::string::npos);
  const auto j = report.to_json();
  CHECK(j.at("definitions").size() == 3);
  CHECK(j.at("definitions")[2].at("full_depth") == 4);
}
