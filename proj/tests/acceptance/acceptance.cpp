// One line per acceptance criterion; nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "../support.hpp"
#include "pst/expand.hpp"
#include "pst/lexicon.hpp"
#include "pst/metrics.hpp"
#include "pst/nl.hpp"
#include "pst/render.hpp"
#include "pst/translator.hpp"

using namespace pst;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int digits = 3) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << v;
  return os.str();
}

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  if (!out.ok) ++failures;
  std::cout << (out.ok ? "PASS" : "FAIL") << " [" << id << "] " << name;
  if (!out.detail.empty()) std::cout << " -- " << out.detail;
  std::cout << "\n";
}

dz::TermPtr v(const char* n) { return dz::var(n); }
dz::TermPtr pair(dz::TermPtr a, dz::TermPtr b) { return dz::fun(kPairSymbol, {std::move(a), std::move(b)}); }
std::vector<std::string> names(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

dz::DefiningAxiom axiom(std::string symbol, dz::AxiomKind kind, std::vector<std::string> params, dz::TermPtr term,
                        dz::FormulaPtr formula) {
  dz::DefiningAxiom ax;
  ax.symbol = std::move(symbol);
  ax.kind = kind;
  ax.params = std::move(params);
  ax.term = std::move(term);
  ax.formula = std::move(formula);
  return ax;
}

// The three printed DZFC translations, transcribed as trees.
std::map<std::string, dz::DefiningAxiom> printed_translations() {
  using namespace dz;
  std::map<std::string, DefiningAxiom> out;
  auto inner = iota("x_{0}", exists(names({"Y", "T'"}),
                                    conj(equal(v("x_{0}"), pair(v("Y"), v("T'"))),
                                         conj(rel("COMPACTIFICATION", {v("Y"), v("T'"), v("X"), v("T")}),
                                              rel("\\approx_{C}", {fun("\\backslash", {v("Y"), v("X")}),
                                                                   fun("1_{N}")})))));
  out["Oneptcompactification"] =
      axiom("Oneptcompactification", AxiomKind::Function, {"X", "T"},
            iota("y_{0}", conj(rel("TOPSP", {v("X"), v("T")}), pequal(v("y_{0}"), inner))), nullptr);
  auto value = iota("x_{0}", member(pair(v("x"), v("x_{0}")), v("f")));
  auto graph = iota("z_{0}", forall("y_{0}", iff(member(v("y_{0}"), v("z_{0}")),
                                                 exists(names({"x", "y"}), conj(equal(v("y_{0}"), pair(v("x"), v("y"))),
                                                                                equal(value, v("y")))))));
  out["FCN"] = axiom("FCN", AxiomKind::Relation, {"f"}, nullptr, equal(v("f"), graph));
  auto lam = iota("z_{0}", forall("y_{0}", iff(member(v("y_{0}"), v("z_{0}")),
                                               exists(names({"b", "x_{0}"}),
                                                      conj(conj(equal(v("y_{0}"), pair(v("b"), v("x_{0}"))),
                                                                equal(v("x_{0}"), v("A"))),
                                                           member(v("b"), v("B")))))));
  out["Cartespow"] = axiom("Cartespow", AxiomKind::Function, {"A", "B"}, fun("Cartesprod", {lam, v("B")}), nullptr);
  return out;
}

const char* kBasisgentopText = R"({\bf Definition:} If $\mathscr{B}$ is a basis for a topology on $X$
then \emph{the topology on $X$ generated by $\mathscr{B}$} is the
unique $\mathscr{T}$ $\subseteq$ $\wp(X)$ such that for every $U$
$\subseteq$ $X$, $U$ $\in$ $\mathscr{T}$ if and only if for every $x$
$\in$ $U$, there exists $B$ $\in$ $\mathscr{B}$ such that $x$ $\in$
$B$ and $B$ $\subseteq$ $U$.)";

const char* kFinertopText = R"({\bf Definition:} If $(X,\mathscr{T})$ and $(X,\mathscr{T}')$ are
topological spaces then $\mathscr{T}'$ is \emph{finer} than
$\mathscr{T}$ on $X$ if and only if $\mathscr{T}'$ $\supseteq$
$\mathscr{T}$.)";

const char* kKrealtopText = R"({\bf Definition:} \emph{The K-topology on $\mathbb{R}$} is the
topology on $\mathbb{R}$ generated by the standard basis for a
topology on $\mathbb{R}$ union the set of $V$ $\subseteq$ $\mathbb{R}$
such that there exists $W$ in the standard basis for a topology on
$\mathbb{R}$ such that $V$ $=$ $W$ $\backslash$ $\set{1 / n : n \in
  \mathbb{N}}$.)";

Outcome golden_translations() {
  Outcome o;
  const auto start = Clock::now();
  DefStore store;
  testing::load_into(store, {"corpus/foundations.pst"});
  auto parsed = parse_corpus(testing::slurp(testing::source_path("corpus/appendixA.pst")), store.symbols());
  o.require(parsed.errors.empty() && parsed.definitions.size() == 3, "golden inputs did not parse");
  const auto expected = printed_translations();
  for (const auto& d : parsed.definitions) {
    const auto got = translate_definition(d, parsed.symbols).axiom;
    o.require(dz::alpha_equal(got, expected.at(d.symbol)), d.symbol + " differs");
  }
  const double t = seconds_since(start);
  o.require(t < 1.0, "took " + fmt(t) + " s");
  if (o.ok) o.detail = "3/3 alpha-equal in " + fmt(t) + " s";
  return o;
}

Outcome golden_nl() {
  Outcome o;
  const auto store = testing::corpus_store();
  const auto start = Clock::now();
  const auto lex = with_defaults(parse_lexicon(testing::slurp(testing::source_path("corpus/fixture.lexicon"))));
  const std::map<std::string, const char*> goldens = {
      {"Basisgentop", kBasisgentopText}, {"FINERTOP", kFinertopText}, {"Krealtop", kKrealtopText}};
  int matched = 0;
  for (const auto& [symbol, text] : goldens) {
    const auto got = render_nl(*store.at(symbol).pst, lex, store.symbols());
    if (testing::squash(got) == testing::squash(text)) {
      ++matched;
    } else {
      o.require(false, symbol + " got: " + testing::squash(got));
    }
  }
  const double t = seconds_since(start);
  o.require(t < 1.0, "took " + fmt(t) + " s");
  if (o.ok) o.detail = std::to_string(matched) + "/3 exact modulo whitespace in " + fmt(t) + " s";
  return o;
}

Outcome lexicon_format() {
  Outcome o;
  const auto lex = parse_lexicon(
      "\\wp:1@\n  symb:$\\wp(#^0)$@\n  word:the power set of #0@@\n"
      "Stdrealtop:0@\n  word:the standard topology on $\\mathbb{R}$@@\n");
  const auto* wp = lex.find("\\wp");
  const auto* top = lex.find("Stdrealtop");
  o.require(lex.size() == 2 && wp && top, "entries missing");
  if (!o.ok) return o;
  o.require(wp->arity == 1 && !wp->infix, "wp header");
  o.require(wp->clauses == std::map<std::string, std::string>{{"symb", "$\\wp(#^0)$"}, {"word", "the power set of #0"}},
            "wp clauses");
  o.require(top->arity == 0, "Stdrealtop header");
  o.require(top->clauses == std::map<std::string, std::string>{{"word", "the standard topology on $\\mathbb{R}$"}},
            "Stdrealtop clauses");
  if (o.ok) o.detail = "\\wp {symb, word}; Stdrealtop {word}";
  return o;
}

Outcome depth_pipeline() {
  Outcome o;
  const auto store = testing::corpus_store();
  const auto& fcn = store.at("FCN");
  const auto fcn_pst = quantifier_depth(*fcn.pst, false);
  const auto fcn_dz = quantifier_depth(*dz::axiom_formula(fcn.axiom), false);
  o.require(fcn_pst == 0, "FCN PST depth " + std::to_string(fcn_pst));
  o.require(fcn_dz > 0, "FCN DZFC depth " + std::to_string(fcn_dz));
  const auto& bgt = *store.at("Basisgentop").pst;
  const auto bd = quantifier_depth(bgt, false), ba = quantifier_depth(bgt, true);
  o.require(bd == 3 && ba == 2, "Basisgentop " + std::to_string(bd) + "/" + std::to_string(ba));

  // Synthetic corpus: the report's means against a direct recomputation.
  DefStore syn;
  testing::load_into(syn, {"tests/fixtures/synthetic.pst", "tests/fixtures/chain5.pst", "tests/fixtures/diamond.pst",
                           "tests/fixtures/deep.pst"});
  const auto rep = corpus_report(syn);
  double worst = 0;
  auto full = Profiler::full(syn);
  auto part = Profiler::partial(syn);
  std::map<std::string, std::vector<double>> cols;
  for (const auto& s : syn.order()) {
    const auto& n = syn.at(s);
    if (n.builtin) continue;
    const auto ax = dz::axiom_formula(n.axiom);
    const auto f = full.definiens(s), p = part.definiens(s);
    const auto dag = dag_of(syn, s);
    cols["pst_depth"].push_back(static_cast<double>(quantifier_depth(*n.pst, false)));
    cols["pst_alt_depth"].push_back(static_cast<double>(quantifier_depth(*n.pst, true)));
    cols["dzfc_depth"].push_back(static_cast<double>(quantifier_depth(*ax, false)));
    cols["dzfc_alt_depth"].push_back(static_cast<double>(quantifier_depth(*ax, true)));
    cols["full_depth"].push_back(static_cast<double>(f.depth));
    cols["full_alt_depth"].push_back(static_cast<double>(f.alt_depth));
    cols["partial_depth"].push_back(static_cast<double>(p.depth));
    cols["partial_alt_depth"].push_back(static_cast<double>(p.alt_depth));
    cols["dag_size"].push_back(static_cast<double>(dag_size(dag)));
    cols["dag_depth"].push_back(static_cast<double>(dag_depth(dag)));
  }
  for (const auto& [c, xs] : cols) {
    double sum = 0;
    for (double x : xs) sum += x;
    worst = std::max(worst, std::abs(sum / static_cast<double>(xs.size()) - rep.groups.at("All").at(c).mean));
  }
  o.require(worst <= 0.005, "mean error " + fmt(worst, 6));
  const auto text = rep.to_text();
  for (const char* heading : {"DAG sizes and depths", "Quantifier depths", "Quantifier depth frequencies in PST"}) {
    o.require(text.find(heading) != std::string::npos, std::string("missing table: ") + heading);
  }
  if (o.ok) {
    o.detail = "FCN PST 0 / DZFC " + std::to_string(fcn_dz) + "; Basisgentop 3/2; max mean error " + fmt(worst, 6) +
               " over " + std::to_string(rep.rows.size()) + " definitions";
  }
  return o;
}

Outcome expansion_properties() {
  Outcome o;
  // (a) profiler against materialized expansion on every fixture below 10^5 symbols.
  int compared = 0;
  for (const auto& files : std::vector<std::vector<std::string>>{
           testing::corpus_files(), {"tests/fixtures/chain5.pst"}, {"tests/fixtures/diamond.pst"},
           {"tests/fixtures/synthetic.pst"}, {"tests/fixtures/tower.pst"}, {"tests/fixtures/deep.pst"}}) {
    DefStore store;
    testing::load_into(store, files);
    auto full = Profiler::full(store);
    auto part = Profiler::partial(store);
    for (const auto& s : store.order()) {
      for (bool partial : {false, true}) {
        auto& prof = partial ? part : full;
        const auto want = prof.definiens(s);
        if (want.length >= 100'000) continue;
        const auto e = expand(definiens_formula(store.at(s)), store,
                              partial ? ExpandOptions::partial(store, 100'000) : ExpandOptions::full(100'000));
        ++compared;
        o.require(dz::symbol_length(*e) == want.length && quantifier_depth(*e, false) == want.depth &&
                      quantifier_depth(*e, true) == want.alt_depth,
                  "(a) " + s);
      }
    }
  }
  // (b) alternating depth never exceeds depth.
  std::mt19937 rng(20261019);
  std::function<dz::FormulaPtr(int)> gen = [&](int budget) -> dz::FormulaPtr {
    const int pick = budget <= 0 ? 0 : static_cast<int>(rng() % 7);
    switch (pick) {
      case 0: return dz::member(v("x"), v("y"));
      case 1: return dz::neg(gen(budget - 1));
      case 2: return dz::conj(gen(budget / 2), gen(budget / 2));
      case 3: return dz::implies(gen(budget / 2), gen(budget / 2));
      case 4: return dz::forall("x", gen(budget - 1));
      case 5: return dz::exists("y", gen(budget - 1));
      default: return dz::equal(v("x"), dz::iota("z", gen(budget - 1)));
    }
  };
  int violations = 0;
  for (int i = 0; i < 10'000; ++i) {
    const auto f = gen(16);
    if (quantifier_depth(*f, true) > quantifier_depth(*f, false)) ++violations;
  }
  o.require(violations == 0, "(b) " + std::to_string(violations) + " violations");
  // (c) the doubling tower saturates exactly at the cap.
  DefStore tower;
  testing::load_into(tower, {"tests/fixtures/tower.pst"});
  auto tp = Profiler::full(tower);
  int first_capped = -1;
  for (int k = 0; k <= 40; ++k) {
    if (tp.definiens("T_{" + std::to_string(k) + "}").length == kCountCap) {
      first_capped = k;
      break;
    }
  }
  // Lengths follow L_0 = 3, L_{k+1} = 2 L_k + 1, i.e. 2^{k+2} - 1, which first reaches 2^31 - 1 at k = 29.
  o.require(first_capped == 29, "(c) first capped level " + std::to_string(first_capped));
  o.require(tp.definiens("T_{40}").length == kCountCap, "(c) T_40 not capped");
  // (d) deep fixture blowup.
  DefStore deep;
  testing::load_into(deep, {"tests/fixtures/deep.pst"});
  const auto top = deep.order().back();
  const auto unexpanded = dz::symbol_length(*definiens_formula(deep.at(top)));
  const auto expanded = Profiler::full(deep).definiens(top).length;
  const double ratio = static_cast<double>(expanded) / static_cast<double>(unexpanded);
  o.require(ratio >= 1e4, "(d) ratio " + fmt(ratio, 1));
  if (o.ok) {
    o.detail = "(a) " + std::to_string(compared) + " exact; (b) 0/10000; (c) cap at T_29 = 2^31-1; (d) " + top + " " +
               std::to_string(expanded) + "/" + std::to_string(unexpanded) + " = " + fmt(ratio, 0) + "x";
  }
  return o;
}

Outcome round_trip() {
  Outcome o;
  DefStore store;
  int n = 0;
  for (const auto& file : testing::corpus_files()) {
    auto parsed = parse_corpus(testing::slurp(testing::source_path(file)), store.symbols());
    o.require(parsed.errors.empty(), file + " has parse errors");
    for (std::size_t i = 0; i < parsed.definitions.size(); ++i) {
      const auto& d = parsed.definitions[i];
      const auto again = parse_corpus(render_latex(d, store.symbols()), store.symbols());
      const bool same = again.errors.empty() && again.definitions.size() == 1 &&
                        structurally_equal(again.definitions[0], d);
      o.require(same, d.label);
      store.add(d, parsed.sources[i]);
      ++n;
    }
  }
  o.require(n >= 30, "only " + std::to_string(n) + " definitions");
  if (o.ok) o.detail = std::to_string(n) + "/" + std::to_string(n) + " definitions";
  return o;
}

// A relation whose body has at least `tokens` tokens, mixing connectives,
// quantifiers and set-builders.
std::string generated_definition(std::size_t tokens) {
  const std::string head = "DEFINITION G.1: 1-ary relation R. R[x] \\iff x \\in x";
  const std::vector<std::string> pieces = {" \\vee x \\in x", " \\wedge (\\exists y)(y \\in x)",
                                           " \\rightarrow x = {z : z \\in x}"};
  std::vector<std::size_t> cost;
  for (const auto& p : pieces) cost.push_back(tokenize(p).size());
  std::string src = head;
  std::size_t count = tokenize(head).size() + 1;
  for (std::size_t i = 0; count < tokens; ++i) {
    src += pieces[i % pieces.size()];
    count += cost[i % pieces.size()];
  }
  return src + ".";
}

Outcome performance() {
  Outcome o;
  // A dozen large definitions: the twelve longest corpus sources.
  const auto store = testing::corpus_store();
  std::vector<std::pair<std::size_t, std::string>> by_size;
  for (const auto& s : store.order()) {
    const auto& n = store.at(s);
    if (!n.builtin) by_size.push_back({n.source.size(), s});
  }
  std::sort(by_size.rbegin(), by_size.rend());
  std::string file;
  SymbolTable symbols = store.symbols();
  std::set<std::string> chosen;
  for (std::size_t i = 0; i < 12 && i < by_size.size(); ++i) chosen.insert(by_size[i].second);
  for (const auto& s : store.order()) {
    if (chosen.count(s)) file += store.at(s).source + "\n";
  }
  // Re-register nothing: parse the dozen against a table that lacks them.
  SymbolTable base;
  for (const auto& [name, info] : symbols.all()) {
    if (!chosen.count(name)) base.add(info);
  }
  const auto start = Clock::now();
  auto parsed = parse_corpus(file, base);
  for (const auto& d : parsed.definitions) translate_definition(d, parsed.symbols);
  const double t = seconds_since(start);
  o.require(parsed.errors.empty() && parsed.definitions.size() == 12, "dozen did not parse");
  o.require(t < 10.0, "dozen took " + fmt(t) + " s");

  // Parser scaling: Earley item counts against a least-squares quadratic.
  const std::vector<std::size_t> sizes = {100, 200, 500, 1000, 2000, 5000, 10000};
  std::vector<double> xs, ys, times;
  for (auto n : sizes) {
    const auto src = generated_definition(n);
    const auto tokens = tokenize(src).size();
    const auto t0 = Clock::now();
    auto r = parse_corpus(src);
    times.push_back(seconds_since(t0));
    o.require(r.errors.empty(), "generated input failed at n=" + std::to_string(n));
    xs.push_back(static_cast<double>(tokens));
    ys.push_back(static_cast<double>(last_earley_item_count()));
  }
  // Normal equations for y = a + b x + c x^2.
  double s[5] = {0, 0, 0, 0, 0}, t3[3] = {0, 0, 0};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double p = 1;
    for (int k = 0; k < 5; ++k) {
      s[k] += p;
      if (k < 3) t3[k] += p * ys[i];
      p *= xs[i];
    }
  }
  double m[3][4] = {{s[0], s[1], s[2], t3[0]}, {s[1], s[2], s[3], t3[1]}, {s[2], s[3], s[4], t3[2]}};
  for (int c = 0; c < 3; ++c) {
    for (int r = c + 1; r < 3; ++r) {
      const double f = m[r][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  double coef[3];
  for (int r = 2; r >= 0; --r) {
    double acc = m[r][3];
    for (int k = r + 1; k < 3; ++k) acc -= m[r][k] * coef[k];
    coef[r] = acc / m[r][r];
  }
  double worst = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double fit = coef[0] + coef[1] * xs[i] + coef[2] * xs[i] * xs[i];
    const double r = fit > 0 ? std::max(ys[i] / fit, fit / ys[i]) : INFINITY;
    worst = std::max(worst, r);
  }
  o.require(worst <= 2.0, "fit ratio " + fmt(worst));
  if (o.ok) {
    o.detail = "dozen in " + fmt(t) + " s; items within " + fmt(worst) + "x of quadratic fit over n=" +
               std::to_string(static_cast<int>(xs.front())) + ".." + std::to_string(static_cast<int>(xs.back())) +
               " (n=10^4 parsed in " + fmt(times.back()) + " s)";
  }
  return o;
}

Outcome dag_metrics() {
  Outcome o;
  DefStore chain;
  testing::load_into(chain, {"tests/fixtures/chain5.pst"});
  for (int k = 1; k <= 5; ++k) {
    const auto d = dag_of(chain, "P" + std::to_string(k));
    o.require(dag_size(d) == static_cast<std::size_t>(k) && dag_depth(d) == k - 1, "chain P" + std::to_string(k));
  }
  DefStore diamond;
  testing::load_into(diamond, {"tests/fixtures/diamond.pst"});
  const auto dd = dag_of(diamond, "D");
  o.require(dag_size(dd) == 4 && dag_depth(dd) == 2, "diamond");

  // Random DAGs: each relation uses a random subset of earlier ones.
  std::mt19937 rng(42);
  int graphs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<std::vector<int>> uses(n);
    std::string src;
    for (int i = 0; i < n; ++i) {
      std::string body = "x \\in x";
      for (int j = 0; j < i; ++j) {
        if (rng() % 3 == 0) {
          uses[i].push_back(j);
          body += " \\wedge N_{" + std::to_string(j) + "}[x]";
        }
      }
      src += "DEFINITION Rand." + std::to_string(i) + ": 1-ary relation N_{" + std::to_string(i) + "}. N_{" +
             std::to_string(i) + "}[x] \\iff " + body + ".\n";
    }
    DefStore store;
    auto parsed = parse_corpus(src, store.symbols());
    for (const auto& d : parsed.definitions) store.add(d);
    for (int root = 0; root < n; ++root) {
      // Exhaustive enumeration of every path from the root.
      std::set<int> seen;
      int longest = 0;
      std::function<void(int, int)> walk = [&](int node, int len) {
        seen.insert(node);
        longest = std::max(longest, len);
        for (int next : uses[node]) walk(next, len + 1);
      };
      walk(root, 0);
      const auto dag = dag_of(store, "N_{" + std::to_string(root) + "}");
      o.require(dag_size(dag) == seen.size() && dag_depth(dag) == longest,
                "random trial " + std::to_string(trial) + " root " + std::to_string(root));
    }
    ++graphs;
  }
  if (o.ok) o.detail = "chain 1..5, diamond 4/2, " + std::to_string(graphs) + " random DAGs";
  return o;
}

}  // namespace

int main() {
  report(1, "golden DZFC translations", golden_translations);
  report(2, "golden natural-language paragraphs", golden_nl);
  report(3, "lexicon format blocks", lexicon_format);
  report(4, "quantifier-depth pipeline and report means", depth_pipeline);
  report(5, "expansion profile properties (a)-(d)", expansion_properties);
  report(6, "parse/render_latex/parse round trip", round_trip);
  report(7, "performance and parser scaling", performance);
  report(8, "DAG size and depth", dag_metrics);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
