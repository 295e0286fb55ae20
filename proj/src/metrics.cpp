#include "pst/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "pst/expand.hpp"
#include "pst/saturating.hpp"

namespace pst {

namespace {

using Alt = Profiler::Alt;
using K = dz::Formula::Kind;

constexpr int kNone = 0, kExists = 1, kForall = 2;

struct Depth {
  std::int64_t depth = 0;
  Alt alt{};
};

void merge(Depth& into, const Depth& d) {
  into.depth = std::max(into.depth, d.depth);
  for (int k = 0; k < 3; ++k) into.alt[k] = std::max(into.alt[k], d.alt[k]);
}

// `count` like binders of kind q over a body.
Depth under(int q, std::int64_t count, const Depth& body) {
  Depth d;
  d.depth = sat_add(count, body.depth);
  for (int k = 0; k < 3; ++k) d.alt[k] = sat_add(k != q ? 1 : 0, body.alt[q]);
  return d;
}

Depth dz_depth(const dz::Formula& f);

Depth dz_depth(const dz::Term& t) {
  Depth d;
  if (t.kind == dz::Term::Kind::Iota) return dz_depth(*t.body);
  for (const auto& a : t.args) merge(d, dz_depth(*a));
  return d;
}

Depth dz_depth(const dz::Formula& f) {
  Depth d;
  if (f.is_atom()) {
    for (const auto& a : f.args) merge(d, dz_depth(*a));
  } else if (f.is_quantifier()) {
    d = under(f.kind == K::Exists ? kExists : kForall, 1, dz_depth(*f.left));
  } else {
    d = dz_depth(*f.left);
    if (f.right) merge(d, dz_depth(*f.right));
  }
  return d;
}

Depth pst_depth(const PstFormula& f);

Depth pst_depth(const PstTerm& t) {
  Depth d;
  auto add = [&](const auto& x) {
    if (x) merge(d, pst_depth(*x));
  };
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PstTerm::FunApp> || std::is_same_v<T, PstTerm::SetApp>) {
          if constexpr (std::is_same_v<T, PstTerm::SetApp>) add(x.fun);
          for (const auto& a : x.args) add(a);
        } else if constexpr (std::is_same_v<T, PstTerm::InfixFunApp>) {
          add(x.left);
          add(x.right);
        } else if constexpr (std::is_same_v<T, PstTerm::Tuple> || std::is_same_v<T, PstTerm::FiniteSet>) {
          for (const auto& a : x.elements) add(a);
        } else if constexpr (std::is_same_v<T, PstTerm::SetBuilder>) {
          add(x.body);
          if (x.bound) add(x.bound->term);
          add(x.condition);
        } else if constexpr (std::is_same_v<T, PstTerm::Lambda>) {
          if (x.bound) add(x.bound->term);
          add(x.body);
        } else if constexpr (std::is_same_v<T, PstTerm::Iota>) {
          if (x.bound) add(x.bound->term);
          add(x.condition);
        }
      },
      t.node);
  return d;
}

Depth pst_depth(const PstFormula& f) {
  Depth d;
  auto add = [&](const auto& x) {
    if (x) merge(d, pst_depth(*x));
  };
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PstFormula::RelApp>) {
          for (const auto& a : x.args) add(a);
        } else if constexpr (std::is_same_v<T, PstFormula::InfixRelChain>) {
          for (const auto& a : x.terms) add(a);
        } else if constexpr (std::is_same_v<T, PstFormula::MultiMembership>) {
          for (const auto& a : x.terms) add(a);
          add(x.bound);
        } else if constexpr (std::is_same_v<T, PstFormula::Equal> || std::is_same_v<T, PstFormula::PartialEqual>) {
          add(x.left);
          add(x.right);
        } else if constexpr (std::is_same_v<T, PstFormula::Defined> || std::is_same_v<T, PstFormula::Undefined>) {
          add(x.term);
        } else if constexpr (std::is_same_v<T, PstFormula::SetRelApp>) {
          add(x.relation);
          add(x.left);
          add(x.right);
        } else if constexpr (std::is_same_v<T, PstFormula::Not>) {
          add(x.body);
        } else if constexpr (std::is_same_v<T, PstFormula::Binary>) {
          add(x.left);
          add(x.right);
        } else if constexpr (std::is_same_v<T, PstFormula::Quantified>) {
          if (x.bound) add(x.bound->term);
          const int q = x.kind == Quantifier::Exists ? kExists : kForall;
          merge(d, under(q, static_cast<std::int64_t>(x.vars.size()), pst_depth(*x.body)));
        }
      },
      f.node);
  return d;
}

std::int64_t pick(const Depth& d, bool alternating) { return alternating ? d.alt[kNone] : d.depth; }

}  // namespace

std::int64_t quantifier_depth(const dz::Formula& f, bool alternating) { return pick(dz_depth(f), alternating); }
std::int64_t quantifier_depth(const dz::Term& t, bool alternating) { return pick(dz_depth(t), alternating); }
std::int64_t quantifier_depth(const PstFormula& f, bool alternating) { return pick(pst_depth(f), alternating); }
std::int64_t quantifier_depth(const PstTerm& t, bool alternating) { return pick(pst_depth(t), alternating); }

std::int64_t quantifier_depth(const PstDefinition& def, bool alternating) {
  Depth d;
  for (const auto& c : def.clauses) {
    if (c.guard) merge(d, pst_depth(**c.guard));
    if (auto* t = std::get_if<PstTermPtr>(&c.body)) merge(d, pst_depth(**t));
    if (auto* f = std::get_if<PstFormulaPtr>(&c.body)) merge(d, pst_depth(**f));
  }
  return pick(d, alternating);
}

// ---------------------------------------------------------------------------
// Profiler

bool Profiler::Measure::operator<(const Measure& o) const {
  return std::tie(length, depth, alt) < std::tie(o.length, o.depth, o.alt);
}

bool Profiler::Summary::operator<(const Summary& o) const {
  return std::tie(length, occ, delta, alpha, iota_depth, iota_alt) <
         std::tie(o.length, o.occ, o.delta, o.alpha, o.iota_depth, o.iota_alt);
}

Profiler::Profiler(const DefStore& store, std::set<std::string> protected_symbols)
    : store_(store), protected_(std::move(protected_symbols)) {}

bool Profiler::unfolds(const std::string& symbol) const { return !protected_.count(symbol); }

ExpandedMeasure Profiler::measure(const dz::Formula& f) {
  const Measure m = formula(f, {});
  return {m.length, m.depth, m.alt[kNone]};
}

ExpandedMeasure Profiler::definiens(const std::string& symbol) {
  return measure(*definiens_formula(store_.at(symbol)));
}

Profiler::Measure Profiler::formula(const dz::Formula& f, const Env& env) {
  if (f.is_atom()) {
    if (f.kind == K::RelApp && unfolds(f.name)) {
      std::vector<Summary> args;
      for (const auto& a : f.args) args.push_back(term(*a, env));
      return relation(f.name, std::move(args));
    }
    return atom(f.args, env);
  }
  if (f.is_quantifier()) {
    Env inner = env;
    inner.erase(f.name);
    const Measure b = formula(*f.left, inner);
    const int q = f.kind == K::Exists ? kExists : kForall;
    Measure m;
    m.length = sat_add(2, b.length);
    m.depth = sat_add(1, b.depth);
    for (int k = 0; k < 3; ++k) m.alt[k] = sat_add(k != q ? 1 : 0, b.alt[q]);
    return m;
  }
  Measure m = formula(*f.left, env);
  m.length = sat_add(m.length, 1);
  if (f.right) {
    const Measure r = formula(*f.right, env);
    m.length = sat_add(m.length, r.length);
    m.depth = std::max(m.depth, r.depth);
    for (int k = 0; k < 3; ++k) m.alt[k] = std::max(m.alt[k], r.alt[k]);
  }
  return m;
}

namespace {

// Folds argument summaries left to right, as they occur in pre-order.
struct Fold {
  std::int64_t length = 0, occ = 0, delta = 0, alpha = 0, iota_depth = 0;
  Alt iota_alt{};

  void add(const Profiler::Summary& s) {
    length = sat_add(length, s.length);
    if (s.occ > 0) delta = std::max(delta, sat_add(occ, s.delta));
    occ = sat_add(occ, s.occ);
    alpha = std::max(alpha, s.alpha);
    iota_depth = std::max(iota_depth, s.iota_depth);
    for (int k = 0; k < 3; ++k) iota_alt[k] = std::max(iota_alt[k], s.iota_alt[k]);
  }
};

}  // namespace

Profiler::Measure Profiler::atom(const std::vector<dz::TermPtr>& args, const Env& env) {
  Fold fold;
  for (const auto& a : args) fold.add(term(*a, env));
  Measure m;
  m.length = sat_add(1, fold.length);
  if (fold.occ == 0) {
    m.depth = fold.iota_depth;
    m.alt = fold.iota_alt;
  } else {
    m.depth = std::max(fold.delta, sat_add(fold.occ, fold.iota_depth));
    const std::int64_t below = std::max(fold.alpha, fold.iota_alt[kExists]);
    for (int k = 0; k < 3; ++k) m.alt[k] = sat_add(k != kExists ? 1 : 0, below);
  }
  return m;
}

Profiler::Summary Profiler::term(const dz::Term& t, const Env& env) {
  Summary s;
  switch (t.kind) {
    case dz::Term::Kind::Var: {
      auto it = env.find(t.name);
      if (it != env.end()) return it->second;
      s.length = 1;
      return s;
    }
    case dz::Term::Kind::Iota: {
      Env inner = env;
      inner.erase(t.name);
      const Measure b = formula(*t.body, inner);
      s.length = sat_add(2, b.length);
      s.iota_depth = b.depth;
      s.iota_alt = b.alt;
      return s;
    }
    case dz::Term::Kind::FunApp:
      break;
  }
  std::vector<Summary> args;
  for (const auto& a : t.args) args.push_back(term(*a, env));
  if (unfolds(t.name)) {
    // ∃v(v ≃ body ∧ ...): the wrapper body is the atom v ≃ body[args].
    const Summary body = application(t.name, std::move(args));
    Summary v;
    v.length = 1;
    Fold fold;
    fold.add(v);
    fold.add(body);
    Measure e;
    e.length = sat_add(1, fold.length);
    if (fold.occ == 0) {
      e.depth = fold.iota_depth;
      e.alt = fold.iota_alt;
    } else {
      e.depth = std::max(fold.delta, sat_add(fold.occ, fold.iota_depth));
      const std::int64_t below = std::max(fold.alpha, fold.iota_alt[kExists]);
      for (int k = 0; k < 3; ++k) e.alt[k] = sat_add(k != kExists ? 1 : 0, below);
    }
    s.length = sat_add(4, e.length);  // ∃, v, ∧ and the residual variable
    s.occ = 1;
    s.delta = sat_add(1, e.depth);
    s.alpha = e.alt[kExists];
    return s;
  }
  Fold fold;
  for (const auto& a : args) fold.add(a);
  s.length = sat_add(1, fold.length);
  s.occ = fold.occ;
  s.delta = fold.delta;
  s.alpha = fold.alpha;
  s.iota_depth = fold.iota_depth;
  s.iota_alt = fold.iota_alt;
  return s;
}

Profiler::Summary Profiler::application(const std::string& symbol, std::vector<Summary> args) {
  auto key = std::make_pair(symbol, std::move(args));
  if (auto it = fun_memo_.find(key); it != fun_memo_.end()) return it->second;
  const DefNode& node = store_.at(symbol);
  Env env;
  for (std::size_t i = 0; i < node.axiom.params.size(); ++i) env[node.axiom.params[i]] = key.second[i];
  const Summary s = term(*node.axiom.term, env);
  fun_memo_.emplace(std::move(key), s);
  return s;
}

Profiler::Measure Profiler::relation(const std::string& symbol, std::vector<Summary> args) {
  auto key = std::make_pair(symbol, std::move(args));
  if (auto it = rel_memo_.find(key); it != rel_memo_.end()) return it->second;
  const DefNode& node = store_.at(symbol);
  Env env;
  for (std::size_t i = 0; i < node.axiom.params.size(); ++i) env[node.axiom.params[i]] = key.second[i];
  const Measure m = formula(*node.axiom.formula, env);
  rel_memo_.emplace(std::move(key), m);
  return m;
}

// ---------------------------------------------------------------------------
// Report

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols = {
      "dag_size",      "dag_depth",     "pst_depth",  "pst_alt_depth",  "dzfc_depth",     "dzfc_alt_depth",
      "full_depth",    "full_alt_depth", "partial_depth", "partial_alt_depth", "dzfc_length", "full_length",
      "partial_length"};
  return cols;
}

namespace {

std::int64_t column(const DefinitionMetrics& m, const std::string& c) {
  if (c == "dag_size") return m.dag_size;
  if (c == "dag_depth") return m.dag_depth;
  if (c == "pst_depth") return m.pst.depth;
  if (c == "pst_alt_depth") return m.pst.alt_depth;
  if (c == "dzfc_depth") return m.dzfc.depth;
  if (c == "dzfc_alt_depth") return m.dzfc.alt_depth;
  if (c == "full_depth") return m.full.depth;
  if (c == "full_alt_depth") return m.full.alt_depth;
  if (c == "partial_depth") return m.partial.depth;
  if (c == "partial_alt_depth") return m.partial.alt_depth;
  if (c == "dzfc_length") return m.dzfc_length;
  if (c == "full_length") return m.full_length;
  return m.partial_length;
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

DefinitionMetrics measure_definition(const DefStore& store, const std::string& symbol, Profiler& full,
                                     Profiler& partial) {
  const DefNode& node = store.at(symbol);
  DefinitionMetrics m;
  m.symbol = node.symbol;
  m.label = node.label;
  m.book = node.book;
  const Dag dag = dag_of(store, symbol);
  m.dag_size = static_cast<std::int64_t>(dag_size(dag));
  m.dag_depth = dag_depth(dag);
  if (node.pst) m.pst = {quantifier_depth(*node.pst, false), quantifier_depth(*node.pst, true)};
  const auto definiens = definiens_formula(node);
  m.dzfc = {quantifier_depth(*definiens, false), quantifier_depth(*definiens, true)};
  m.dzfc_length = definiens->length;
  const ExpandedMeasure f = full.definiens(symbol);
  const ExpandedMeasure p = partial.definiens(symbol);
  m.full = {f.depth, f.alt_depth};
  m.partial = {p.depth, p.alt_depth};
  m.full_length = f.length;
  m.partial_length = p.length;
  return m;
}

MetricsReport corpus_report(const DefStore& store) {
  MetricsReport report;
  Profiler full = Profiler::full(store);
  Profiler partial = Profiler::partial(store);
  for (const auto& sym : store.order()) {
    if (store.at(sym).builtin) continue;
    report.rows.push_back(measure_definition(store, sym, full, partial));
  }
  if (report.rows.empty()) return report;

  std::map<std::string, std::vector<const DefinitionMetrics*>> members;
  for (const auto& r : report.rows) {
    members["All"].push_back(&r);
    members[r.book].push_back(&r);
  }
  for (const auto& [group, rows] : members) {
    for (const auto& c : report_columns()) {
      Aggregate a;
      double sum = 0;
      for (const auto* r : rows) {
        const auto v = static_cast<double>(column(*r, c));
        a.max = std::max(a.max, v);
        sum += v;
      }
      a.mean = sum / static_cast<double>(rows.size());
      report.groups[group][c] = a;
    }
  }
  for (const auto& r : report.rows) {
    report.pst_histogram[r.pst.depth].first++;
    report.pst_histogram[r.pst.alt_depth].second++;
  }
  return report;
}

nlohmann::json MetricsReport::to_json() const {
  nlohmann::json defs = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j = {{"symbol", r.symbol}, {"label", r.label}, {"book", r.book}};
    for (const auto& c : report_columns()) j[c] = column(r, c);
    defs.push_back(std::move(j));
  }
  nlohmann::json g = nlohmann::json::object();
  for (const auto& [group, cols] : groups) {
    for (const auto& [c, a] : cols) g[group][c] = {{"max", a.max}, {"mean", a.mean}};
  }
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [depth, counts] : pst_histogram) {
    hist.push_back({{"depth", depth}, {"pst", counts.first}, {"pst_alt", counts.second}});
  }
  return {{"definitions", defs}, {"groups", g}, {"pst_histogram", hist}};
}

std::string MetricsReport::to_text() const {
  std::ostringstream out;
  if (rows.empty()) return "no definitions\n";
  auto row = [&](const std::string& a, const std::string& b, const Aggregate& v) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-10s %-36s %10.0f %10s\n", a.c_str(), b.c_str(), v.max, fixed2(v.mean).c_str());
    out << buf;
  };
  auto header = [&](const char* title) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-10s %-36s %10s %10s\n", "", "", "Max", "Mean");
    out << title << "\n" << buf;
  };

  header("DAG sizes and depths");
  std::vector<std::string> order{"All"};
  for (const auto& [group, cols] : groups) {
    if (group != "All") order.push_back(group);
  }
  for (const auto& group : order) {
    row(group, "Depth", groups.at(group).at("dag_depth"));
    row("", "Size", groups.at(group).at("dag_size"));
  }

  out << "\n";
  header("Quantifier depths");
  static const std::pair<const char*, const char*> depth_rows[] = {
      {"pst_depth", "PST"},
      {"dzfc_depth", "unexpanded DZFC"},
      {"full_depth", "fully expanded DZFC"},
      {"partial_depth", "partially expanded DZFC"},
      {"pst_alt_depth", "PST alternating"},
      {"dzfc_alt_depth", "unexpanded DZFC alternating"},
      {"full_alt_depth", "fully expanded DZFC alternating"},
      {"partial_alt_depth", "partially expanded DZFC alternating"}};
  for (const auto& group : order) {
    for (const auto& [col, name] : depth_rows) row(group == "All" ? "All" : group, name, groups.at(group).at(col));
  }

  out << "\nQuantifier depth frequencies in PST\n";
  char buf[120];
  std::snprintf(buf, sizeof buf, "%6s %10s %16s\n", "Depth", "PST", "PST alternating");
  out << buf;
  for (const auto& [depth, counts] : pst_histogram) {
    std::snprintf(buf, sizeof buf, "%6lld %10lld %16lld\n", static_cast<long long>(depth),
                  static_cast<long long>(counts.first), static_cast<long long>(counts.second));
    out << buf;
  }
  return out.str();
}

}  // namespace pst
