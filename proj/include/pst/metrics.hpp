#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pst/defstore.hpp"
#include "pst/dzfc.hpp"
#include "pst/pst_ast.hpp"

namespace pst {

// Non-alternating depth counts every ∀/∃ on a path; alternating depth counts
// runs of like quantifiers. A PST multi-binder (∃a,b) counts once per
// variable for depth and as one run. Iota and PST binders do not count.
std::int64_t quantifier_depth(const dz::Formula& f, bool alternating);
std::int64_t quantifier_depth(const dz::Term& t, bool alternating);
std::int64_t quantifier_depth(const PstFormula& f, bool alternating);
std::int64_t quantifier_depth(const PstTerm& t, bool alternating);
std::int64_t quantifier_depth(const PstDefinition& d, bool alternating);

// Length and depths of expand(φ) without materializing it.
struct ExpandedMeasure {
  std::int64_t length = 0;
  std::int64_t depth = 0;
  std::int64_t alt_depth = 0;
};

// Abstract interpretation of the expander. Each defined symbol is summarized
// by how its definiens behaves for given summaries of its arguments; the
// summaries are memoized, so deep definition towers cost time linear in the
// number of distinct (symbol, argument summary) pairs.
class Profiler {
 public:
  Profiler(const DefStore& store, std::set<std::string> protected_symbols);
  static Profiler full(const DefStore& store) { return Profiler(store, {}); }
  static Profiler partial(const DefStore& store) { return Profiler(store, store.protected_symbols()); }

  ExpandedMeasure measure(const dz::Formula& f);
  ExpandedMeasure definiens(const std::string& symbol);

  // Per-run alternation counts, indexed by the kind of the quantifier above:
  // 0 none, 1 ∃, 2 ∀.
  using Alt = std::array<std::int64_t, 3>;

  struct Measure {
    std::int64_t length = 0;
    std::int64_t depth = 0;
    Alt alt{};
    bool operator<(const Measure& o) const;
  };

  // How a term behaves at the top level of an atom after expansion.
  struct Summary {
    std::int64_t length = 0;  // wrappers plus residual term
    std::int64_t occ = 0;     // unfoldable applications at top level
    std::int64_t delta = 0;   // max over those of (position + depth of its wrapper body)
    std::int64_t alpha = 0;   // max over those of the wrapper body's runs below an ∃
    std::int64_t iota_depth = 0;
    Alt iota_alt{};
    bool operator<(const Summary& o) const;
  };

  std::size_t memo_size() const { return fun_memo_.size() + rel_memo_.size(); }

 private:
  using Env = std::map<std::string, Summary>;

  Measure formula(const dz::Formula& f, const Env& env);
  Measure atom(const std::vector<dz::TermPtr>& args, const Env& env);
  Summary term(const dz::Term& t, const Env& env);
  Summary application(const std::string& symbol, std::vector<Summary> args);
  Measure relation(const std::string& symbol, std::vector<Summary> args);
  bool unfolds(const std::string& symbol) const;

  const DefStore& store_;
  std::set<std::string> protected_;
  std::map<std::pair<std::string, std::vector<Summary>>, Summary> fun_memo_;
  std::map<std::pair<std::string, std::vector<Summary>>, Measure> rel_memo_;
};

struct DepthColumns {
  std::int64_t depth = 0;
  std::int64_t alt_depth = 0;
};

struct DefinitionMetrics {
  std::string symbol;
  std::string label;
  std::string book;
  std::int64_t dag_size = 0;
  std::int64_t dag_depth = 0;
  DepthColumns pst, dzfc, full, partial;
  std::int64_t dzfc_length = 0;
  std::int64_t full_length = 0;
  std::int64_t partial_length = 0;
};

struct Aggregate {
  double max = 0;
  double mean = 0;
};

struct MetricsReport {
  std::vector<DefinitionMetrics> rows;
  // Aggregates per group ("All" and each book) and column name.
  std::map<std::string, std::map<std::string, Aggregate>> groups;
  // Depth -> (PST count, PST alternating count).
  std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> pst_histogram;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Column names in report order.
const std::vector<std::string>& report_columns();

DefinitionMetrics measure_definition(const DefStore& store, const std::string& symbol, Profiler& full,
                                     Profiler& partial);

// Every non-built-in definition in registration order.
MetricsReport corpus_report(const DefStore& store);

}  // namespace pst
