#include "pst/api.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "pst/dzfc_json.hpp"
#include "pst/nl.hpp"
#include "pst/render.hpp"

namespace pst {

namespace {

const char* kind_name(DefKind k) { return k == DefKind::Function ? "function" : "relation"; }

}  // namespace

Api::Api(DefStore store, std::optional<Lexicon> lexicon) : store_(std::move(store)), lexicon_(std::move(lexicon)) {
  const auto report = corpus_report(store_);
  for (const auto& row : report.rows) metrics_[row.symbol] = row;
  report_json_ = report.to_json();
}

std::string Api::id_of(const std::string& symbol) const {
  const auto& n = store_.at(symbol);
  return n.label.empty() ? n.symbol : n.label;
}

Api::Response Api::error(int status, const std::string& message) { return {status, {{"error", message}}}; }

nlohmann::json Api::depth_summary(const std::string& symbol) const {
  auto it = metrics_.find(symbol);
  if (it == metrics_.end()) {
    const auto dag = dag_of(store_, symbol);
    return {{"dag_size", dag_size(dag)}, {"dag_depth", dag_depth(dag)}};
  }
  const auto& m = it->second;
  return {{"dag_size", m.dag_size},
          {"dag_depth", m.dag_depth},
          {"pst_depth", m.pst.depth},
          {"pst_alt_depth", m.pst.alt_depth},
          {"dzfc_depth", m.dzfc.depth},
          {"dzfc_alt_depth", m.dzfc.alt_depth},
          {"full_depth", m.full.depth},
          {"full_alt_depth", m.full.alt_depth},
          {"partial_depth", m.partial.depth},
          {"partial_alt_depth", m.partial.alt_depth},
          {"dzfc_length", m.dzfc_length},
          {"full_length", m.full_length},
          {"partial_length", m.partial_length}};
}

nlohmann::json Api::node_json(const DefNode& n) const {
  nlohmann::json deps = nlohmann::json::array();
  for (const auto& d : n.deps) deps.push_back(id_of(d));
  return {{"id", id_of(n.symbol)}, {"label", n.label},  {"symbol", n.symbol},
          {"kind", kind_name(n.kind)}, {"book", n.book}, {"builtin", n.builtin},
          {"deps", deps},              {"summary", depth_summary(n.symbol)}};
}

nlohmann::json Api::definitions() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& s : store_.order()) {
    const auto& n = store_.at(s);
    list.push_back({{"id", id_of(s)}, {"label", n.label}, {"symbol", n.symbol}, {"kind", kind_name(n.kind)},
                    {"book", n.book}, {"builtin", n.builtin}});
  }
  return {{"definitions", list}};
}

Api::Response Api::definition(const std::string& id) const {
  const DefNode* n = store_.find_id(id);
  if (!n) return error(404, "unknown definition '" + id + "'");
  nlohmann::json j = node_json(*n);
  j["arity"] = n->arity;
  j["infix"] = n->infix;
  j["roles"] = n->roles;
  j["source"] = n->source;
  j["dzfc"] = dz::to_json(n->axiom);
  j["dzfc_latex"] = render_latex(n->axiom);
  j["pst_latex"] = n->pst ? nlohmann::json(render_latex(*n->pst, store_.symbols())) : nlohmann::json(nullptr);
  j["nl"] = nullptr;
  if (lexicon_ && n->pst) {
    try {
      j["nl"] = render_nl(*n->pst, *lexicon_, store_.symbols());
    } catch (const RenderError& e) {
      j["nl_error"] = e.what();
    }
  }
  return {200, j};
}

Api::Response Api::dag(const std::string& id, const std::optional<std::string>& radius_param) const {
  const DefNode* root = store_.find_id(id);
  if (!root) return error(404, "unknown definition '" + id + "'");
  int radius = 1;
  if (radius_param) {
    const std::string& radius_text = *radius_param;
    const char* first = radius_text.data();
    const char* last = first + radius_text.size();
    auto [ptr, ec] = std::from_chars(first, last, radius);
    if (ec != std::errc() || ptr != last || radius < 0) return error(400, "malformed radius '" + radius_text + "'");
  }
  // Breadth-first levels from the root.
  std::map<std::string, int> distance = {{root->symbol, 0}};
  std::vector<std::string> frontier = {root->symbol};
  for (int level = 0; level < radius && !frontier.empty(); ++level) {
    std::vector<std::string> next;
    for (const auto& s : frontier) {
      for (const auto& d : store_.at(s).deps) {
        if (distance.emplace(d, level + 1).second) next.push_back(d);
      }
    }
    frontier = std::move(next);
  }
  nlohmann::json nodes = nlohmann::json::array();
  std::vector<std::string> ordered;
  for (const auto& s : dag_of(store_, root->symbol).nodes) {
    if (distance.count(s)) ordered.push_back(s);
  }
  // By distance from the root, ties in registration order.
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](const std::string& a, const std::string& b) { return distance.at(a) < distance.at(b); });
  for (const auto& s : ordered) {
    const auto& n = store_.at(s);
    nlohmann::json j = node_json(n);
    j["distance"] = distance.at(s);
    const bool cut = std::any_of(n.deps.begin(), n.deps.end(), [&](const std::string& d) { return !distance.count(d); });
    if (cut) {
      const auto below = dag_of(store_, s);
      std::int64_t hidden = 0;
      for (const auto& m : below.nodes) {
        if (!distance.count(m)) ++hidden;
      }
      j["frontier"] = {{"size", hidden}, {"depth", dag_depth(below) - 1}};
    } else {
      j["frontier"] = nullptr;
    }
    nodes.push_back(std::move(j));
  }
  return {200, {{"root", id_of(root->symbol)}, {"radius", radius}, {"nodes", nodes}}};
}

Api::Response Api::get(const std::string& path, const std::map<std::string, std::string>& query) const {
  auto tail = [&](const std::string& prefix) -> std::optional<std::string> {
    if (path.size() > prefix.size() && path.compare(0, prefix.size(), prefix) == 0) return path.substr(prefix.size());
    return std::nullopt;
  };
  if (path == "/definitions") return {200, definitions()};
  if (path == "/stats") return {200, stats()};
  if (auto id = tail("/definitions/")) return definition(*id);
  if (auto id = tail("/dag/")) {
    auto it = query.find("radius");
    return dag(*id, it == query.end() ? std::nullopt : std::optional<std::string>(it->second));
  }
  return error(404, "no route for " + path);
}

}  // namespace pst
