#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "pst/defstore.hpp"
#include "pst/lexicon.hpp"
#include "pst/metrics.hpp"

namespace pst {

// Read-only JSON views of a definition store, as served over HTTP. Node ids
// are definition labels; lookups also accept symbols.
class Api {
 public:
  struct Response {
    int status = 200;
    nlohmann::json body;
  };

  Api(DefStore store, std::optional<Lexicon> lexicon = std::nullopt);

  // GET dispatch: /definitions, /definitions/{id}, /dag/{id}?radius=k, /stats.
  Response get(const std::string& path, const std::map<std::string, std::string>& query = {}) const;

  nlohmann::json definitions() const;
  Response definition(const std::string& id) const;
  // Nodes within `radius` dependency steps of the root (default 1). Nodes on the edge
  // whose dependencies were cut off carry a frontier summary of what lies
  // below them.
  Response dag(const std::string& id, const std::optional<std::string>& radius) const;
  nlohmann::json stats() const { return report_json_; }

  const DefStore& store() const { return store_; }
  std::string id_of(const std::string& symbol) const;

 private:
  nlohmann::json node_json(const DefNode& n) const;
  nlohmann::json depth_summary(const std::string& symbol) const;
  static Response error(int status, const std::string& message);

  DefStore store_;
  std::optional<Lexicon> lexicon_;
  std::map<std::string, DefinitionMetrics> metrics_;
  nlohmann::json report_json_;
};

}  // namespace pst
