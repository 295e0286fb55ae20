#pragma once

#include <json.hpp>

#include "pst/dzfc.hpp"

namespace pst::dz {

// Canonical JSON tree: every node is an object with a "kind" field. Field
// names are documented in docs/schema.md.
nlohmann::json to_json(const Term& t);
nlohmann::json to_json(const Formula& f);
nlohmann::json to_json(const DefiningAxiom& ax);

TermPtr term_from_json(const nlohmann::json& j);
FormulaPtr formula_from_json(const nlohmann::json& j);
DefiningAxiom axiom_from_json(const nlohmann::json& j);

}  // namespace pst::dz
