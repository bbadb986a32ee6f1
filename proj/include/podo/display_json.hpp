#pragma once

#include "json.hpp"
#include "podo/display.hpp"

namespace podo {

// DisplayList JSON: an array of objects tagged by "kind" (the shape kind
// name) with world-mm coordinates, plus "weight", "pattern" and "owner".

nlohmann::json display_to_json(const DisplayList& list);

/// Throws SchemaError on a malformed document.
DisplayList display_from_json(const nlohmann::json& doc);

}  // namespace podo
