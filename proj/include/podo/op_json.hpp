#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "podo/catalog.hpp"
#include "podo/display.hpp"
#include "podo/model.hpp"
#include "podo/ops.hpp"

namespace podo {

// Mutation ops as JSON: {"op": "<name>", "params": {...}}. Parameter objects
// use the field names of the text model schema.

const std::vector<std::string>& op_names();

struct OpOutcome {
  Model model;
  std::vector<EntityId> affected;  // created, changed or removed, ascending
};

/// Throws SchemaError for a malformed op and podo::Error from the kernel.
OpOutcome apply_op(const Model& model, const nlohmann::json& op, const Catalog& catalog = Catalog::builtin());

/// Ids whose entity differs between the two models, including axis groups.
std::vector<EntityId> diff_ids(const Model& before, const Model& after);

OpeningProto opening_proto_from_json(const nlohmann::json& j, const std::string& path);
nlohmann::json placement_to_json(const OpeningPlacement& p);

struct PreviewOutcome {
  std::optional<OpeningPlacement> placement;  // snap previews only
  std::vector<EntityId> affected;
  DisplayList ghost;
};

/// Evaluates an op candidate without committing it. "snap_opening_preview"
/// takes {"cursor": [x, y], "proto": {...}} and answers NoTarget with an
/// empty placement; any other op name previews that op. The ghost is the
/// part of the resulting plan drawing owned by the affected ids.
PreviewOutcome preview_op(const Model& model, const nlohmann::json& op, const Catalog& catalog = Catalog::builtin());

}  // namespace podo
