#pragma once

#include "podo/model.hpp"

namespace podo {

struct FoundationDeriveOptions {
  bool bearing_only = false;  // strips under bearing partitions only
  Mm footing_margin_mm = 600;  // added to the column footprint
  Mm footing_height_mm = 600;
  Mm strip_margin_mm = 200;  // added to the partition thickness
};

/// Axes are copied verbatim; every column group becomes an unmarked footing
/// group on the same nodes and every partition a strip foundation on the
/// same base line. Throws WrongKind unless `floor` is a Floor plan.
Model derive_foundation_plan(const Model& floor, const FoundationDeriveOptions& options = {});

/// Keeps axes, marked column groups and bearing partitions. Throws WrongKind.
Model derive_ceiling_plan(const Model& floor);

}  // namespace podo
