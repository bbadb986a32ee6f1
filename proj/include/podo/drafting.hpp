#pragma once

#include <vector>

#include "podo/display.hpp"
#include "podo/model.hpp"

namespace podo {

// Left/Right label and dimension H axes, Bottom/Top label and dimension V axes.
enum class Side { Left, Right, Bottom, Top };

std::string_view side_name(Side side);

struct PlanOptions {
  // Sides that get axis bubbles and span dimensions. Empty: Left plus the
  // V side picked by settings.horiz_dims_above.
  std::vector<Side> sides;
  bool span_dims = true;
  bool overall = false;
  bool partition_dims = false;
  bool slab_dims = false;
};

std::vector<Side> effective_sides(const Model& model, const PlanOptions& options);

/// Axes, dimensions, columns, partitions, openings, beams, slabs,
/// foundations and texts, in that order; ascending ids inside each class.
DisplayList generate_plan_display(const Model& model, const PlanOptions& options = {});

/// One dimension per adjacent pair of Main axes. Throws TooFewAxes.
std::vector<DimLinear> generate_span_dimensions(const Model& model, Side side);

/// First to last Main axis of `orientation`, on the default side for it.
/// Throws TooFewAxes.
DimLinear generate_overall_dimension(const Model& model, Orientation orientation);
DimLinear generate_overall_dimension(const Model& model, Side side);

/// Solid parts and opening widths along a partition. Throws UnknownEntity.
std::vector<DimLinear> dimension_partition(const Model& model, EntityId partition_id);

/// One width dimension per slab of the group. Throws UnknownEntity.
std::vector<DimLinear> dimension_slab_group(const Model& model, EntityId group_id);

}  // namespace podo
