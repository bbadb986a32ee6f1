#pragma once

#include <optional>
#include <vector>

#include "podo/axes.hpp"
#include "podo/model.hpp"

namespace podo {

// World placement of anchored entities. Everything here is integer-exact:
// a position is always grid.at(anchor) plus entity-local integer offsets.

struct BaseLine {
  Point start;  // lower/left end
  Point end;
  Mm length() const { return (end.x - start.x) + (end.y - start.y); }
  bool along_x() const { return start.y == end.y; }
};

BaseLine partition_base_line(const AxisGrid& grid, const Partition& p);
BaseLine strip_base_line(const AxisGrid& grid, const StripFoundation& s);

struct NodeRun {
  int h_lo = 1, h_hi = 1;  // inclusive global H indices
  int v_lo = 1, v_hi = 1;  // inclusive global V indices
  int nx() const { return v_hi - v_lo + 1; }
  int ny() const { return h_hi - h_lo + 1; }
  int count() const { return nx() * ny(); }
};

NodeRun node_run(const Anchor& start, const Anchor& end);

struct GridMember {
  int ix = 1;  // 1-based along X
  int iy = 1;  // 1-based along Y
  Point center;
};

/// Column centers of a group, iy-major then ix ascending.
std::vector<GridMember> column_positions(const AxisGrid& grid, const ColumnGroup& g);
std::vector<GridMember> footing_positions(const AxisGrid& grid, const FootingGroup& g);

std::optional<Point> column_center(const Model& model, const AxisGrid& grid, const ColumnRef& ref);
std::optional<Point> footing_center(const Model& model, const AxisGrid& grid, const FootingRef& ref);

/// Extent of a column footprint along world X and Y.
Point column_extent(const ColumnGroup& g);
Point footing_extent(const FootingGroup& g);

/// Beam center line: start at grid.at(anchor), running length along X or Y.
BaseLine beam_line(const AxisGrid& grid, const Beam& b);
BaseLine foundation_beam_line(const AxisGrid& grid, const FoundationBeam& b);

/// World interval occupied by an opening along its partition base line.
BaseLine opening_line(const AxisGrid& grid, const Partition& host, const Opening& o);

}  // namespace podo
