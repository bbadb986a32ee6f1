#pragma once

#include <string>
#include <vector>

#include "podo/model.hpp"

namespace podo {

struct ResolvedAxis {
  int index = 0;  // global, 1-based, ascending coordinate
  Mm coord = 0;
  std::string label;
  bool main = true;
  EntityId group;
  int ordinal = 0;       // 1-based position inside its group
  int main_ordinal = 0;  // 1-based among Main axes; 0 for Additional

  friend bool operator==(const ResolvedAxis&, const ResolvedAxis&) = default;
};

/// Merges Main and Additional groups of one orientation into the global
/// numbering. Main axes follow each other by cumulative steps, group after
/// group; Additional axes are interleaved by coordinate.
std::vector<ResolvedAxis> resolve_axes(const Model& model, Orientation orientation);

struct AxisGrid {
  std::vector<ResolvedAxis> h;
  std::vector<ResolvedAxis> v;

  const std::vector<ResolvedAxis>& axes(Orientation o) const { return o == Orientation::H ? h : v; }
  bool has(Orientation o, int index) const;
  Mm coord(Orientation o, int index) const;  // throws UnknownAxis
  Point node(int h_axis, int v_axis) const;
  Point at(const Anchor& anchor) const { return node(anchor.h_axis, anchor.v_axis) + anchor.offset(); }
  std::vector<Mm> main_coords(Orientation o) const;
};

AxisGrid resolve_grid(const Model& model);

/// x = coordinate of the V axis, y = coordinate of the H axis.
Point node_position(const Model& model, int h_axis, int v_axis);

}  // namespace podo
