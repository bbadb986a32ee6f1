#include "podo/placement.hpp"

#include <algorithm>

namespace podo {

namespace {

BaseLine line_from(Point start, Mm length, bool along_x) {
  return {start, along_x ? Point{start.x + length, start.y} : Point{start.x, start.y + length}};
}

std::vector<GridMember> grid_members(const AxisGrid& grid, const Anchor& start, const Anchor& end,
                                     Point center_offset) {
  const NodeRun run = node_run(start, end);
  std::vector<GridMember> out;
  out.reserve(static_cast<std::size_t>(std::max(run.count(), 0)));
  for (int h = run.h_lo; h <= run.h_hi; ++h) {
    for (int v = run.v_lo; v <= run.v_hi; ++v) {
      out.push_back({v - run.v_lo + 1, h - run.h_lo + 1,
                     grid.node(h, v) + start.offset() + center_offset});
    }
  }
  return out;
}

template <class Group>
std::optional<Point> member_center(const std::vector<Group>& groups, const AxisGrid& grid,
                                   const ColumnRef& ref) {
  const Group* g = find_entity(groups, ref.group);
  if (!g) return std::nullopt;
  const NodeRun run = node_run(g->start, g->end);
  if (ref.ix < 1 || ref.ix > run.nx() || ref.iy < 1 || ref.iy > run.ny()) return std::nullopt;
  const int h = run.h_lo + ref.iy - 1;
  const int v = run.v_lo + ref.ix - 1;
  if (!grid.has(Orientation::H, h) || !grid.has(Orientation::V, v)) return std::nullopt;
  return grid.node(h, v) + g->start.offset() + g->center_offset;
}

}  // namespace

BaseLine partition_base_line(const AxisGrid& grid, const Partition& p) {
  return line_from(grid.at(p.anchor), p.length_mm, p.along_x);
}

BaseLine strip_base_line(const AxisGrid& grid, const StripFoundation& s) {
  return line_from(grid.at(s.anchor), s.length_mm, s.along_x);
}

NodeRun node_run(const Anchor& start, const Anchor& end) {
  NodeRun r;
  r.h_lo = std::min(start.h_axis, end.h_axis);
  r.h_hi = std::max(start.h_axis, end.h_axis);
  r.v_lo = std::min(start.v_axis, end.v_axis);
  r.v_hi = std::max(start.v_axis, end.v_axis);
  return r;
}

std::vector<GridMember> column_positions(const AxisGrid& grid, const ColumnGroup& g) {
  return grid_members(grid, g.start, g.end, g.center_offset);
}

std::vector<GridMember> footing_positions(const AxisGrid& grid, const FootingGroup& g) {
  return grid_members(grid, g.start, g.end, g.center_offset);
}

std::optional<Point> column_center(const Model& model, const AxisGrid& grid, const ColumnRef& ref) {
  return member_center(model.column_groups, grid, ref);
}

std::optional<Point> footing_center(const Model& model, const AxisGrid& grid, const FootingRef& ref) {
  return member_center(model.footing_groups, grid, ref);
}

Point column_extent(const ColumnGroup& g) {
  return g.along_x ? Point{g.width_mm, g.thickness_mm} : Point{g.thickness_mm, g.width_mm};
}

Point footing_extent(const FootingGroup& g) {
  return g.along_x ? Point{g.length_mm, g.width_mm} : Point{g.width_mm, g.length_mm};
}

BaseLine beam_line(const AxisGrid& grid, const Beam& b) {
  return line_from(grid.at(b.anchor), b.length_mm, b.along_x);
}

BaseLine foundation_beam_line(const AxisGrid& grid, const FoundationBeam& b) {
  return line_from(grid.at(b.anchor), b.length_mm, b.along_x);
}

BaseLine opening_line(const AxisGrid& grid, const Partition& host, const Opening& o) {
  const BaseLine base = partition_base_line(grid, host);
  const Point start = host.along_x ? Point{base.start.x + o.anchor_offset_mm, base.start.y}
                                   : Point{base.start.x, base.start.y + o.anchor_offset_mm};
  return line_from(start, o.width_mm, host.along_x);
}

}  // namespace podo
