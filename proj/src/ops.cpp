#include "podo/ops.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>

#include "podo/axes.hpp"
#include "podo/placement.hpp"
#include "podo/validate.hpp"

namespace podo {

namespace {

std::string id_text(EntityId id) { return std::to_string(id.value); }

void require_list(const Model& m, EntityList list) {
  if (!list_permitted(m.kind, list)) {
    throw Error(ErrorCode::PlanKindForbidden, std::string(entity_list_name(list)) + " cannot be placed on a " +
                                                  std::string(plan_kind_name(m.kind)) + " plan");
  }
}

void require_positive(Mm value, const char* what) {
  if (value <= 0) throw Error(ErrorCode::InvalidValue, std::string(what) + " must be > 0");
}

void require_anchor(const AxisGrid& grid, const Anchor& a) {
  grid.coord(Orientation::H, a.h_axis);
  grid.coord(Orientation::V, a.v_axis);
}

const MarkRecord* require_mark(const Catalog& catalog, MarkFamily family, const std::string& name) {
  const MarkRecord* r = catalog.lookup(family, name);
  if (!r) {
    throw Error(ErrorCode::UnknownMark,
                "no " + std::string(family_name(family)) + " mark '" + name + "' in the catalog");
  }
  return r;
}

struct Dims3 {
  Mm length = 0, width = 0, height = 0;
};

// Marked entities take L x W x H from the catalog, explicit values win.
Dims3 resolve_dims(const Catalog& catalog, MarkFamily family, const std::optional<std::string>& mark,
                   std::optional<Mm> length, std::optional<Mm> width, std::optional<Mm> height) {
  Dims3 d;
  if (mark) {
    const MarkRecord* r = require_mark(catalog, family, *mark);
    const auto& dims = r->dims();
    d.length = dims.at(0);
    d.width = dims.at(1);
    d.height = dims.size() > 2 ? dims[2] : 0;
  }
  if (length) d.length = *length;
  if (width) d.width = *width;
  if (height) d.height = *height;
  require_positive(d.length, "length");
  require_positive(d.width, "width");
  require_positive(d.height, "height");
  return d;
}

// ---------------------------------------------------------------------------
// Axis structure edits

struct AxisKey {
  std::uint32_t group;
  int ordinal;
  friend auto operator<=>(const AxisKey&, const AxisKey&) = default;
};

class AxisRemap {
 public:
  // keep_world: survivors also absorb their own movement into the offset.
  AxisRemap(const std::vector<ResolvedAxis>& before, const std::vector<ResolvedAxis>& after, bool keep_world) {
    std::map<AxisKey, const ResolvedAxis*> by_key;
    for (const auto& a : after) by_key[{a.group.value, a.ordinal}] = &a;
    for (const auto& a : before) {
      Target t;
      t.old_coord = a.coord;
      if (const auto it = by_key.find({a.group.value, a.ordinal}); it != by_key.end()) {
        t.index = it->second->index;
        t.delta = keep_world ? a.coord - it->second->coord : 0;
        t.survived = true;
      } else {
        const ResolvedAxis* best = nullptr;
        for (const auto& b : after) {
          if (!best || std::llabs(b.coord - a.coord) < std::llabs(best->coord - a.coord)) best = &b;
        }
        t.index = best ? best->index : 0;
        t.delta = best ? a.coord - best->coord : 0;
      }
      targets_.push_back(t);
    }
  }

  bool survived(int old_index) const { return at(old_index).survived; }
  int index(int old_index) const { return at(old_index).index; }
  Mm delta(int old_index) const { return at(old_index).delta; }
  Mm old_coord(int old_index) const { return at(old_index).old_coord; }

 private:
  struct Target {
    int index = 0;
    Mm delta = 0;
    Mm old_coord = 0;
    bool survived = false;
  };
  const Target& at(int old_index) const { return targets_.at(static_cast<std::size_t>(old_index - 1)); }
  std::vector<Target> targets_;
};

struct GridRemap {
  AxisRemap h;
  AxisRemap v;

  void anchor(Anchor& a) const {
    a.dy += h.delta(a.h_axis);
    a.h_axis = h.index(a.h_axis);
    a.dx += v.delta(a.v_axis);
    a.v_axis = v.index(a.v_axis);
  }

  // Moves the two corners of a node rectangle. Corners on vanished axes step
  // inward to the nearest surviving axis of the old range; a range with no
  // surviving axis collapses onto the nearest axis. Both corners share one
  // offset, so only the first member is guaranteed to keep its place.
  void corners(Anchor& start, Anchor& end) const {
    corner_pair(h, start.h_axis, end.h_axis, start.dy, end.dy);
    corner_pair(v, start.v_axis, end.v_axis, start.dx, end.dx);
  }

 private:
  static void corner_pair(const AxisRemap& r, int& a, int& b, Mm& off_a, Mm& off_b) {
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    int first = 0, last = 0;
    for (int i = lo; i <= hi; ++i) {
      if (!r.survived(i)) continue;
      if (!first) first = i;
      last = i;
    }
    if (first) {
      const bool a_is_lo = a <= b;
      const int new_lo = r.index(first);
      const int new_hi = r.index(last);
      a = a_is_lo ? new_lo : new_hi;
      b = a_is_lo ? new_hi : new_lo;
      const Mm delta = r.delta(first);
      off_a += delta;
      off_b += delta;
      return;
    }
    const Mm delta = r.delta(lo);
    a = b = r.index(lo);
    off_a += delta;
    off_b += delta;
  }
};

// Main-axis identities in Main ordinal order.
std::vector<AxisKey> main_axis_keys(const Model& m, Orientation o) {
  std::vector<AxisKey> out;
  for (const auto& g : m.axis_groups(o)) {
    if (!g.is_main()) continue;
    for (int j = 1; j <= g.count; ++j) out.push_back({g.id.value, j});
  }
  return out;
}

// Keeps Additional groups attached to the same Main axis after the Main
// numbering changed; drops those whose base axis disappeared.
void rebase_additional_groups(Model& next, const Model& before, Orientation o, EntityId keep) {
  const auto old_axes = main_axis_keys(before, o);
  std::map<AxisKey, int> new_main;
  {
    int ordinal = 0;
    for (const auto& g : next.axis_groups(o)) {
      if (!g.is_main()) continue;
      for (int j = 1; j <= g.count; ++j) new_main[{g.id.value, j}] = ++ordinal;
    }
  }
  auto& groups = next.axis_groups(o);
  std::vector<AxisGroup> kept;
  for (auto g : groups) {
    auto* extra = std::get_if<AdditionalAxes>(&g.kind);
    if (extra && g.id != keep) {
      const int base = extra->base_axis;
      if (base < 1 || base > static_cast<int>(old_axes.size())) continue;
      const auto it = new_main.find(old_axes[static_cast<std::size_t>(base - 1)]);
      if (it == new_main.end()) continue;
      extra->base_axis = it->second;
    }
    kept.push_back(std::move(g));
  }
  groups = std::move(kept);
}

void reanchor_all(Model& next, const Model& before, bool keep_world) {
  const AxisGrid old_grid = resolve_grid(before);
  const AxisGrid new_grid = resolve_grid(next);
  for (auto o : {Orientation::H, Orientation::V}) {
    if (new_grid.axes(o).empty() && !old_grid.axes(o).empty()) {
      throw Error(ErrorCode::LastAxisGroup, std::string("no ") + (o == Orientation::H ? "horizontal" : "vertical") +
                                                " axis would remain");
    }
  }
  const GridRemap remap{AxisRemap(old_grid.h, new_grid.h, keep_world), AxisRemap(old_grid.v, new_grid.v, keep_world)};
  for (auto& g : next.column_groups) remap.corners(g.start, g.end);
  for (auto& p : next.partitions) remap.anchor(p.anchor);
  for (auto& b : next.beams) remap.anchor(b.anchor);
  for (auto& s : next.slab_groups) remap.anchor(s.anchor);
  for (auto& s : next.strip_foundations) remap.anchor(s.anchor);
  for (auto& f : next.footing_groups) remap.corners(f.start, f.end);
  for (auto& b : next.foundation_beams) remap.anchor(b.anchor);
}

void check_axis_edit_allowed(const Model& m) {
  if (m.kind != PlanKind::Floor && m.has_content()) {
    throw Error(ErrorCode::PlanKindLocked,
                "axes of a " + std::string(plan_kind_name(m.kind)) + " plan can only change while it is empty");
  }
}

void finish(const Model& m) {
  const auto issues = check_model(m);
  if (!issues.empty()) throw Error(issues.front().code, issues.front().message, issues.front().entity);
}

}  // namespace

Model upsert_axis_group(const Model& model, AxisGroup group) {
  check_axis_edit_allowed(model);
  if (group.count < 1 || group.count > kMaxAxesPerGroup) {
    throw Error(ErrorCode::CountOutOfRange, "axis group count " + std::to_string(group.count) + " is outside 1..99",
                group.id);
  }
  if (const auto* main = std::get_if<MainAxes>(&group.kind); main && main->step_mm <= 0) {
    throw Error(ErrorCode::InvalidValue, "axis step must be > 0", group.id);
  }
  if (const auto* extra = std::get_if<AdditionalAxes>(&group.kind); extra && extra->offset_mm == 0) {
    throw Error(ErrorCode::InvalidValue, "additional axis offset must be non-zero", group.id);
  }

  Model next = model;
  auto& list = next.axis_groups(group.orientation);
  if (group.id) {
    const auto other = group.orientation == Orientation::H ? Orientation::V : Orientation::H;
    if (find_entity(next.axis_groups(other), group.id)) {
      throw Error(ErrorCode::InvalidValue, "axis group " + id_text(group.id) + " cannot change orientation", group.id);
    }
    AxisGroup* existing = find_entity(list, group.id);
    if (!existing) throw Error(ErrorCode::UnknownEntity, "no axis group " + id_text(group.id), group.id);
    *existing = group;
  } else {
    group.id = next.allocate_id();
    list.push_back(group);
  }
  rebase_additional_groups(next, model, group.orientation, group.id);
  reanchor_all(next, model, false);
  finish(next);
  return next;
}

Model delete_axis_group(const Model& model, EntityId group_id) {
  Orientation o = Orientation::H;
  if (find_entity(model.axis_groups_h, group_id)) {
    o = Orientation::H;
  } else if (find_entity(model.axis_groups_v, group_id)) {
    o = Orientation::V;
  } else {
    throw Error(ErrorCode::UnknownEntity, "no axis group " + id_text(group_id), group_id);
  }
  check_axis_edit_allowed(model);

  Model next = model;
  auto& list = next.axis_groups(o);
  std::erase_if(list, [&](const AxisGroup& g) { return g.id == group_id; });
  rebase_additional_groups(next, model, o, {});
  if (next.axis_groups(o).empty()) {
    throw Error(ErrorCode::LastAxisGroup, "cannot delete the last axis group of an orientation", group_id);
  }
  reanchor_all(next, model, true);
  finish(next);
  return next;
}

// ---------------------------------------------------------------------------
// Columns, footings

Model place_column_group(const Model& model, const ColumnGroupSpec& spec, const Catalog& catalog) {
  require_list(model, EntityList::ColumnGroups);
  if (spec.mark.has_value() == spec.unmarked_type.has_value()) {
    throw Error(ErrorCode::InvalidValue, "a column group needs either a mark or an unmarked type");
  }
  ColumnGroup g;
  g.mark = spec.mark;
  g.unmarked_type = spec.unmarked_type;
  if (spec.mark) {
    const auto& dims = require_mark(catalog, MarkFamily::Column, *spec.mark)->dims();
    // Column marks read height x width x thickness.
    g.width_mm = dims.size() > 2 ? dims[1] : dims[0];
    g.thickness_mm = dims.size() > 2 ? dims[2] : dims[1];
  } else if (!spec.width_mm || !spec.thickness_mm) {
    throw Error(ErrorCode::InvalidValue, "unmarked columns need width and thickness");
  }
  if (spec.width_mm) g.width_mm = *spec.width_mm;
  if (spec.thickness_mm) g.thickness_mm = *spec.thickness_mm;
  require_positive(g.width_mm, "column width");
  require_positive(g.thickness_mm, "column thickness");
  if (spec.console_len_mm && *spec.console_len_mm < 0) throw Error(ErrorCode::InvalidValue, "console length must be >= 0");

  const AxisGrid grid = resolve_grid(model);
  require_anchor(grid, spec.start);
  require_anchor(grid, spec.end);
  if (spec.start.offset() != spec.end.offset()) {
    throw Error(ErrorCode::NonRectangularRun, "start and end of a column group must share one offset");
  }
  g.console_len_mm = spec.console_len_mm;
  g.start = spec.start;
  g.end = spec.end;
  g.center_offset = spec.center_offset;
  g.along_x = spec.along_x;
  g.is_new = spec.is_new;
  g.console_left = spec.console_left;

  Model next = model;
  g.id = next.allocate_id();
  next.column_groups.push_back(std::move(g));
  return next;
}

Model place_footing_group(const Model& model, const FootingGroupSpec& spec, const Catalog& catalog) {
  require_list(model, EntityList::FootingGroups);
  const Dims3 d = resolve_dims(catalog, MarkFamily::Footing, spec.mark, spec.length_mm, spec.width_mm, spec.height_mm);
  const AxisGrid grid = resolve_grid(model);
  require_anchor(grid, spec.start);
  require_anchor(grid, spec.end);
  if (spec.start.offset() != spec.end.offset()) {
    throw Error(ErrorCode::NonRectangularRun, "start and end of a footing group must share one offset");
  }
  FootingGroup f;
  f.mark = spec.mark;
  f.length_mm = d.length;
  f.width_mm = d.width;
  f.height_mm = d.height;
  f.along_x = spec.along_x;
  f.start = spec.start;
  f.end = spec.end;
  f.center_offset = spec.center_offset;
  f.is_new = spec.is_new;

  Model next = model;
  f.id = next.allocate_id();
  next.footing_groups.push_back(std::move(f));
  return next;
}

// ---------------------------------------------------------------------------
// Polyline-built chains

namespace {

struct ChainSegment {
  Point start;  // lower/left end
  Mm length;
  bool along_x;
};

std::vector<ChainSegment> split_polyline(const std::vector<Point>& polyline) {
  if (polyline.size() < 2) throw Error(ErrorCode::EmptyPolyline, "a chain needs at least two vertices");
  std::vector<ChainSegment> out;
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    const Point a = polyline[i - 1];
    const Point b = polyline[i];
    if (a == b) throw Error(ErrorCode::InvalidValue, "zero-length segment at vertex " + std::to_string(i));
    if (a.x != b.x && a.y != b.y) {
      throw Error(ErrorCode::NonAxisAlignedSegment, "segment " + std::to_string(i) + " is not parallel to X or Y");
    }
    const bool along_x = a.y == b.y;
    const Point start{std::min(a.x, b.x), std::min(a.y, b.y)};
    const Mm length = along_x ? std::llabs(b.x - a.x) : std::llabs(b.y - a.y);
    out.push_back({start, length, along_x});
  }
  return out;
}

int nearest_axis(const std::vector<ResolvedAxis>& axes, Mm coord) {
  if (axes.empty()) throw Error(ErrorCode::UnknownAxis, "the plan has no axes to anchor to");
  const ResolvedAxis* best = &axes.front();
  for (const auto& a : axes) {
    if (std::llabs(a.coord - coord) < std::llabs(best->coord - coord)) best = &a;
  }
  return best->index;
}

}  // namespace

Anchor anchor_nearest(const AxisGrid& grid, Point p) {
  Anchor a;
  a.h_axis = nearest_axis(grid.h, p.y);
  a.v_axis = nearest_axis(grid.v, p.x);
  const Point node = grid.node(a.h_axis, a.v_axis);
  a.dx = p.x - node.x;
  a.dy = p.y - node.y;
  return a;
}

Model place_partition_chain(const Model& model, const PartitionChainSpec& spec) {
  require_list(model, EntityList::Partitions);
  require_positive(spec.thickness_mm, "partition thickness");
  const auto segments = split_polyline(spec.polyline);
  const AxisGrid grid = resolve_grid(model);

  Model next = model;
  const EntityId chain = next.allocate_id();
  for (const auto& s : segments) {
    Partition p;
    p.id = next.allocate_id();
    p.chain_id = chain;
    p.gost_type = spec.gost_type;
    p.thickness_mm = spec.thickness_mm;
    p.length_mm = s.length;
    p.bearing = spec.bearing;
    p.along_x = s.along_x;
    p.anchor = anchor_nearest(grid, s.start);
    p.is_new = spec.is_new;
    next.partitions.push_back(p);
  }
  return next;
}

Model place_strip_foundation(const Model& model, const StripFoundationSpec& spec) {
  require_list(model, EntityList::StripFoundations);
  require_positive(spec.width_mm, "strip foundation width");
  const auto segments = split_polyline(spec.polyline);
  const AxisGrid grid = resolve_grid(model);

  Model next = model;
  const EntityId chain = next.allocate_id();
  for (const auto& s : segments) {
    StripFoundation f;
    f.id = next.allocate_id();
    f.chain_id = chain;
    f.width_mm = spec.width_mm;
    f.length_mm = s.length;
    f.along_x = s.along_x;
    f.anchor = anchor_nearest(grid, s.start);
    f.is_new = spec.is_new;
    next.strip_foundations.push_back(f);
  }
  return next;
}

// ---------------------------------------------------------------------------
// Openings

OpeningProto resolve_opening_proto(const OpeningProto& proto, const Catalog& catalog) {
  OpeningProto out = proto;
  if (proto.mark) {
    const MarkRecord* r = require_mark(catalog, MarkFamily::Opening, *proto.mark);
    const auto& dims = r->dims();
    const Mm first = dims.at(0);
    const Mm second = dims.at(1);
    if (!out.width_mm) out.width_mm = r->height_first ? second : first;
    if (!out.height_mm) out.height_mm = r->height_first ? first : second;
  }
  if (out.section_extra) {
    auto& extra = *out.section_extra;
    if (extra.lintel && extra.lintel->mark && extra.lintel->length_mm == 0) {
      const auto& dims = require_mark(catalog, MarkFamily::Lintel, *extra.lintel->mark)->dims();
      extra.lintel->length_mm = dims.at(0);
      extra.lintel->width_mm = dims.at(1);
      extra.lintel->height_mm = dims.size() > 2 ? dims[2] : 0;
    }
    if (extra.transom && extra.transom->mark && extra.transom->width_mm == 0) {
      const auto& dims = require_mark(catalog, MarkFamily::Transom, *extra.transom->mark)->dims();
      extra.transom->width_mm = dims.at(0);
      extra.transom->height_mm = dims.at(1);
    }
  }
  return out;
}

OpeningFit check_opening_fit(Mm partition_length, const std::vector<std::pair<Mm, Mm>>& siblings, Mm offset,
                             Mm width) {
  if (offset < 0 || width <= 0 || offset + width > partition_length) return OpeningFit::OutOfPartition;
  for (const auto& [s_offset, s_width] : siblings) {
    if (s_offset < offset + width && offset < s_offset + s_width) return OpeningFit::Overlaps;
  }
  return OpeningFit::Fits;
}

namespace {

std::vector<std::pair<Mm, Mm>> sibling_intervals(const Model& m, EntityId partition, EntityId skip = {}) {
  std::vector<std::pair<Mm, Mm>> out;
  for (const auto& o : m.openings) {
    if (o.partition == partition && o.id != skip) out.emplace_back(o.anchor_offset_mm, o.width_mm);
  }
  return out;
}

// Squared distance from p to an axis-aligned segment.
Mm distance2(const BaseLine& line, Point p) {
  const Mm cx = std::clamp(p.x, std::min(line.start.x, line.end.x), std::max(line.start.x, line.end.x));
  const Mm cy = std::clamp(p.y, std::min(line.start.y, line.end.y), std::max(line.start.y, line.end.y));
  return (p.x - cx) * (p.x - cx) + (p.y - cy) * (p.y - cy);
}

}  // namespace

std::optional<OpeningPlacement> snap_opening_preview(const Model& model, Point cursor, const OpeningProto& proto) {
  if (model.kind != PlanKind::Floor || !proto.width_mm || *proto.width_mm <= 0) return std::nullopt;
  AxisGrid grid;
  try {
    grid = resolve_grid(model);
  } catch (const Error&) {
    return std::nullopt;
  }

  const Partition* best = nullptr;
  BaseLine best_line;
  Mm best_d2 = std::numeric_limits<Mm>::max();
  for (const auto& p : model.partitions) {
    BaseLine line;
    try {
      line = partition_base_line(grid, p);
    } catch (const Error&) {
      continue;
    }
    const Mm d2 = distance2(line, cursor);
    if (d2 <= kSnapCaptureRadius * kSnapCaptureRadius && d2 < best_d2) {
      best = &p;
      best_line = line;
      best_d2 = d2;
    }
  }
  if (!best) return std::nullopt;

  const Mm width = *proto.width_mm;
  if (width > best->length_mm) return std::nullopt;
  const Mm along = best->along_x ? cursor.x - best_line.start.x : cursor.y - best_line.start.y;
  const Mm projection = std::clamp<Mm>(along, 0, best->length_mm);
  const Mm offset = std::clamp<Mm>(projection - width / 2, 0, best->length_mm - width);
  if (check_opening_fit(best->length_mm, sibling_intervals(model, best->id), offset, width) != OpeningFit::Fits) {
    return std::nullopt;
  }
  return OpeningPlacement{best->id, offset, proto.rot180, proto.flip_side};
}

Model place_opening(const Model& model, const OpeningPlacement& placement, const OpeningProto& proto,
                    const Catalog& catalog) {
  require_list(model, EntityList::Openings);
  const OpeningProto resolved = resolve_opening_proto(proto, catalog);
  const Partition* host = find_entity(model.partitions, placement.partition);
  if (!host) {
    throw Error(ErrorCode::UnknownEntity, "no partition " + id_text(placement.partition), placement.partition);
  }
  opening_type_info(resolved.gost_type);
  if (!resolved.width_mm || !resolved.height_mm) {
    throw Error(ErrorCode::InvalidValue, "unmarked openings need width and height");
  }
  require_positive(*resolved.width_mm, "opening width");
  require_positive(*resolved.height_mm, "opening height");
  if (resolved.section_extra) {
    if (resolved.section_extra->sill_height_mm < 0) throw Error(ErrorCode::InvalidValue, "sill height must be >= 0");
    require_positive(resolved.section_extra->opening_height_mm, "section opening height");
  }

  switch (check_opening_fit(host->length_mm, sibling_intervals(model, host->id), placement.offset_mm,
                            *resolved.width_mm)) {
    case OpeningFit::OutOfPartition:
      throw Error(ErrorCode::OutOfPartition, "opening leaves partition " + id_text(host->id), host->id);
    case OpeningFit::Overlaps:
      throw Error(ErrorCode::OverlapsOpening, "opening overlaps another opening on partition " + id_text(host->id),
                  host->id);
    case OpeningFit::Fits:
      break;
  }

  Opening o;
  o.mark = resolved.mark;
  o.gost_type = resolved.gost_type;
  o.width_mm = *resolved.width_mm;
  o.height_mm = *resolved.height_mm;
  o.partition = host->id;
  o.along_x = host->along_x;
  o.rot180 = placement.rot180;
  o.flip_side = placement.flip_side;
  o.anchor_offset_mm = placement.offset_mm;
  o.is_new = resolved.is_new;
  o.section_extra = resolved.section_extra;

  Model next = model;
  o.id = next.allocate_id();
  next.openings.push_back(std::move(o));
  return next;
}

Model cycle_opening_variant(const Model& model, EntityId opening_id) {
  Model next = model;
  Opening* o = find_entity(next.openings, opening_id);
  if (!o) throw Error(ErrorCode::UnknownEntity, "no opening " + id_text(opening_id), opening_id);
  const int state = ((o->rot180 ? 2 : 0) + (o->flip_side ? 1 : 0) + 1) % 4;
  o->rot180 = state >= 2;
  o->flip_side = state % 2 == 1;
  return next;
}

// ---------------------------------------------------------------------------
// Beams

namespace {

enum class Dir { PosX, NegX, PosY, NegY };

// Beam direction leaving a column, checked in the column's own frame
// (a column with along_x unset is turned by 90 degrees).
bool bears(const BearingTable& t, Dir world, bool column_along_x) {
  Dir local = world;
  if (!column_along_x) {
    switch (world) {
      case Dir::PosX: local = Dir::NegY; break;
      case Dir::NegX: local = Dir::PosY; break;
      case Dir::PosY: local = Dir::PosX; break;
      case Dir::NegY: local = Dir::NegX; break;
    }
  }
  switch (local) {
    case Dir::PosX: return t.pos_x;
    case Dir::NegX: return t.neg_x;
    case Dir::PosY: return t.pos_y;
    case Dir::NegY: return t.neg_y;
  }
  return false;
}

struct Span {
  bool along_x = true;
  Mm distance = 0;
  bool swapped = false;
  Point lo, hi;
};

Span measure_span(Point a, Point b) {
  if (a == b) throw Error(ErrorCode::NotCollinear, "both beam ends rest on the same support");
  Span s;
  if (a.y == b.y) {
    s.along_x = true;
  } else if (a.x == b.x) {
    s.along_x = false;
  } else {
    throw Error(ErrorCode::NotCollinear, "beam supports are not aligned along X or Y");
  }
  s.swapped = s.along_x ? a.x > b.x : a.y > b.y;
  s.lo = s.swapped ? b : a;
  s.hi = s.swapped ? a : b;
  s.distance = s.along_x ? s.hi.x - s.lo.x : s.hi.y - s.lo.y;
  return s;
}

void check_span(const Span& s, Mm length, Mm tolerance) {
  const Mm slack = s.distance - length;
  if (slack < 0 || slack > tolerance) {
    throw Error(ErrorCode::SpanMismatch, "beam length " + std::to_string(length) + " does not fit span " +
                                             std::to_string(s.distance) + " (tolerance " +
                                             std::to_string(tolerance) + ")");
  }
}

// Node of a group member, for anchoring things that start at it.
template <class Group>
Anchor member_node(const Group& g, const ColumnRef& ref) {
  const NodeRun run = node_run(g.start, g.end);
  return Anchor{run.h_lo + ref.iy - 1, run.v_lo + ref.ix - 1, 0, 0};
}

Anchor anchor_at(const AxisGrid& grid, Anchor node, Point world) {
  const Point n = grid.node(node.h_axis, node.v_axis);
  node.dx = world.x - n.x;
  node.dy = world.y - n.y;
  return node;
}

}  // namespace

Model place_beam(const Model& model, const BeamSpec& spec, const Catalog& catalog) {
  require_list(model, EntityList::Beams);
  const Dims3 d = resolve_dims(catalog, MarkFamily::Beam, spec.mark, spec.length_mm, spec.width_mm, spec.height_mm);
  const AxisGrid grid = resolve_grid(model);
  const auto a = column_center(model, grid, spec.end_a);
  const auto b = column_center(model, grid, spec.end_b);
  if (!a) throw Error(ErrorCode::UnknownColumn, "beam end A does not name an existing column", spec.end_a.group);
  if (!b) throw Error(ErrorCode::UnknownColumn, "beam end B does not name an existing column", spec.end_b.group);
  if (spec.end_a == spec.end_b) throw Error(ErrorCode::NotCollinear, "both beam ends rest on the same column");
  const Span span = measure_span(*a, *b);
  const ColumnRef lo = span.swapped ? spec.end_b : spec.end_a;
  const ColumnRef hi = span.swapped ? spec.end_a : spec.end_b;

  auto check_bearing = [&](const ColumnRef& ref, Dir dir) {
    const ColumnGroup* g = find_entity(model.column_groups, ref.group);
    if (!g->mark) return;
    const MarkRecord* r = catalog.lookup(MarkFamily::Column, *g->mark);
    if (!r || !r->bearing) return;
    if (!bears(*r->bearing, dir, g->along_x)) {
      throw Error(ErrorCode::UnbearableDirection,
                  "column mark '" + *g->mark + "' cannot carry a beam in this direction", g->id);
    }
  };
  check_bearing(lo, span.along_x ? Dir::PosX : Dir::PosY);
  check_bearing(hi, span.along_x ? Dir::NegX : Dir::NegY);
  check_span(span, d.length, model.settings.beam_span_tolerance_mm);

  const Mm lead = (span.distance - d.length) / 2;
  const Point start = span.along_x ? Point{span.lo.x + lead, span.lo.y} : Point{span.lo.x, span.lo.y + lead};

  Beam beam;
  beam.mark = spec.mark;
  beam.length_mm = d.length;
  beam.width_mm = d.width;
  beam.height_mm = d.height;
  beam.along_x = span.along_x;
  beam.is_new = spec.is_new;
  beam.end_a = lo;
  beam.end_b = hi;
  beam.anchor = anchor_at(grid, member_node(*find_entity(model.column_groups, lo.group), lo), start);

  Model next = model;
  beam.id = next.allocate_id();
  next.beams.push_back(std::move(beam));
  return next;
}

Model place_foundation_beam(const Model& model, const FoundationBeamSpec& spec, const Catalog& catalog) {
  require_list(model, EntityList::FoundationBeams);
  const Dims3 d =
      resolve_dims(catalog, MarkFamily::FoundationBeam, spec.mark, spec.length_mm, spec.width_mm, spec.height_mm);
  const AxisGrid grid = resolve_grid(model);
  const auto a = footing_center(model, grid, spec.end_a);
  const auto b = footing_center(model, grid, spec.end_b);
  if (!a) throw Error(ErrorCode::UnknownFooting, "beam end A does not name an existing footing", spec.end_a.group);
  if (!b) throw Error(ErrorCode::UnknownFooting, "beam end B does not name an existing footing", spec.end_b.group);
  if (spec.end_a == spec.end_b) throw Error(ErrorCode::NotCollinear, "both beam ends rest on the same footing");
  const Span span = measure_span(*a, *b);
  check_span(span, d.length, model.settings.beam_span_tolerance_mm);
  const FootingRef lo = span.swapped ? spec.end_b : spec.end_a;
  const FootingRef hi = span.swapped ? spec.end_a : spec.end_b;

  const FootingGroup& seat_group = *find_entity(model.footing_groups, lo.group);
  const Point extent = footing_extent(seat_group);
  const Mm across = span.along_x ? extent.y : extent.x;
  if (d.width > across) {
    throw Error(ErrorCode::UnbearableDirection, "beam is wider than the footing it rests on", seat_group.id);
  }
  // Left of travel is +Y for beams along X and -X for beams along Y.
  Mm lateral = 0;
  if (spec.seat != BeamSeat::Center) {
    const Mm shift = (across - d.width) / 2;
    const Mm left_sign = span.along_x ? 1 : -1;
    lateral = spec.seat == BeamSeat::LeftEdge ? left_sign * shift : -left_sign * shift;
  }
  const Mm lead = (span.distance - d.length) / 2;
  const Point start = span.along_x ? Point{span.lo.x + lead, span.lo.y + lateral}
                                   : Point{span.lo.x + lateral, span.lo.y + lead};

  FoundationBeam beam;
  beam.mark = spec.mark;
  beam.length_mm = d.length;
  beam.width_mm = d.width;
  beam.height_mm = d.height;
  beam.along_x = span.along_x;
  beam.is_new = spec.is_new;
  beam.end_a = lo;
  beam.seat = spec.seat;
  beam.end_b = hi;
  beam.anchor = anchor_at(grid, member_node(seat_group, lo), start);

  Model next = model;
  beam.id = next.allocate_id();
  next.foundation_beams.push_back(std::move(beam));
  return next;
}

// ---------------------------------------------------------------------------
// Slabs, texts

Model place_slab_group(const Model& model, const SlabGroupSpec& spec, const Catalog& catalog) {
  require_list(model, EntityList::SlabGroups);
  const Dims3 d = resolve_dims(catalog, MarkFamily::Slab, spec.mark, spec.length_mm, spec.width_mm, spec.height_mm);
  if (spec.count < 1) throw Error(ErrorCode::CountOutOfRange, "a slab group holds at least one slab");
  require_anchor(resolve_grid(model), spec.anchor);

  SlabGroup s;
  s.mark = spec.mark;
  s.length_mm = d.length;
  s.width_mm = d.width;
  s.height_mm = d.height;
  s.along_x = spec.along_x;
  s.anchor = spec.anchor;
  s.count = spec.count;

  Model next = model;
  s.id = next.allocate_id();
  next.slab_groups.push_back(std::move(s));
  return next;
}

Model place_text(const Model& model, const TextSpec& spec) {
  require_list(model, EntityList::Texts);
  if (spec.lines.empty()) throw Error(ErrorCode::InvalidValue, "a text note needs at least one line");
  require_positive(spec.font_height_mm, "font height");
  require_positive(spec.line_step_mm, "line step");
  TextNote t;
  t.lines = spec.lines;
  t.font_height_mm = spec.font_height_mm;
  t.line_step_mm = spec.line_step_mm;
  t.origin = spec.origin;
  t.leader_target = spec.leader_target;

  Model next = model;
  t.id = next.allocate_id();
  next.texts.push_back(std::move(t));
  return next;
}

// ---------------------------------------------------------------------------
// Deletion

Model delete_entity(const Model& model, EntityId id) {
  if (find_entity(model.axis_groups_h, id) || find_entity(model.axis_groups_v, id)) {
    return delete_axis_group(model, id);
  }
  Model next = model;
  auto drop = [&](auto& list) {
    return std::erase_if(list, [&](const auto& e) { return e.id == id; }) != 0;
  };
  if (drop(next.partitions)) {
    std::erase_if(next.openings, [&](const Opening& o) { return o.partition == id; });
  } else if (drop(next.column_groups)) {
    std::erase_if(next.beams, [&](const Beam& b) { return b.end_a.group == id || b.end_b.group == id; });
  } else if (drop(next.footing_groups)) {
    std::erase_if(next.foundation_beams,
                  [&](const FoundationBeam& b) { return b.end_a.group == id || b.end_b.group == id; });
  } else if (!(drop(next.openings) || drop(next.beams) || drop(next.slab_groups) ||
               drop(next.strip_foundations) || drop(next.foundation_beams) || drop(next.texts))) {
    throw Error(ErrorCode::UnknownEntity, "no entity " + id_text(id), id);
  }
  return next;
}

Model update_settings(const Model& model, const ModelSettings& settings) {
  Model next = model;
  next.settings = settings;
  finish(next);
  return next;
}

}  // namespace podo
