#include "podo/drafting.hpp"

#include <algorithm>

#include "podo/axes.hpp"
#include "podo/placement.hpp"

namespace podo {

namespace {

Style entity_style(bool is_new, Pattern pattern = Pattern::Solid) {
  return {is_new ? Weight::Thick : Weight::Thin, pattern};
}

// Local (u along, v across) frame of a linear entity. For entities running
// along Y, +v points to -X so the frame stays right-handed.
struct Frame {
  Point origin;
  bool along_x = true;

  Point at(Mm u, Mm v) const {
    return along_x ? Point{origin.x + u, origin.y + v} : Point{origin.x - v, origin.y + u};
  }
  int angle(int local_deg) const {
    const int a = local_deg + (along_x ? 0 : 90);
    return ((a % 360) + 360) % 360;
  }
};

void add_segment(DisplayList& out, const Frame& f, Mm u0, Mm v0, Mm u1, Mm v1, Style style, EntityId owner) {
  out.add(Segment{f.at(u0, v0), f.at(u1, v1)}, style, owner);
}

void add_rect(DisplayList& out, const Frame& f, Mm u0, Mm v0, Mm u1, Mm v1, Style style, EntityId owner) {
  add_segment(out, f, u0, v0, u1, v0, style, owner);
  add_segment(out, f, u1, v0, u1, v1, style, owner);
  add_segment(out, f, u1, v1, u0, v1, style, owner);
  add_segment(out, f, u0, v1, u0, v0, style, owner);
}

// Quarter arc between two local directions given in degrees (multiples of 90).
void add_quarter(DisplayList& out, const Frame& f, Mm u, Mm v, Mm r, int dir_a, int dir_b, Style style,
                 EntityId owner) {
  const int a = f.angle(dir_a);
  const int b = f.angle(dir_b);
  const int start = (a + 90) % 360 == b ? a : b;
  out.add(Arc{f.at(u, v), r, start, start + 90}, style, owner);
}

struct Extent {
  Mm lo = 0;
  Mm hi = 0;
};

Extent coord_extent(const std::vector<ResolvedAxis>& axes) {
  if (axes.empty()) return {};
  return {axes.front().coord, axes.back().coord};
}

std::vector<const ResolvedAxis*> main_axes(const std::vector<ResolvedAxis>& axes) {
  std::vector<const ResolvedAxis*> out;
  for (const auto& a : axes) {
    if (a.main) out.push_back(&a);
  }
  return out;
}

bool measures_h(Side side) { return side == Side::Left || side == Side::Right; }

std::vector<DimLinear> span_dimensions(const Model& model, const AxisGrid& grid, Side side) {
  const bool h = measures_h(side);
  const auto mains = main_axes(h ? grid.h : grid.v);
  if (mains.size() < 2) {
    throw Error(ErrorCode::TooFewAxes, std::string("span dimensions need two main ") + (h ? "horizontal" : "vertical") +
                                           " axes");
  }
  const Extent across = coord_extent(h ? grid.v : grid.h);
  const bool low = side == Side::Left || side == Side::Bottom;
  const Mm base = low ? across.lo : across.hi;
  const Mm offset = low ? -model.settings.dim_offset_mm : model.settings.dim_offset_mm;
  std::vector<DimLinear> out;
  for (std::size_t i = 1; i < mains.size(); ++i) {
    DimLinear d;
    const Mm c0 = mains[i - 1]->coord;
    const Mm c1 = mains[i]->coord;
    d.p1 = h ? Point{base, c0} : Point{c0, base};
    d.p2 = h ? Point{base, c1} : Point{c1, base};
    d.offset = offset;
    d.text = std::to_string(c1 - c0);
    d.text_height = model.settings.gen_font_height_mm;
    out.push_back(std::move(d));
  }
  return out;
}

DimLinear overall_dimension(const Model& model, const AxisGrid& grid, Side side) {
  const auto spans = span_dimensions(model, grid, side);
  DimLinear d = spans.front();
  d.p2 = spans.back().p2;
  d.offset *= 2;
  d.text = std::to_string(d.measured());
  return d;
}

Side default_side(const Model& model, Orientation o) {
  if (o == Orientation::H) return Side::Left;
  return model.settings.horiz_dims_above ? Side::Top : Side::Bottom;
}

bool has_side(const std::vector<Side>& sides, Side s) { return std::find(sides.begin(), sides.end(), s) != sides.end(); }

void draw_axes(DisplayList& out, const Model& model, const AxisGrid& grid, const std::vector<Side>& sides) {
  const Mm reach = model.settings.axis_label_offset_mm;
  const Mm font = model.settings.gen_font_height_mm;
  const Mm r = font * 3 / 2;
  const Style axis_style{Weight::Thin, Pattern::AxisDashDot};
  const Style bubble_style{Weight::Thin, Pattern::Solid};

  const Extent xs = coord_extent(grid.v);
  const Extent ys = coord_extent(grid.h);
  for (const auto& a : grid.h) {
    const Mm x0 = xs.lo - reach;
    const Mm x1 = xs.hi + reach;
    out.add(Segment{{x0, a.coord}, {x1, a.coord}}, axis_style, a.group);
    if (has_side(sides, Side::Left)) out.add(AxisBubble{{x0 - r, a.coord}, r, a.label, font}, bubble_style, a.group);
    if (has_side(sides, Side::Right)) out.add(AxisBubble{{x1 + r, a.coord}, r, a.label, font}, bubble_style, a.group);
  }
  for (const auto& a : grid.v) {
    const Mm y0 = ys.lo - reach;
    const Mm y1 = ys.hi + reach;
    out.add(Segment{{a.coord, y0}, {a.coord, y1}}, axis_style, a.group);
    if (has_side(sides, Side::Bottom)) out.add(AxisBubble{{a.coord, y0 - r}, r, a.label, font}, bubble_style, a.group);
    if (has_side(sides, Side::Top)) out.add(AxisBubble{{a.coord, y1 + r}, r, a.label, font}, bubble_style, a.group);
  }
}

void draw_column(DisplayList& out, const ColumnGroup& g, Point center) {
  const Style style = entity_style(g.is_new);
  const Frame f{center, g.along_x};
  const Mm w = g.width_mm;
  const Mm t = g.thickness_mm;
  const Mm u0 = -w / 2, v0 = -t / 2;
  const Mm u1 = u0 + w, v1 = v0 + t;
  const ColumnType type = g.unmarked_type.value_or(ColumnType::RcPlain);

  if (type == ColumnType::MetalTwoBranch) {
    const Mm branch = w / 4;
    add_rect(out, f, u0, v0, u0 + branch, v1, style, g.id);
    add_rect(out, f, u1 - branch, v0, u1, v1, style, g.id);
    const Style lattice = entity_style(g.is_new, Pattern::Dashed);
    add_segment(out, f, u0 + branch, v0, u1 - branch, v0, lattice, g.id);
    add_segment(out, f, u0 + branch, v1, u1 - branch, v1, lattice, g.id);
    return;
  }
  add_rect(out, f, u0, v0, u1, v1, style, g.id);
  if (type == ColumnType::MetalSolid) {
    add_segment(out, f, u0, v0, u1, v1, style, g.id);
    add_segment(out, f, u0, v1, u1, v0, style, g.id);
  }
  const Mm console = g.console_len_mm.value_or(0);
  if (console > 0 && (type == ColumnType::RcOneConsole || type == ColumnType::RcTwoConsole)) {
    const Mm cv0 = -t / 4, cv1 = cv0 + t / 2;
    const bool left = type == ColumnType::RcTwoConsole || g.console_left;
    const bool right = type == ColumnType::RcTwoConsole || !g.console_left;
    if (right) add_rect(out, f, u1, cv0, u1 + console, cv1, style, g.id);
    if (left) add_rect(out, f, u0 - console, cv0, u0, cv1, style, g.id);
  }
}

// Pieces of [0, length] not covered by the (sorted, disjoint) gaps.
std::vector<std::pair<Mm, Mm>> solid_parts(Mm length, const std::vector<std::pair<Mm, Mm>>& gaps) {
  std::vector<std::pair<Mm, Mm>> out;
  Mm cursor = 0;
  for (const auto& [lo, hi] : gaps) {
    if (lo > cursor) out.emplace_back(cursor, lo);
    cursor = std::max(cursor, hi);
  }
  if (cursor < length) out.emplace_back(cursor, length);
  return out;
}

bool in_gap(Mm lo, Mm hi, const std::vector<std::pair<Mm, Mm>>& gaps) {
  for (const auto& [g0, g1] : gaps) {
    if (lo <= g1 && g0 <= hi) return true;
  }
  return false;
}

std::vector<std::pair<Mm, Mm>> opening_gaps(const Model& model, EntityId partition) {
  std::vector<std::pair<Mm, Mm>> gaps;
  for (const auto& o : model.openings) {
    if (o.partition == partition) gaps.emplace_back(o.anchor_offset_mm, o.anchor_offset_mm + o.width_mm);
  }
  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

void draw_partition(DisplayList& out, const Model& model, const AxisGrid& grid, const Partition& p) {
  const Style style = entity_style(p.is_new);
  const BaseLine line = partition_base_line(grid, p);
  const Frame f{line.start, p.along_x};
  const Mm t = p.thickness_mm;
  const Mm lo = -t / 2, hi = lo + t;
  const Mm len = p.length_mm;
  const auto gaps = opening_gaps(model, p.id);
  const auto parts = solid_parts(len, gaps);

  std::vector<Mm> lines{lo, hi};
  if (p.gost_type == PartitionType::Glazed1) lines = {lo, lo + t / 2, hi};
  if (p.gost_type == PartitionType::Glazed2) lines = {lo, lo + t / 3, hi - t / 3, hi};
  for (Mm v : lines) {
    for (const auto& [a, b] : parts) add_segment(out, f, a, v, b, v, style, p.id);
  }
  add_segment(out, f, 0, lo, 0, hi, style, p.id);
  add_segment(out, f, len, lo, len, hi, style, p.id);

  switch (p.gost_type) {
    case PartitionType::PanelShield: {
      const Style dashed = entity_style(p.is_new, Pattern::Dashed);
      for (const auto& [a, b] : parts) add_segment(out, f, a, lo + t / 2, b, lo + t / 2, dashed, p.id);
      break;
    }
    case PartitionType::GlassBlock: {
      constexpr Mm kPitch = 500;
      for (Mm u = kPitch; u < len; u += kPitch) {
        if (!in_gap(u, u, gaps)) add_segment(out, f, u, lo, u, hi, style, p.id);
      }
      break;
    }
    case PartitionType::Brick: {
      constexpr Mm kPitch = 300;
      for (Mm u = 0; u + t <= len; u += kPitch) {
        if (!in_gap(u, u + t, gaps)) add_segment(out, f, u, lo, u + t, hi, style, p.id);
      }
      break;
    }
    default:
      break;
  }
}

void draw_opening(DisplayList& out, const AxisGrid& grid, const Partition& host, const Opening& o) {
  const Style style = entity_style(o.is_new);
  const Frame f{partition_base_line(grid, host).start, host.along_x};
  const Mm t = host.thickness_mm;
  const Mm lo = -t / 2, hi = lo + t;
  const Mm u0 = o.anchor_offset_mm;
  const Mm w = o.width_mm;
  const Mm u1 = u0 + w;
  add_segment(out, f, u0, lo, u0, hi, style, o.id);
  add_segment(out, f, u1, lo, u1, hi, style, o.id);

  // rot180 turns the glyph about the opening center, flip_side mirrors it
  // across the partition.
  const bool hinge_at_end = o.rot180;
  const Mm s = (o.rot180 != o.flip_side) ? -1 : 1;
  const Mm face = s > 0 ? hi : lo;
  const int open_dir = s > 0 ? 90 : 270;

  switch (opening_type_info(o.gost_type).glyph) {
    case OpeningGlyph::Plain:
      break;
    case OpeningGlyph::Window: {
      const Mm v0 = lo + t / 3, v1 = hi - t / 3;
      add_segment(out, f, u0, v0, u1, v0, style, o.id);
      add_segment(out, f, u0, v1, u1, v1, style, o.id);
      break;
    }
    case OpeningGlyph::Door: {
      const Mm hinge = hinge_at_end ? u1 : u0;
      add_segment(out, f, hinge, face, hinge, face + s * w, style, o.id);
      add_quarter(out, f, hinge, face, w, hinge_at_end ? 180 : 0, open_dir, style, o.id);
      break;
    }
    case OpeningGlyph::DoubleDoor: {
      const Mm leaf = w / 2;
      add_segment(out, f, u0, face, u0, face + s * leaf, style, o.id);
      add_quarter(out, f, u0, face, leaf, 0, open_dir, style, o.id);
      add_segment(out, f, u1, face, u1, face + s * (w - leaf), style, o.id);
      add_quarter(out, f, u1, face, w - leaf, 180, open_dir, style, o.id);
      break;
    }
    case OpeningGlyph::FoldingDoor: {
      const Mm depth = s * w / 8;
      const Mm panel = w / 4;
      const Mm first = hinge_at_end ? u1 : u0;
      const Mm step = hinge_at_end ? -panel : panel;
      for (int k = 0; k < 4; ++k) {
        const Mm a = first + step * k;
        const Mm b = k == 3 ? (hinge_at_end ? u0 : u1) : a + step;
        add_segment(out, f, a, face + (k % 2 ? depth : 0), b, face + (k % 2 ? 0 : depth), style, o.id);
      }
      break;
    }
  }
}

void draw_linear_body(DisplayList& out, const BaseLine& line, bool along_x, Mm length, Mm width, Style style,
                      EntityId owner) {
  const Frame f{line.start, along_x};
  const Mm lo = -width / 2;
  add_rect(out, f, 0, lo, length, lo + width, style, owner);
}

void draw_slabs(DisplayList& out, const AxisGrid& grid, const SlabGroup& s) {
  const Style style = entity_style(false);
  const Frame f{grid.at(s.anchor), true};
  for (int i = 0; i < s.count; ++i) {
    const Mm across = s.width_mm * i;
    const Mm u0 = s.along_x ? 0 : across;
    const Mm v0 = s.along_x ? across : 0;
    const Mm u1 = u0 + (s.along_x ? s.length_mm : s.width_mm);
    const Mm v1 = v0 + (s.along_x ? s.width_mm : s.length_mm);
    add_rect(out, f, u0, v0, u1, v1, style, s.id);
    add_segment(out, f, u0, v0, u1, v1, style, s.id);
  }
}

void draw_strip(DisplayList& out, const AxisGrid& grid, const StripFoundation& s) {
  draw_linear_body(out, strip_base_line(grid, s), s.along_x, s.length_mm, s.width_mm, entity_style(s.is_new), s.id);
}

void draw_footings(DisplayList& out, const AxisGrid& grid, const FootingGroup& g) {
  const Style style = entity_style(g.is_new);
  const Point ext = footing_extent(g);
  for (const auto& m : footing_positions(grid, g)) {
    const Frame f{m.center, true};
    const Mm u0 = -ext.x / 2, v0 = -ext.y / 2;
    add_rect(out, f, u0, v0, u0 + ext.x, v0 + ext.y, style, g.id);
  }
}

}  // namespace

std::string_view side_name(Side side) {
  switch (side) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::Bottom: return "bottom";
    case Side::Top: return "top";
  }
  return "left";
}

std::vector<Side> effective_sides(const Model& model, const PlanOptions& options) {
  if (!options.sides.empty()) return options.sides;
  return {default_side(model, Orientation::H), default_side(model, Orientation::V)};
}

std::vector<DimLinear> generate_span_dimensions(const Model& model, Side side) {
  return span_dimensions(model, resolve_grid(model), side);
}

DimLinear generate_overall_dimension(const Model& model, Side side) {
  return overall_dimension(model, resolve_grid(model), side);
}

DimLinear generate_overall_dimension(const Model& model, Orientation orientation) {
  return generate_overall_dimension(model, default_side(model, orientation));
}

std::vector<DimLinear> dimension_partition(const Model& model, EntityId partition_id) {
  const Partition* p = find_entity(model.partitions, partition_id);
  if (!p) throw Error(ErrorCode::UnknownEntity, "no partition " + std::to_string(partition_id.value), partition_id);
  const BaseLine line = partition_base_line(resolve_grid(model), *p);
  const Frame f{line.start, p->along_x};
  const Mm offset_v = p->thickness_mm / 2 + model.settings.dim_offset_mm / 2;
  // Offsets are along +Y for horizontal dims and +X for vertical ones; the
  // frame's +v is -X for partitions along Y.
  const Mm offset = p->along_x ? offset_v : -offset_v;

  std::vector<std::pair<Mm, Mm>> pieces;
  Mm cursor = 0;
  for (const auto& [lo, hi] : opening_gaps(model, p->id)) {
    if (lo > cursor) pieces.emplace_back(cursor, lo);
    pieces.emplace_back(lo, hi);
    cursor = hi;
  }
  if (cursor < p->length_mm) pieces.emplace_back(cursor, p->length_mm);

  std::vector<DimLinear> out;
  for (const auto& [a, b] : pieces) {
    DimLinear d;
    d.p1 = f.at(a, 0);
    d.p2 = f.at(b, 0);
    d.offset = offset;
    d.text = std::to_string(b - a);
    d.text_height = model.settings.gen_font_height_mm;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<DimLinear> dimension_slab_group(const Model& model, EntityId group_id) {
  const SlabGroup* s = find_entity(model.slab_groups, group_id);
  if (!s) throw Error(ErrorCode::UnknownEntity, "no slab group " + std::to_string(group_id.value), group_id);
  const Point origin = resolve_grid(model).at(s->anchor);
  std::vector<DimLinear> out;
  for (int i = 0; i < s->count; ++i) {
    const Mm a = s->width_mm * i;
    const Mm b = a + s->width_mm;
    DimLinear d;
    d.p1 = s->along_x ? Point{origin.x, origin.y + a} : Point{origin.x + a, origin.y};
    d.p2 = s->along_x ? Point{origin.x, origin.y + b} : Point{origin.x + b, origin.y};
    d.offset = -model.settings.dim_offset_mm / 2;
    d.text = std::to_string(s->width_mm);
    d.text_height = model.settings.gen_font_height_mm;
    out.push_back(std::move(d));
  }
  return out;
}

DisplayList generate_plan_display(const Model& model, const PlanOptions& options) {
  DisplayList out;
  const AxisGrid grid = resolve_grid(model);
  const auto sides = effective_sides(model, options);

  draw_axes(out, model, grid, sides);

  const Style dim_style{};
  for (Side side : sides) {
    const auto& axes = measures_h(side) ? grid.h : grid.v;
    if (main_axes(axes).size() < 2) continue;
    if (options.span_dims) {
      for (auto& d : span_dimensions(model, grid, side)) out.add(std::move(d), dim_style);
    }
    if (options.overall) out.add(overall_dimension(model, grid, side), dim_style);
  }
  if (options.partition_dims) {
    for (const auto& p : model.partitions) {
      for (auto& d : dimension_partition(model, p.id)) out.add(std::move(d), dim_style, p.id);
    }
  }
  if (options.slab_dims) {
    for (const auto& s : model.slab_groups) {
      for (auto& d : dimension_slab_group(model, s.id)) out.add(std::move(d), dim_style, s.id);
    }
  }

  for (const auto& g : model.column_groups) {
    for (const auto& m : column_positions(grid, g)) draw_column(out, g, m.center);
  }
  for (const auto& p : model.partitions) draw_partition(out, model, grid, p);
  for (const auto& o : model.openings) {
    if (const Partition* host = find_entity(model.partitions, o.partition)) draw_opening(out, grid, *host, o);
  }
  for (const auto& b : model.beams) {
    draw_linear_body(out, beam_line(grid, b), b.along_x, b.length_mm, b.width_mm, entity_style(b.is_new), b.id);
  }
  for (const auto& s : model.slab_groups) draw_slabs(out, grid, s);
  for (const auto& s : model.strip_foundations) draw_strip(out, grid, s);
  for (const auto& g : model.footing_groups) draw_footings(out, grid, g);
  for (const auto& b : model.foundation_beams) {
    draw_linear_body(out, foundation_beam_line(grid, b), b.along_x, b.length_mm, b.width_mm,
                     entity_style(b.is_new), b.id);
  }
  for (const auto& t : model.texts) {
    std::string text;
    for (std::size_t i = 0; i < t.lines.size(); ++i) text += (i ? "\n" : "") + t.lines[i];
    out.add(Leader{{t.leader_target, t.origin}, text, t.font_height_mm, t.line_step_mm}, Style{}, t.id);
  }
  return out;
}

}  // namespace podo
