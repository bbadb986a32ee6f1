#include "podo/section.hpp"

#include <algorithm>
#include <cstdlib>

#include "podo/axes.hpp"
#include "podo/placement.hpp"

namespace podo {

namespace {

Mm floor_div2(Mm v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

struct Rect {
  Mm x0, y0, x1, y1;
};

Rect around(const BaseLine& line, bool along_x, Mm u_lo, Mm u_hi, Mm across) {
  const Mm lo = -across / 2;
  if (along_x) return {line.start.x + u_lo, line.start.y + lo, line.start.x + u_hi, line.start.y + lo + across};
  return {line.start.x + lo, line.start.y + u_lo, line.start.x + lo + across, line.start.y + u_hi};
}

Rect centered(Point c, Point extent) {
  const Mm x0 = c.x - extent.x / 2;
  const Mm y0 = c.y - extent.y / 2;
  return {x0, y0, x0 + extent.x, y0 + extent.y};
}

struct Leg {
  Point a;
  Point b;
  Mm s0 = 0;
  bool along_x = true;
  Mm length() const { return std::llabs(b.x - a.x) + std::llabs(b.y - a.y); }
  Mm u_of(Mm coord) const {
    const Mm from = along_x ? a.x : a.y;
    const Mm to = along_x ? b.x : b.y;
    return s0 + (to >= from ? coord - from : from - coord);
  }
};

std::vector<Leg> unfold(const std::vector<Point>& polyline) {
  if (polyline.size() < 2) throw Error(ErrorCode::EmptyPolyline, "a secant needs at least two vertices");
  std::vector<Leg> legs;
  Mm s = 0;
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    const Point a = polyline[i - 1];
    const Point b = polyline[i];
    if (a == b) throw Error(ErrorCode::InvalidValue, "zero-length secant segment");
    if (a.x != b.x && a.y != b.y) {
      throw Error(ErrorCode::NonAxisAlignedSegment, "secant segment " + std::to_string(i) + " is not along X or Y");
    }
    Leg leg{a, b, s, a.y == b.y};
    s += leg.length();
    legs.push_back(leg);
  }
  return legs;
}

struct Span {
  Mm u0, u1;
};

// Pieces of the unfolded secant that run through a footprint.
std::vector<Span> cut_spans(const std::vector<Leg>& legs, const Rect& r) {
  std::vector<Span> out;
  for (const auto& leg : legs) {
    const Mm c = leg.along_x ? leg.a.y : leg.a.x;
    const Mm lo = leg.along_x ? r.y0 : r.x0;
    const Mm hi = leg.along_x ? r.y1 : r.x1;
    if (c < lo || c >= hi) continue;
    const Mm from = leg.along_x ? std::min(leg.a.x, leg.b.x) : std::min(leg.a.y, leg.b.y);
    const Mm to = leg.along_x ? std::max(leg.a.x, leg.b.x) : std::max(leg.a.y, leg.b.y);
    const Mm a = std::max(from, leg.along_x ? r.x0 : r.y0);
    const Mm b = std::min(to, leg.along_x ? r.x1 : r.y1);
    if (b <= a) continue;
    const Mm ua = leg.u_of(a);
    const Mm ub = leg.u_of(b);
    out.push_back({std::min(ua, ub), std::max(ua, ub)});
  }
  return out;
}

// a minus b, both as (u, z) rectangles.
std::vector<SectionCut> subtract(const SectionCut& a, const SectionCut& b) {
  if (b.u1 <= a.u0 || a.u1 <= b.u0 || b.z1 <= a.z0 || a.z1 <= b.z0) return {a};
  std::vector<SectionCut> out;
  auto piece = [&](Mm u0, Mm u1, Mm z0, Mm z1) {
    if (u1 <= u0 || z1 <= z0) return;
    SectionCut c = a;
    c.u0 = u0;
    c.u1 = u1;
    c.z0 = z0;
    c.z1 = z1;
    out.push_back(c);
  };
  const Mm zl = std::max(a.z0, b.z0);
  const Mm zh = std::min(a.z1, b.z1);
  piece(a.u0, a.u1, a.z0, zl);
  piece(a.u0, a.u1, zh, a.z1);
  piece(a.u0, std::max(a.u0, b.u0), zl, zh);
  piece(std::min(a.u1, b.u1), a.u1, zl, zh);
  return out;
}

class Cutter {
 public:
  explicit Cutter(const std::vector<Leg>& legs) : legs_(legs) {}

  void add(CutKind kind, const std::string& plan, EntityId id, const Rect& r, Mm z0, Mm z1) {
    for (const auto& s : cut_spans(legs_, r)) cuts.push_back({kind, plan, id, s.u0, s.u1, z0, z1});
  }

  std::vector<SectionCut> cuts;

 private:
  const std::vector<Leg>& legs_;
};

Mm max_slab_height(const Model& m) {
  Mm h = 0;
  for (const auto& s : m.slab_groups) h = std::max(h, s.height_mm);
  return h;
}

void cut_slabs_and_beams(Cutter& cutter, const std::string& ref, const Model& m, Mm slab_z0, Mm beam_top) {
  const AxisGrid grid = resolve_grid(m);
  for (const auto& b : m.beams) {
    cutter.add(CutKind::Beam, ref, b.id, around(beam_line(grid, b), b.along_x, 0, b.length_mm, b.width_mm),
               beam_top - b.height_mm, beam_top);
  }
  for (const auto& s : m.slab_groups) {
    const Point o = grid.at(s.anchor);
    for (int i = 0; i < s.count; ++i) {
      const Mm a = s.width_mm * i;
      const Rect r = s.along_x ? Rect{o.x, o.y + a, o.x + s.length_mm, o.y + a + s.width_mm}
                               : Rect{o.x + a, o.y, o.x + a + s.width_mm, o.y + s.length_mm};
      cutter.add(CutKind::Slab, ref, s.id, r, slab_z0, slab_z0 + s.height_mm);
    }
  }
}

// Openings that do not reach the floor get a 900 mm sill unless the
// section data says otherwise.
Mm default_sill(const Opening& o) {
  switch (o.gost_type) {
    case 2:
    case 4:
    case 5:
    case 6:
      return kDefaultSillMm;
    default:
      return 0;
  }
}

void cut_floor(Cutter& cutter, const std::string& ref, const Model& m, Mm level, Mm top) {
  const AxisGrid grid = resolve_grid(m);
  for (const auto& g : m.column_groups) {
    const Point ext = column_extent(g);
    for (const auto& member : column_positions(grid, g)) {
      cutter.add(CutKind::Column, ref, g.id, centered(member.center, ext), level, top);
    }
  }
  for (const auto& p : m.partitions) {
    const BaseLine line = partition_base_line(grid, p);
    Cutter walls = cutter;
    walls.cuts.clear();
    walls.add(CutKind::Wall, ref, p.id, around(line, p.along_x, 0, p.length_mm, p.thickness_mm), level, top);

    std::vector<SectionCut> extras;
    for (const auto& o : m.openings) {
      if (o.partition != p.id) continue;
      const Mm sill = o.section_extra ? o.section_extra->sill_height_mm : default_sill(o);
      const Mm height = o.section_extra ? o.section_extra->opening_height_mm : o.height_mm;
      const Mm z0 = level + sill;
      const Mm z1 = z0 + height;
      const Mm u0 = o.anchor_offset_mm;
      const Mm u1 = u0 + o.width_mm;
      Cutter local = cutter;
      local.cuts.clear();
      local.add(CutKind::OpeningVoid, ref, o.id, around(line, p.along_x, u0, u1, p.thickness_mm), z0, z1);
      if (o.section_extra && o.section_extra->transom && o.section_extra->transom->height_mm > 0) {
        local.add(CutKind::Transom, ref, o.id, around(line, p.along_x, u0, u1, p.thickness_mm),
                  z1 - o.section_extra->transom->height_mm, z1);
      }
      if (o.section_extra && o.section_extra->lintel && o.section_extra->lintel->height_mm > 0) {
        const auto& lintel = *o.section_extra->lintel;
        const Mm overhang = std::max<Mm>(0, (lintel.length_mm - o.width_mm) / 2);
        const Mm across = lintel.width_mm > 0 ? lintel.width_mm : p.thickness_mm;
        local.add(CutKind::Lintel, ref, o.id, around(line, p.along_x, u0 - overhang, u1 + overhang, across), z1,
                  z1 + lintel.height_mm);
      }
      extras.insert(extras.end(), local.cuts.begin(), local.cuts.end());
    }

    // Voids and lintels are carved out of the wall.
    std::vector<SectionCut> pieces = walls.cuts;
    for (const auto& e : extras) {
      if (e.kind != CutKind::OpeningVoid && e.kind != CutKind::Lintel) continue;
      std::vector<SectionCut> next;
      for (const auto& w : pieces) {
        auto rest = subtract(w, e);
        next.insert(next.end(), rest.begin(), rest.end());
      }
      pieces = std::move(next);
    }
    cutter.cuts.insert(cutter.cuts.end(), pieces.begin(), pieces.end());
    cutter.cuts.insert(cutter.cuts.end(), extras.begin(), extras.end());
  }
}

void cut_foundation(Cutter& cutter, const std::string& ref, const Model& m, Mm sole, Mm ground) {
  const AxisGrid grid = resolve_grid(m);
  for (const auto& g : m.footing_groups) {
    const Point ext = footing_extent(g);
    for (const auto& member : footing_positions(grid, g)) {
      cutter.add(CutKind::Footing, ref, g.id, centered(member.center, ext), sole, sole + g.height_mm);
    }
  }
  for (const auto& s : m.strip_foundations) {
    cutter.add(CutKind::Strip, ref, s.id, around(strip_base_line(grid, s), s.along_x, 0, s.length_mm, s.width_mm),
               sole, ground);
  }
  for (const auto& b : m.foundation_beams) {
    cutter.add(CutKind::FoundationBeam, ref, b.id,
               around(foundation_beam_line(grid, b), b.along_x, 0, b.length_mm, b.width_mm), ground - b.height_mm,
               ground);
  }
}

const Model& plan_of(const std::map<std::string, Model>& plans, const std::string& ref, PlanKind kind) {
  const auto it = plans.find(ref);
  if (it == plans.end()) throw Error(ErrorCode::DanglingPlanRef, "section refers to unknown plan '" + ref + "'");
  if (it->second.kind != kind) {
    throw Error(ErrorCode::WrongKind, "plan '" + ref + "' is a " + std::string(plan_kind_name(it->second.kind)) +
                                          " plan, expected " + std::string(plan_kind_name(kind)));
  }
  return it->second;
}

Mm storey_top(const SectionSpec& spec, std::size_t i) {
  if (i + 1 < spec.floors.size()) return spec.floors[i + 1].level_mm;
  if (spec.roof) return spec.roof->underside_level_mm;
  if (spec.top_level_mm) return *spec.top_level_mm;
  return spec.floors[i].level_mm + kDefaultStoreyHeight;
}

Style cut_style(CutKind kind) {
  switch (kind) {
    case CutKind::OpeningVoid:
    case CutKind::Transom:
      return {Weight::Thin, Pattern::Solid};
    default:
      return {Weight::Thick, Pattern::Solid};
  }
}

}  // namespace

std::string_view cut_kind_name(CutKind kind) {
  switch (kind) {
    case CutKind::Wall: return "wall";
    case CutKind::OpeningVoid: return "opening_void";
    case CutKind::Lintel: return "lintel";
    case CutKind::Transom: return "transom";
    case CutKind::Column: return "column";
    case CutKind::Footing: return "footing";
    case CutKind::Strip: return "strip";
    case CutKind::FoundationBeam: return "foundation_beam";
    case CutKind::Beam: return "beam";
    case CutKind::Slab: return "slab";
  }
  return "wall";
}

std::string format_elevation(Mm level_mm) {
  const Mm magnitude = std::llabs(level_mm);
  std::string frac = std::to_string(magnitude % 1000);
  frac.insert(0, 3 - frac.size(), '0');
  const std::string body = std::to_string(magnitude / 1000) + "." + frac;
  if (level_mm == 0) return "\xC2\xB1" + body;
  return (level_mm > 0 ? "+" : "\xE2\x88\x92") + body;
}

void check_section_spec(const SectionSpec& spec, const std::map<std::string, Model>& plans) {
  if (spec.floors.empty()) throw Error(ErrorCode::InvalidValue, "a section needs at least one floor");
  if (spec.scale <= 0) throw Error(ErrorCode::InvalidValue, "section scale must be positive");
  unfold(spec.secant.polyline);

  std::vector<Mm> levels;
  if (spec.foundation) {
    plan_of(plans, spec.foundation->plan, PlanKind::Foundation);
    levels.push_back(spec.foundation->sole_level_mm);
  }
  for (std::size_t i = 0; i < spec.floors.size(); ++i) {
    const auto& f = spec.floors[i];
    plan_of(plans, f.plan, PlanKind::Floor);
    if (f.ceiling_plan) {
      if (i == 0) throw Error(ErrorCode::InvalidValue, "the first storey cannot take a ceiling plan as its floor");
      plan_of(plans, *f.ceiling_plan, PlanKind::Ceiling);
    }
    levels.push_back(f.level_mm);
  }
  if (spec.roof) {
    plan_of(plans, spec.roof->plan, PlanKind::Ceiling);
    levels.push_back(spec.roof->underside_level_mm);
  }
  if (spec.top_level_mm) levels.push_back(*spec.top_level_mm);
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i] <= levels[i - 1]) {
      throw Error(ErrorCode::InvalidValue, "section levels must increase from bottom to top");
    }
  }
}

SectionResult generate_section(const SectionSpec& spec, const std::map<std::string, Model>& plans) {
  check_section_spec(spec, plans);
  const auto legs = unfold(spec.secant.polyline);
  const Mm total = legs.back().s0 + legs.back().length();
  const Model& ground_floor = plans.at(spec.floors.front().plan);
  const ModelSettings& settings = ground_floor.settings;

  SectionResult result;
  Cutter cutter(legs);
  std::vector<Mm> levels;
  if (spec.foundation) {
    cut_foundation(cutter, spec.foundation->plan, plans.at(spec.foundation->plan), spec.foundation->sole_level_mm,
                   spec.floors.front().level_mm);
    levels.push_back(spec.foundation->sole_level_mm);
  }
  for (std::size_t i = 0; i < spec.floors.size(); ++i) {
    const auto& f = spec.floors[i];
    if (f.ceiling_plan) {
      const Model& slab_plan = plans.at(*f.ceiling_plan);
      const Mm slab = max_slab_height(slab_plan);
      cut_slabs_and_beams(cutter, *f.ceiling_plan, slab_plan, f.level_mm - slab, f.level_mm - slab);
    }
    cut_floor(cutter, f.plan, plans.at(f.plan), f.level_mm, storey_top(spec, i));
    levels.push_back(f.level_mm);
  }
  if (spec.roof) {
    const Mm r = spec.roof->underside_level_mm;
    cut_slabs_and_beams(cutter, spec.roof->plan, plans.at(spec.roof->plan), r, r);
    levels.push_back(r);
  }
  result.cuts = std::move(cutter.cuts);
  if (spec.secant.view == ViewDirection::RightOfTravel) {
    for (auto& c : result.cuts) {
      const Mm u0 = total - c.u1;
      c.u1 = total - c.u0;
      c.u0 = u0;
    }
  }
  if (result.cuts.empty()) result.warnings.push_back("EmptySecantIntersection");

  Mm z_lo = levels.front();
  Mm z_hi = storey_top(spec, spec.floors.size() - 1);
  for (const auto& c : result.cuts) {
    z_lo = std::min(z_lo, c.z0);
    z_hi = std::max(z_hi, c.z1);
  }

  auto& out = result.display;
  const Mm font = settings.gen_font_height_mm;
  const Mm r = font * 3 / 2;
  const Mm reach = settings.dim_offset_mm;

  // Axes crossed by the secant.
  const AxisGrid grid = resolve_grid(ground_floor);
  std::vector<std::pair<Mm, const ResolvedAxis*>> crossings;
  for (const auto& leg : legs) {
    const auto& axes = leg.along_x ? grid.v : grid.h;
    const Mm from = leg.along_x ? std::min(leg.a.x, leg.b.x) : std::min(leg.a.y, leg.b.y);
    const Mm to = leg.along_x ? std::max(leg.a.x, leg.b.x) : std::max(leg.a.y, leg.b.y);
    for (const auto& a : axes) {
      if (a.coord < from || a.coord > to) continue;
      Mm u = leg.u_of(a.coord);
      if (spec.secant.view == ViewDirection::RightOfTravel) u = total - u;
      const bool seen = std::any_of(crossings.begin(), crossings.end(), [&](const auto& c) { return c.first == u; });
      if (!seen) crossings.emplace_back(u, &a);
    }
  }
  std::stable_sort(crossings.begin(), crossings.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  const Style axis_style{Weight::Thin, Pattern::AxisDashDot};
  for (const auto& [u, axis] : crossings) {
    out.add(Segment{{u, z_lo - reach}, {u, z_hi + reach}}, axis_style, axis->group);
    out.add(AxisBubble{{u, z_lo - reach - r}, r, axis->label, font}, Style{}, axis->group);
  }

  // Elevation marks on the left.
  std::vector<Mm> sorted = levels;
  std::sort(sorted.begin(), sorted.end());
  const Mm mark_x = -reach;
  for (Mm z : sorted) {
    const std::string text = format_elevation(z);
    result.level_marks.push_back(text);
    out.add(Segment{{mark_x, z}, {mark_x - font, z + font}});
    out.add(Segment{{mark_x - font, z + font}, {mark_x + font, z + font}});
    out.add(Segment{{mark_x + font, z + font}, {mark_x, z}});
    out.add(Segment{{mark_x, z}, {mark_x - font * 6, z}});
    out.add(TextPrim{{mark_x - font * 6, z + font * 3 / 2}, font, text});
    out.add(Segment{{0, z}, {total, z}}, Style{Weight::Thin, Pattern::Dashed});
  }

  for (const auto& c : result.cuts) {
    if (c.kind == CutKind::OpeningVoid) continue;
    const Style style = cut_style(c.kind);
    out.add(Segment{{c.u0, c.z0}, {c.u1, c.z0}}, style, c.entity);
    out.add(Segment{{c.u1, c.z0}, {c.u1, c.z1}}, style, c.entity);
    out.add(Segment{{c.u1, c.z1}, {c.u0, c.z1}}, style, c.entity);
    out.add(Segment{{c.u0, c.z1}, {c.u0, c.z0}}, style, c.entity);
    if (c.kind == CutKind::Transom) {
      const Mm mid = c.z0 + (c.z1 - c.z0) / 2;
      out.add(Segment{{c.u0, mid}, {c.u1, mid}}, style, c.entity);
    }
  }

  out.add(TextPrim{{total / 2, z_lo - reach - 2 * r - font * 3}, font * 2, spec.letter + "-" + spec.letter, 0,
                   TextAlign::Center});
  return result;
}

Secant step_secant(const Secant& secant, SecantAction action, Mm step_mm) {
  const auto legs = unfold(secant.polyline);
  Secant out = secant;
  if (action == SecantAction::Rotate90) {
    if (legs.size() != 1) throw Error(ErrorCode::RotateOnPolyline, "only a single-segment secant can be rotated");
    const Leg& leg = legs.front();
    const Mm len = leg.length();
    const Mm half = len / 2;
    if (leg.along_x) {
      const Mm x = floor_div2(leg.a.x + leg.b.x);
      const Mm y0 = leg.a.y - half;
      out.polyline = {{x, y0}, {x, y0 + len}};
    } else {
      const Mm y = floor_div2(leg.a.y + leg.b.y);
      const Mm x0 = leg.a.x - half;
      out.polyline = {{x0, y}, {x0 + len, y}};
    }
    return out;
  }
  const Mm d = action == SecantAction::ShiftForward ? step_mm : -step_mm;
  const Point shift = legs.front().along_x ? Point{0, d} : Point{d, 0};
  for (auto& p : out.polyline) p = p + shift;
  return out;
}

}  // namespace podo
