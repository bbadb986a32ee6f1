#include "podo/derive.hpp"

#include <map>

namespace podo {

namespace {

void require_floor(const Model& m) {
  if (m.kind != PlanKind::Floor) {
    throw Error(ErrorCode::WrongKind, "plans are derived from a floor plan, got " + std::string(plan_kind_name(m.kind)));
  }
}

Model axes_only(const Model& floor, PlanKind kind) {
  Model out;
  out.kind = kind;
  out.settings = floor.settings;
  out.axis_groups_h = floor.axis_groups_h;
  out.axis_groups_v = floor.axis_groups_v;
  out.next_id = floor.next_id;
  return out;
}

}  // namespace

Model derive_foundation_plan(const Model& floor, const FoundationDeriveOptions& options) {
  require_floor(floor);
  Model out = axes_only(floor, PlanKind::Foundation);

  for (const auto& c : floor.column_groups) {
    FootingGroup f;
    f.id = out.allocate_id();
    f.length_mm = c.width_mm + options.footing_margin_mm;
    f.width_mm = c.thickness_mm + options.footing_margin_mm;
    f.height_mm = options.footing_height_mm;
    f.along_x = c.along_x;
    f.start = c.start;
    f.end = c.end;
    f.center_offset = c.center_offset;
    f.is_new = c.is_new;
    out.footing_groups.push_back(f);
  }

  std::map<EntityId, EntityId> chains;
  for (const auto& p : floor.partitions) {
    if (options.bearing_only && !p.bearing) continue;
    auto [it, fresh] = chains.try_emplace(p.chain_id);
    if (fresh) it->second = out.allocate_id();
    StripFoundation s;
    s.id = out.allocate_id();
    s.chain_id = it->second;
    s.width_mm = p.thickness_mm + options.strip_margin_mm;
    s.length_mm = p.length_mm;
    s.along_x = p.along_x;
    s.anchor = p.anchor;
    s.is_new = p.is_new;
    out.strip_foundations.push_back(s);
  }
  return out;
}

Model derive_ceiling_plan(const Model& floor) {
  require_floor(floor);
  Model out = axes_only(floor, PlanKind::Ceiling);
  for (const auto& c : floor.column_groups) {
    if (c.mark) out.column_groups.push_back(c);
  }
  for (const auto& p : floor.partitions) {
    if (p.bearing) out.partitions.push_back(p);
  }
  return out;
}

}  // namespace podo
