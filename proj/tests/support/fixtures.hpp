#pragma once

#include <filesystem>
#include <string>

#include "podo/files.hpp"
#include "podo/ops.hpp"

namespace fx {

inline std::filesystem::path source_dir() { return PODO_SOURCE_DIR; }
inline std::filesystem::path data(const std::string& name) { return source_dir() / "data" / name; }

inline podo::AxisGroup main_group(podo::Orientation o, int count, podo::Mm step, std::string label = {}) {
  podo::AxisGroup g;
  g.orientation = o;
  g.count = count;
  g.kind = podo::MainAxes{step};
  g.label_start = std::move(label);
  return g;
}

inline podo::AxisGroup extra_group(podo::Orientation o, int count, int base, podo::Mm offset) {
  podo::AxisGroup g;
  g.orientation = o;
  g.count = count;
  g.kind = podo::AdditionalAxes{base, offset};
  return g;
}

// nh horizontal and nv vertical Main axes with uniform steps.
inline podo::Model grid(int nh, podo::Mm h_step, int nv, podo::Mm v_step,
                        podo::PlanKind kind = podo::PlanKind::Floor) {
  podo::Model m;
  m.kind = kind;
  m = podo::upsert_axis_group(m, main_group(podo::Orientation::H, nh, h_step));
  m = podo::upsert_axis_group(m, main_group(podo::Orientation::V, nv, v_step));
  return m;
}

inline podo::Model reference_floor() { return podo::load_model_file(data("reference_floor.podo.json")); }
inline podo::Model reference_ceiling() { return podo::load_model_file(data("reference_ceiling.podo.json")); }
inline podo::Model reference_foundation() { return podo::load_model_file(data("reference_foundation.podo.json")); }

inline podo::ColumnGroupSpec unmarked_columns(podo::Anchor start, podo::Anchor end) {
  podo::ColumnGroupSpec c;
  c.unmarked_type = podo::ColumnType::RcPlain;
  c.width_mm = 400;
  c.thickness_mm = 400;
  c.start = start;
  c.end = end;
  return c;
}

inline podo::PartitionChainSpec chain(std::vector<podo::Point> pts, podo::Mm thickness = 120, bool bearing = false) {
  podo::PartitionChainSpec p;
  p.thickness_mm = thickness;
  p.bearing = bearing;
  p.polyline = std::move(pts);
  return p;
}

inline podo::OpeningProto proto(podo::Mm width, podo::Mm height = 1500, int type = 1) {
  podo::OpeningProto o;
  o.gost_type = type;
  o.width_mm = width;
  o.height_mm = height;
  return o;
}

}  // namespace fx

#define CHECK_PODO_ERROR(expr, expected_code)                            \
  do {                                                                   \
    bool thrown_ = false;                                                \
    try {                                                                \
      (void)(expr);                                                      \
    } catch (const podo::Error& e_) {                                    \
      thrown_ = true;                                                    \
      CHECK_MESSAGE(e_.code() == (expected_code), std::string(podo::error_name(e_.code()))); \
    }                                                                    \
    CHECK_MESSAGE(thrown_, "no podo::Error thrown");                     \
  } while (0)
