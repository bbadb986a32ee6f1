#include <doctest.h>

#include "fixtures.hpp"
#include "podo/axes.hpp"
#include "podo/derive.hpp"
#include "podo/section.hpp"
#include "podo/text_format.hpp"
#include "podo/validate.hpp"

using namespace podo;

namespace {

Model sample_floor() {
  Model m = fx::grid(3, 6000, 3, 6000);
  m = place_column_group(m, fx::unmarked_columns({1, 1}, {1, 3}));
  m = place_partition_chain(m, fx::chain({{0, 6000}, {12000, 6000}}, 380, true));
  m = place_partition_chain(m, fx::chain({{6000, 6000}, {6000, 12000}}, 120, false));
  return m;
}

std::size_t count_cuts(const SectionResult& r, CutKind k) {
  std::size_t n = 0;
  for (const auto& c : r.cuts) n += c.kind == k ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("foundation derivation") {
  const Model floor = sample_floor();
  const Model f = derive_foundation_plan(floor);
  CHECK(f.kind == PlanKind::Foundation);
  CHECK(f.footing_groups.size() == 1);
  CHECK(f.strip_foundations.size() == 2);
  CHECK(f.footing_groups[0].start == floor.column_groups[0].start);
  CHECK(f.footing_groups[0].end == floor.column_groups[0].end);
  CHECK_FALSE(f.footing_groups[0].mark);
  CHECK(f.footing_groups[0].length_mm == 400 + 600);
  CHECK(f.strip_foundations[0].width_mm == 380 + 200);
  CHECK(f.strip_foundations[1].width_mm == 120 + 200);
  for (auto o : {Orientation::H, Orientation::V}) CHECK(resolve_axes(f, o) == resolve_axes(floor, o));
  CHECK(check_model(f).empty());

  FoundationDeriveOptions bearing;
  bearing.bearing_only = true;
  CHECK(derive_foundation_plan(floor, bearing).strip_foundations.size() == 1);
  CHECK_PODO_ERROR(derive_foundation_plan(f), ErrorCode::WrongKind);
}

TEST_CASE("ceiling derivation") {
  Model floor = sample_floor();
  ColumnGroupSpec marked;
  marked.mark = "КН 33-1";
  marked.start = {3, 1};
  marked.end = {3, 3};
  floor = place_column_group(floor, marked);
  floor = place_opening(floor, {floor.partitions[0].id, 1000}, fx::proto(900));
  const Model c = derive_ceiling_plan(floor);
  CHECK(c.kind == PlanKind::Ceiling);
  REQUIRE(c.column_groups.size() == 1);
  CHECK(c.column_groups[0].mark == "КН 33-1");
  REQUIRE(c.partitions.size() == 1);
  CHECK(c.partitions[0].bearing);
  CHECK(c.openings.empty());
  for (auto o : {Orientation::H, Orientation::V}) CHECK(resolve_axes(c, o) == resolve_axes(floor, o));
  CHECK(check_model(c).empty());

  const Model bare = derive_ceiling_plan(fx::grid(2, 6000, 2, 6000));
  CHECK(bare.entity_count() == 0);
  CHECK(bare.axis_groups_h.size() == 1);
  CHECK_PODO_ERROR(derive_ceiling_plan(c), ErrorCode::WrongKind);
}

TEST_CASE("elevation formatting") {
  CHECK(format_elevation(-1800) == "−1.800");
  CHECK(format_elevation(0) == "±0.000");
  CHECK(format_elevation(6000) == "+6.000");
  CHECK(format_elevation(15) == "+0.015");
  CHECK(format_elevation(-5) == "−0.005");
  CHECK(format_elevation(12345) == "+12.345");
}

TEST_CASE("step_secant") {
  Secant s;
  s.polyline = {{6000, 0}, {6000, 12000}};
  const Secant fwd = step_secant(s, SecantAction::ShiftForward, 1000);
  CHECK(fwd.polyline == std::vector<Point>{{7000, 0}, {7000, 12000}});
  CHECK(step_secant(fwd, SecantAction::ShiftBack, 1000) == s);

  const Secant r1 = step_secant(s, SecantAction::Rotate90, 0);
  CHECK(r1.polyline[0].y == r1.polyline[1].y);
  CHECK(r1.polyline[0].x + r1.polyline[1].x == 2 * 6000);
  CHECK(step_secant(r1, SecantAction::Rotate90, 0).polyline.size() == 2);
  const Secant r2 = step_secant(r1, SecantAction::Rotate90, 0);
  CHECK(r2.polyline[0].x == r2.polyline[1].x);
  CHECK(r2.polyline[0].y + r2.polyline[1].y == 12000);

  Secant poly;
  poly.polyline = {{0, 0}, {0, 6000}, {6000, 6000}, {6000, 12000}};
  CHECK_PODO_ERROR(step_secant(poly, SecantAction::Rotate90, 0), ErrorCode::RotateOnPolyline);
  Secant diag;
  diag.polyline = {{0, 0}, {100, 100}};
  CHECK_PODO_ERROR(step_secant(diag, SecantAction::ShiftForward, 100), ErrorCode::NonAxisAlignedSegment);
}

TEST_CASE("section through an opening") {
  Model floor = place_partition_chain(fx::grid(2, 6000, 2, 6000), fx::chain({{0, 3000}, {6000, 3000}}, 250));
  OpeningProto w = fx::proto(1500, 1500, 5);
  w.section_extra = OpeningSectionExtra{800, 1500, Lintel{std::nullopt, 1700, 250, 140}, std::nullopt};
  floor = place_opening(floor, {floor.partitions[0].id, 2000}, w);

  SectionSpec spec;
  spec.floors = {{"f", 0, std::nullopt}};
  spec.top_level_mm = 3000;
  spec.secant.polyline = {{2700, -1000}, {2700, 7000}};
  const auto r = generate_section(spec, {{"f", floor}});
  REQUIRE(count_cuts(r, CutKind::OpeningVoid) == 1);
  for (const auto& c : r.cuts) {
    if (c.kind == CutKind::OpeningVoid) {
      CHECK(c.z0 == 800);
      CHECK(c.z1 == 2300);
      CHECK(c.u1 - c.u0 == 250);
    }
    if (c.kind == CutKind::Lintel) {
      CHECK(c.z0 == 2300);
      CHECK(c.z1 == 2440);
    }
  }
  CHECK(count_cuts(r, CutKind::Lintel) == 1);
  CHECK(r.warnings.empty());
}

TEST_CASE("secant through an empty bay") {
  const Model floor = fx::grid(2, 6000, 2, 6000);
  SectionSpec spec;
  spec.floors = {{"f", 0, std::nullopt}};
  spec.secant.polyline = {{3000, -1000}, {3000, 7000}};
  const auto r = generate_section(spec, {{"f", floor}});
  CHECK(r.cuts.empty());
  CHECK(r.level_marks.size() == 1);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("EmptySecantIntersection") != std::string::npos);
  CHECK_FALSE(r.display.empty());
}

TEST_CASE("reference section") {
  const SectionSpec spec = load_section_text(podo::read_file(fx::data("reference_section.json")));
  const auto plans = load_section_plans(spec, fx::source_dir() / "data");
  const auto a = generate_section(spec, plans);
  CHECK(a.level_marks == std::vector<std::string>{"−1.800", "±0.000", "+6.000"});
  CHECK(count_cuts(a, CutKind::Strip) > 0);
  CHECK(count_cuts(a, CutKind::Wall) > 0);
  CHECK(count_cuts(a, CutKind::Slab) > 0);
  const auto b = generate_section(spec, plans);
  CHECK(a.display == b.display);
  CHECK(a.cuts == b.cuts);
}

TEST_CASE("section spec checks") {
  const Model floor = fx::grid(2, 6000, 2, 6000);
  SectionSpec spec;
  spec.floors = {{"f", 0, std::nullopt}};
  spec.secant.polyline = {{3000, -1000}, {3000, 7000}};
  CHECK_PODO_ERROR(generate_section(spec, {}), ErrorCode::DanglingPlanRef);
  SectionSpec wrong = spec;
  wrong.foundation = SectionFoundation{"f", -1800};
  CHECK_PODO_ERROR(generate_section(wrong, {{"f", floor}}), ErrorCode::WrongKind);
  SectionSpec order = spec;
  order.floors.push_back({"f", 0, std::nullopt});
  CHECK_PODO_ERROR(generate_section(order, {{"f", floor}}), ErrorCode::InvalidValue);
  SectionSpec none = spec;
  none.floors.clear();
  CHECK_PODO_ERROR(generate_section(none, {{"f", floor}}), ErrorCode::InvalidValue);
}
