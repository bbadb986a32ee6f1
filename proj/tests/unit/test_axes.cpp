#include <doctest.h>
#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_model.hpp"
#include "podo/axes.hpp"
#include "podo/placement.hpp"
#include "podo/validate.hpp"

using namespace podo;

TEST_CASE("resolve_axes labels a lettered main group") {
  Model m;
  m = upsert_axis_group(m, fx::main_group(Orientation::H, 3, 6000, "А"));
  const auto axes = resolve_axes(m, Orientation::H);
  REQUIRE(axes.size() == 3);
  CHECK(axes[0].index == 1);
  CHECK(axes[0].coord == 0);
  CHECK(axes[0].label == "А");
  CHECK(axes[1].coord == 6000);
  CHECK(axes[1].label == "Б");
  CHECK(axes[2].coord == 12000);
  CHECK(axes[2].label == "В");
}

TEST_CASE("additional axes interleave by coordinate") {
  Model m;
  m = upsert_axis_group(m, fx::main_group(Orientation::H, 3, 6000, "А"));
  m = upsert_axis_group(m, fx::extra_group(Orientation::H, 1, 1, 1500));
  const auto axes = resolve_axes(m, Orientation::H);
  REQUIRE(axes.size() == 4);
  CHECK(axes[1].index == 2);
  CHECK(axes[1].coord == 1500);
  CHECK(axes[1].label == "А/1");
  CHECK_FALSE(axes[1].main);
  CHECK(axes[2].label == "Б");
  CHECK(axes[2].index == 3);
  std::vector<Mm> coords;
  for (const auto& a : axes) coords.push_back(a.coord);
  CHECK(coords == oracle::axis_coords(m, Orientation::H));
}

TEST_CASE("empty orientation resolves to nothing") {
  Model m;
  CHECK(resolve_axes(m, Orientation::V).empty());
}

TEST_CASE("vertical axes are numbered and skip excluded letters") {
  Model m;
  m = upsert_axis_group(m, fx::main_group(Orientation::V, 3, 6000));
  const auto v = resolve_axes(m, Orientation::V);
  CHECK(v[0].label == "1");
  CHECK(v[2].label == "3");
  const auto alphabet = default_letter_alphabet();
  for (const char* banned : {"З", "Й", "О", "Х", "Ц", "Ч", "Щ", "Ъ", "Ы", "Ь"}) {
    CHECK(std::find(alphabet.begin(), alphabet.end(), banned) == alphabet.end());
  }
}

TEST_CASE("second main group continues after the first") {
  Model m;
  m = upsert_axis_group(m, fx::main_group(Orientation::V, 2, 6000));
  m = upsert_axis_group(m, fx::main_group(Orientation::V, 2, 7500));
  const auto v = resolve_axes(m, Orientation::V);
  REQUIRE(v.size() == 4);
  CHECK(v[2].coord == 12000);
  CHECK(v[3].coord == 19500);
  CHECK(v[3].label == "4");
}

TEST_CASE("node_position") {
  const Model m = fx::grid(3, 6000, 3, 6000);
  CHECK(node_position(m, 1, 1) == Point{0, 0});
  CHECK(node_position(m, 2, 3) == Point{12000, 6000});
  CHECK_PODO_ERROR(node_position(m, 9, 1), ErrorCode::UnknownAxis);
}

TEST_CASE("upsert step change moves columns but keeps anchors") {
  Model m = fx::grid(3, 6000, 3, 6000);
  m = place_column_group(m, fx::unmarked_columns({2, 2, 0, 0}, {2, 2, 0, 0}));
  const Anchor before = m.column_groups[0].start;
  const Point x0 = column_positions(resolve_grid(m), m.column_groups[0])[0].center;

  AxisGroup v = m.axis_groups_v[0];
  v.kind = MainAxes{7500};
  m = upsert_axis_group(m, v);
  CHECK(m.column_groups[0].start == before);
  const Point x1 = column_positions(resolve_grid(m), m.column_groups[0])[0].center;
  CHECK(x1.x - x0.x == 1500);
  CHECK(x1.y == x0.y);
  CHECK(x1 == oracle::at(m, before));
}

TEST_CASE("upsert gating and limits") {
  Model f = fx::grid(2, 6000, 2, 6000, PlanKind::Foundation);
  StripFoundationSpec s;
  s.width_mm = 500;
  s.polyline = {{0, 0}, {6000, 0}};
  f = place_strip_foundation(f, s);
  CHECK_PODO_ERROR(upsert_axis_group(f, fx::main_group(Orientation::H, 1, 3000)), ErrorCode::PlanKindLocked);

  Model m = fx::grid(2, 6000, 2, 6000);
  CHECK_PODO_ERROR(upsert_axis_group(m, fx::main_group(Orientation::H, 100, 3000)), ErrorCode::CountOutOfRange);
  CHECK_NOTHROW(upsert_axis_group(m, fx::main_group(Orientation::H, 99, 3000)));
  CHECK_PODO_ERROR(upsert_axis_group(m, fx::main_group(Orientation::H, 0, 3000)), ErrorCode::CountOutOfRange);
}

TEST_CASE("empty non-floor plans accept axis edits") {
  Model c = fx::grid(2, 6000, 2, 6000, PlanKind::Ceiling);
  CHECK_NOTHROW(upsert_axis_group(c, fx::main_group(Orientation::H, 1, 3000)));
}

TEST_CASE("delete additional group keeps world positions") {
  Model m = fx::grid(3, 6000, 3, 6000);
  m = upsert_axis_group(m, fx::extra_group(Orientation::V, 1, 1, 3000));
  // V axes: 0, 3000 (1/1), 6000, 12000. Partition starting on the extra axis.
  m = place_partition_chain(m, fx::chain({{3000, 0}, {3000, 6000}}));
  m = place_opening(m, {m.partitions[0].id, 1000}, fx::proto(900, 2100, 8));
  const auto grid0 = resolve_grid(m);
  const BaseLine p0 = partition_base_line(grid0, m.partitions[0]);
  const BaseLine o0 = opening_line(grid0, m.partitions[0], m.openings[0]);
  CHECK(m.partitions[0].anchor.v_axis == 2);

  m = delete_axis_group(m, m.axis_groups_v[1].id);
  CHECK(resolve_axes(m, Orientation::V).size() == 3);
  const auto grid1 = resolve_grid(m);
  const BaseLine p1 = partition_base_line(grid1, m.partitions[0]);
  const BaseLine o1 = opening_line(grid1, m.partitions[0], m.openings[0]);
  CHECK(p1.start == p0.start);
  CHECK(p1.end == p0.end);
  CHECK(o1.start == o0.start);
  CHECK(o1.end == o0.end);
  CHECK(check_model(m).empty());
}

TEST_CASE("delete main group re-anchors entities beyond it") {
  Model m;
  m = upsert_axis_group(m, fx::main_group(Orientation::H, 2, 6000));
  m = upsert_axis_group(m, fx::main_group(Orientation::V, 2, 6000));
  m = upsert_axis_group(m, fx::main_group(Orientation::V, 2, 4500));
  // V axes 0, 6000, 12000, 16500.
  m = place_column_group(m, fx::unmarked_columns({1, 4, 0, 0}, {2, 4, 0, 0}));
  const auto before = column_positions(resolve_grid(m), m.column_groups[0]);
  m = delete_axis_group(m, m.axis_groups_v[1].id);
  const auto after = column_positions(resolve_grid(m), m.column_groups[0]);
  REQUIRE(after.size() == before.size());
  for (std::size_t i = 0; i < after.size(); ++i) CHECK(after[i].center == before[i].center);
}

TEST_CASE("delete_axis_group errors") {
  Model m = fx::grid(2, 6000, 2, 6000);
  CHECK_PODO_ERROR(delete_axis_group(m, m.axis_groups_h[0].id), ErrorCode::LastAxisGroup);
  CHECK_PODO_ERROR(delete_axis_group(m, EntityId{999}), ErrorCode::UnknownEntity);

  Model c = fx::grid(2, 6000, 2, 6000, PlanKind::Ceiling);
  c = upsert_axis_group(c, fx::main_group(Orientation::H, 1, 3000));
  c = place_partition_chain(c, fx::chain({{0, 0}, {6000, 0}}, 380, true));
  CHECK_PODO_ERROR(delete_axis_group(c, c.axis_groups_h[1].id), ErrorCode::PlanKindLocked);
}

TEST_CASE("random grids agree with the coordinate oracle") {
  gen::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Model m = gen::random_grid(rng);
    for (auto o : {Orientation::H, Orientation::V}) {
      const auto axes = resolve_axes(m, o);
      const auto expected = oracle::axis_coords(m, o);
      REQUIRE(axes.size() == expected.size());
      for (std::size_t k = 0; k < axes.size(); ++k) {
        CHECK(axes[k].coord == expected[k]);
        CHECK(axes[k].index == static_cast<int>(k) + 1);
      }
    }
  }
}
