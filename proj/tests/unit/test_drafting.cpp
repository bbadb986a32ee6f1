#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_model.hpp"
#include "podo/axes.hpp"
#include "podo/display_json.hpp"
#include "podo/drafting.hpp"

using namespace podo;

namespace {

template <class T>
std::vector<T> shapes_of(const DisplayList& list, EntityId owner = {}) {
  std::vector<T> out;
  for (const auto& p : list.items) {
    if (owner && !(p.owner == owner)) continue;
    if (const auto* s = std::get_if<T>(&p.shape)) out.push_back(*s);
  }
  return out;
}

Mm sum_texts(const std::vector<DimLinear>& dims) {
  Mm s = 0;
  for (const auto& d : dims) s += oracle::text_value(d.text);
  return s;
}

std::vector<std::string> texts(const std::vector<DimLinear>& dims) {
  std::vector<std::string> out;
  for (const auto& d : dims) out.push_back(d.text);
  return out;
}

}  // namespace

TEST_CASE("empty model draws nothing") {
  CHECK(generate_plan_display(Model{}).empty());
}

TEST_CASE("equal models draw identical lists") {
  const Model a = fx::reference_floor();
  const Model b = fx::reference_floor();
  REQUIRE(a == b);
  CHECK(generate_plan_display(a) == generate_plan_display(b));
  CHECK(display_to_json(generate_plan_display(a)).dump() == display_to_json(generate_plan_display(b)).dump());
}

TEST_CASE("one bubble per horizontal axis with its label") {
  Model m;
  m = upsert_axis_group(m, fx::main_group(Orientation::H, 3, 6000, "А"));
  m = upsert_axis_group(m, fx::main_group(Orientation::V, 2, 6000));
  const auto list = generate_plan_display(m);
  std::vector<std::string> h_labels;
  for (const auto& b : shapes_of<AxisBubble>(list)) {
    if (b.center.x < 0) h_labels.push_back(b.label);
  }
  CHECK(h_labels == std::vector<std::string>{"А", "Б", "В"});
  const auto h = resolve_axes(m, Orientation::H);
  const auto v = resolve_axes(m, Orientation::V);
  CHECK(shapes_of<AxisBubble>(list).size() == h.size() + v.size());
}

TEST_CASE("axes extend past the extreme perpendicular axes") {
  const Model m = fx::grid(2, 6000, 3, 6000);
  const auto list = generate_plan_display(m);
  const Mm reach = m.settings.axis_label_offset_mm;
  for (const auto& p : list.items) {
    const auto* s = std::get_if<Segment>(&p.shape);
    if (!s) continue;
    CHECK(p.style.pattern == Pattern::AxisDashDot);
    if (s->a.y == s->b.y) {
      CHECK(s->a.x == -reach);
      CHECK(s->b.x == 12000 + reach);
    } else {
      CHECK(s->a.y == -reach);
      CHECK(s->b.y == 6000 + reach);
    }
  }
}

TEST_CASE("sides move the bubbles") {
  const Model m = fx::grid(2, 6000, 2, 6000);
  PlanOptions o;
  o.sides = {Side::Right, Side::Top};
  for (const auto& b : shapes_of<AxisBubble>(generate_plan_display(m, o))) {
    CHECK((b.center.x > 6000 || b.center.y > 6000));
  }
  PlanOptions both;
  both.sides = {Side::Left, Side::Right, Side::Bottom, Side::Top};
  CHECK(shapes_of<AxisBubble>(generate_plan_display(m, both)).size() == 8);
}

TEST_CASE("span dimensions") {
  const Model m = fx::grid(2, 6000, 3, 6000);
  const auto bottom = generate_span_dimensions(m, Side::Bottom);
  CHECK(texts(bottom) == std::vector<std::string>{"6000", "6000"});
  for (const auto& d : bottom) {
    CHECK(d.horizontal());
    CHECK(d.p1.y + d.offset == -m.settings.dim_offset_mm);
  }
  const auto top = generate_span_dimensions(m, Side::Top);
  for (const auto& d : top) CHECK(d.p1.y + d.offset == 6000 + m.settings.dim_offset_mm);

  Model single;
  single = upsert_axis_group(single, fx::main_group(Orientation::H, 1, 6000));
  single = upsert_axis_group(single, fx::main_group(Orientation::V, 1, 6000));
  CHECK_PODO_ERROR(generate_span_dimensions(single, Side::Left), ErrorCode::TooFewAxes);
  CHECK_PODO_ERROR(generate_overall_dimension(single, Orientation::H), ErrorCode::TooFewAxes);
}

TEST_CASE("mixed steps and the overall dimension") {
  Model m;
  m = upsert_axis_group(m, fx::main_group(Orientation::H, 2, 6000));
  m = upsert_axis_group(m, fx::main_group(Orientation::V, 2, 6000));
  m = upsert_axis_group(m, fx::main_group(Orientation::V, 1, 7500));
  const auto dims = generate_span_dimensions(m, Side::Bottom);
  CHECK(texts(dims) == std::vector<std::string>{"6000", "6000"});

  Model mixed;
  mixed = upsert_axis_group(mixed, fx::main_group(Orientation::H, 2, 6000));
  mixed = upsert_axis_group(mixed, fx::main_group(Orientation::V, 1, 6000));
  mixed = upsert_axis_group(mixed, fx::main_group(Orientation::V, 2, 7500));
  const auto mdims = generate_span_dimensions(mixed, Side::Bottom);
  CHECK(texts(mdims) == std::vector<std::string>{"6000", "7500"});
  const auto mains = oracle::main_coords(mixed, Orientation::V);
  CHECK(sum_texts(mdims) == mains.back() - mains.front());
  CHECK(generate_overall_dimension(mixed, Orientation::V).text == "13500");
  CHECK(generate_overall_dimension(fx::grid(4, 6000, 2, 6000), Orientation::H).text == "18000");
}

TEST_CASE("additional axes do not break span dimensions") {
  Model m = fx::grid(3, 6000, 2, 6000);
  m = upsert_axis_group(m, fx::extra_group(Orientation::H, 1, 1, 1500));
  const auto dims = generate_span_dimensions(m, Side::Left);
  CHECK(texts(dims) == std::vector<std::string>{"6000", "6000"});
}

TEST_CASE("partition dimension chains") {
  Model m = place_partition_chain(fx::grid(2, 6000, 2, 6000), fx::chain({{0, 0}, {6000, 0}}));
  const EntityId pid = m.partitions[0].id;
  CHECK(texts(dimension_partition(m, pid)) == std::vector<std::string>{"6000"});

  Model one = place_opening(m, {pid, 2000}, fx::proto(1460));
  CHECK(texts(dimension_partition(one, pid)) == std::vector<std::string>{"2000", "1460", "2540"});

  Model flush = place_opening(m, {pid, 0}, fx::proto(1460));
  CHECK(texts(dimension_partition(flush, pid)) == std::vector<std::string>{"1460", "4540"});

  Model two = place_opening(one, {pid, 3460}, fx::proto(900));
  CHECK(texts(dimension_partition(two, pid)) ==
        std::vector<std::string>{"2000", "1460", "900", "1640"});
  CHECK_PODO_ERROR(dimension_partition(m, EntityId{999}), ErrorCode::UnknownEntity);
}

TEST_CASE("slab group dimensions") {
  Model m = fx::grid(2, 6000, 3, 6000, PlanKind::Ceiling);
  SlabGroupSpec s;
  s.mark = "ПК24.12-8Т";
  s.count = 8;
  m = place_slab_group(m, s);
  const auto dims = dimension_slab_group(m, m.slab_groups[0].id);
  REQUIRE(dims.size() == 8);
  for (const auto& d : dims) CHECK(d.text == "1190");
  CHECK(sum_texts(dims) == 8 * 1190);
  s.count = 1;
  m = place_slab_group(m, s);
  CHECK(dimension_slab_group(m, m.slab_groups[1].id).size() == 1);
  CHECK_PODO_ERROR(dimension_slab_group(m, EntityId{999}), ErrorCode::UnknownEntity);
}

TEST_CASE("style law: new entities thick, existing thin") {
  gen::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Model m = gen::random_floor(rng);
    const auto list = generate_plan_display(m);
    auto is_new = [&](EntityId id) -> std::optional<bool> {
      if (const auto* c = find_entity(m.column_groups, id)) return c->is_new;
      if (const auto* p = find_entity(m.partitions, id)) return p->is_new;
      if (const auto* o = find_entity(m.openings, id)) return o->is_new;
      return std::nullopt;
    };
    for (const auto& p : list.items) {
      if (std::holds_alternative<DimLinear>(p.shape)) continue;
      if (auto n = is_new(p.owner)) CHECK((p.style.weight == Weight::Thick) == *n);
    }
  }
}

TEST_CASE("glazed partitions draw three and four lines") {
  auto longitudinal = [](PartitionType t) {
    Model m = fx::grid(2, 6000, 2, 6000);
    PartitionChainSpec c = fx::chain({{0, 0}, {6000, 0}});
    c.gost_type = t;
    m = place_partition_chain(m, c);
    std::size_t n = 0;
    for (const auto& s : shapes_of<Segment>(generate_plan_display(m), m.partitions[0].id)) {
      if (s.a.y == s.b.y && std::abs(s.b.x - s.a.x) == 6000) ++n;
    }
    return n;
  };
  CHECK(longitudinal(PartitionType::Ordinary) == 2);
  CHECK(longitudinal(PartitionType::Glazed1) == 3);
  CHECK(longitudinal(PartitionType::Glazed2) == 4);
}

TEST_CASE("openings break the partition outline") {
  Model m = place_partition_chain(fx::grid(2, 6000, 2, 6000), fx::chain({{0, 0}, {6000, 0}}));
  m = place_opening(m, {m.partitions[0].id, 2000}, fx::proto(1000));
  for (const auto& s : shapes_of<Segment>(generate_plan_display(m), m.partitions[0].id)) {
    if (s.a.y != s.b.y) continue;
    const Mm lo = std::min(s.a.x, s.b.x), hi = std::max(s.a.x, s.b.x);
    CHECK((hi <= 2000 || lo >= 3000));
  }
}

TEST_CASE("display order follows the class layering") {
  const Model m = fx::reference_floor();
  const auto list = generate_plan_display(m);
  auto rank = [&](const Primitive& p) {
    if (std::holds_alternative<DimLinear>(p.shape) && !p.owner) return 1;
    if (find_entity(m.axis_groups_h, p.owner) || find_entity(m.axis_groups_v, p.owner)) return 0;
    if (find_entity(m.column_groups, p.owner)) return 2;
    if (find_entity(m.partitions, p.owner)) return 3;
    if (find_entity(m.openings, p.owner)) return 4;
    if (find_entity(m.texts, p.owner)) return 6;
    return 5;
  };
  int last = 0;
  for (const auto& p : list.items) {
    const int r = rank(p);
    CHECK(r >= last);
    last = r;
  }
}

TEST_CASE("dimension explosion") {
  DimLinear d;
  d.p1 = {0, 0};
  d.p2 = {6000, 0};
  d.offset = -800;
  d.text = "6000";
  const auto parts = explode_dimension(d);
  std::size_t segs = 0, txt = 0;
  for (const auto& p : parts) {
    if (std::holds_alternative<Segment>(p.shape)) ++segs;
    if (std::holds_alternative<TextPrim>(p.shape)) ++txt;
    CHECK(p.style.weight == Weight::Thin);
  }
  CHECK(segs == 5);
  CHECK(txt == 1);
  CHECK(d.measured() == 6000);
}

TEST_CASE("texts carry a leader") {
  const Model m = fx::reference_floor();
  const auto list = generate_plan_display(m);
  const auto leaders = shapes_of<Leader>(list);
  REQUIRE(leaders.size() == m.texts.size());
  for (std::size_t i = 0; i < leaders.size(); ++i) {
    CHECK(leaders[i].points.front() == m.texts[i].leader_target);
  }
}
