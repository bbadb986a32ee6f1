#pragma once

// Seeded generators of valid models and of arbitrary op attempts.

#include <random>
#include <vector>

#include "oracles.hpp"
#include "podo/ops.hpp"

namespace gen {

using podo::Mm;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 eng_;
};

inline int main_count(const podo::Model& m, podo::Orientation o) {
  int n = 0;
  for (const auto& g : m.axis_groups(o)) {
    if (g.is_main()) n += g.count;
  }
  return n;
}

inline int axis_count(const podo::Model& m, podo::Orientation o) {
  return static_cast<int>(oracle::axis_coords(m, o).size());
}

// One or two Main groups per orientation with at least two axes in total,
// plus an optional Additional group whose axes stay strictly between mains.
inline podo::Model random_grid(Rng& rng, podo::PlanKind kind = podo::PlanKind::Floor) {
  podo::Model m;
  m.kind = kind;
  const std::vector<Mm> steps = {3000, 4500, 6000, 7500};
  const std::vector<Mm> offsets = {600, 900, 1200, -600, -900};
  for (auto o : {podo::Orientation::H, podo::Orientation::V}) {
    const int groups = rng.uniform(1, 2);
    for (int i = 0; i < groups; ++i) {
      podo::AxisGroup g;
      g.orientation = o;
      g.count = rng.uniform(i == 0 && groups == 1 ? 2 : 1, 4);
      g.kind = podo::MainAxes{rng.pick(steps)};
      m = podo::upsert_axis_group(m, g);
    }
  }
  for (auto o : {podo::Orientation::H, podo::Orientation::V}) {
    if (!rng.coin(0.6)) continue;
    podo::AxisGroup g;
    g.orientation = o;
    g.count = rng.uniform(1, 2);
    g.kind = podo::AdditionalAxes{rng.uniform(1, main_count(m, o)), rng.pick(offsets)};
    m = podo::upsert_axis_group(m, g);
  }
  return m;
}

inline podo::Anchor random_anchor(Rng& rng, const podo::Model& m, bool with_offset = true) {
  podo::Anchor a;
  a.h_axis = rng.uniform(1, axis_count(m, podo::Orientation::H));
  a.v_axis = rng.uniform(1, axis_count(m, podo::Orientation::V));
  if (with_offset) {
    a.dx = rng.uniform(-2, 2) * 100;
    a.dy = rng.uniform(-2, 2) * 100;
  }
  return a;
}

// An axis-aligned polyline between grid nodes, one or two segments.
inline std::vector<podo::Point> random_polyline(Rng& rng, const podo::Model& m) {
  const auto hs = oracle::axis_coords(m, podo::Orientation::H);
  const auto vs = oracle::axis_coords(m, podo::Orientation::V);
  const int nh = static_cast<int>(hs.size()), nv = static_cast<int>(vs.size());
  int h = rng.uniform(0, nh - 1), v = rng.uniform(0, nv - 1);
  std::vector<podo::Point> pts = {{vs[static_cast<std::size_t>(v)], hs[static_cast<std::size_t>(h)]}};
  const int segments = rng.uniform(1, 2);
  bool along_x = rng.coin();
  for (int s = 0; s < segments; ++s) {
    if (along_x && nv > 1) {
      int v2 = v;
      while (v2 == v) v2 = rng.uniform(0, nv - 1);
      v = v2;
    } else if (nh > 1) {
      int h2 = h;
      while (h2 == h) h2 = rng.uniform(0, nh - 1);
      h = h2;
    }
    const podo::Point next{vs[static_cast<std::size_t>(v)], hs[static_cast<std::size_t>(h)]};
    if (!(next == pts.back())) pts.push_back(next);
    along_x = !along_x;
  }
  return pts;
}

template <class Fn>
bool attempt(podo::Model& m, Fn&& fn) {
  try {
    m = fn(m);
    return true;
  } catch (const podo::Error&) {
    return false;
  }
}

// Grid plus columns, partitions, openings and texts, all placed through the
// public ops so the result is valid by construction.
inline podo::Model random_floor(Rng& rng) {
  podo::Model m = random_grid(rng);
  const int columns = rng.uniform(0, 2);
  for (int i = 0; i < columns; ++i) {
    podo::ColumnGroupSpec c;
    if (rng.coin()) {
      c.mark = "КН 33-1";
    } else {
      c.unmarked_type = podo::ColumnType::RcPlain;
      c.width_mm = 300 + 100 * rng.uniform(0, 3);
      c.thickness_mm = 300 + 100 * rng.uniform(0, 3);
    }
    c.start = random_anchor(rng, m, false);
    c.end = random_anchor(rng, m, false);
    c.start.dx = c.end.dx = rng.uniform(-1, 1) * 100;
    c.start.dy = c.end.dy = rng.uniform(-1, 1) * 100;
    c.center_offset = {rng.uniform(-1, 1) * 50, rng.uniform(-1, 1) * 50};
    c.along_x = rng.coin();
    c.is_new = rng.coin();
    attempt(m, [&](const podo::Model& x) { return podo::place_column_group(x, c); });
  }
  const int chains = rng.uniform(1, 3);
  const std::vector<Mm> thicknesses = {80, 120, 250, 380};
  for (int i = 0; i < chains; ++i) {
    podo::PartitionChainSpec p;
    p.gost_type = static_cast<podo::PartitionType>(rng.uniform(0, 5));
    p.thickness_mm = rng.pick(thicknesses);
    p.bearing = rng.coin();
    p.is_new = rng.coin();
    p.polyline = random_polyline(rng, m);
    attempt(m, [&](const podo::Model& x) { return podo::place_partition_chain(x, p); });
  }
  const int openings = m.partitions.empty() ? 0 : rng.uniform(0, 4);
  for (int i = 0; i < openings; ++i) {
    const auto& host = m.partitions[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(m.partitions.size()) - 1))];
    podo::OpeningProto proto;
    proto.gost_type = rng.uniform(1, 19);
    proto.width_mm = 600 + 100 * rng.uniform(0, 12);
    proto.height_mm = 2000;
    proto.is_new = rng.coin();
    podo::OpeningPlacement pl{host.id, static_cast<Mm>(rng.uniform(0, static_cast<int>(host.length_mm / 100))) * 100,
                              rng.coin(), rng.coin()};
    attempt(m, [&](const podo::Model& x) { return podo::place_opening(x, pl, proto); });
  }
  if (rng.coin()) {
    podo::TextSpec t;
    t.lines = {"Примечание", "line 2"};
    t.origin = {rng.uniform(-3000, 3000), rng.uniform(-3000, 3000)};
    t.leader_target = {rng.uniform(0, 6000), rng.uniform(0, 6000)};
    attempt(m, [&](const podo::Model& x) { return podo::place_text(x, t); });
  }
  return m;
}

}  // namespace gen
