// One PASS/FAIL line per acceptance criterion. `podo_acceptance` runs all of
// them; `podo_acceptance N` runs criterion N only. Exit status is non-zero
// when any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_model.hpp"
#include "random_ops.hpp"
#include "podo/axes.hpp"
#include "podo/capsule.hpp"
#include "podo/catalog.hpp"
#include "podo/derive.hpp"
#include "podo/drafting.hpp"
#include "podo/emit.hpp"
#include "podo/placement.hpp"
#include "podo/section.hpp"
#include "podo/text_format.hpp"
#include "podo/validate.hpp"

using namespace podo;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  int failures = 0;

  void fail(const std::string& why) {
    if (failures++ < 3) detail << (detail.tellp() > 0 ? "; " : "") << why;
    pass = false;
  }
  void note(const std::string& s) { detail << (detail.tellp() > 0 ? "; " : "") << s; }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// ---------------------------------------------------------------------------

void capsule_compactness(Verdict& v) {
  const auto t0 = Clock::now();
  const Model m = fx::reference_floor();
  std::size_t columns = 0;
  if (!m.column_groups.empty()) columns = column_positions(resolve_grid(m), m.column_groups[0]).size();
  if (m.axis_groups_h.size() != 2 || m.axis_groups_v.size() != 2 || m.column_groups.size() != 1 || columns < 4 ||
      m.partitions.size() != 4 || m.openings.size() != 3 || m.texts.size() != 2) {
    v.fail("reference model does not have the expected composition");
  }
  const auto bytes = encode_capsule(m);
  const auto back = decode_capsule(bytes);
  if (!(back.model == m)) v.fail("decode(encode(m)) != m");
  if (bytes.size() > 4096) v.fail("capsule is " + std::to_string(bytes.size()) + " bytes");
  const double t = seconds_since(t0);
  if (t >= 1.0) v.fail("took " + fmt_seconds(t));
  v.note(std::to_string(bytes.size()) + " bytes, " + std::to_string(columns) + " columns, " + fmt_seconds(t));
}

// Independent digit scan of "( a x b [x c] [, tail] )".
std::vector<Mm> parenthetical_numbers(const std::string& s) {
  std::vector<Mm> out;
  const auto open = s.find('(');
  const auto comma = s.find(',', open);
  const auto close = s.find(')', open);
  const auto end = comma == std::string::npos ? close : comma;
  Mm cur = -1;
  for (auto i = open + 1; i < end; ++i) {
    const char c = s[i];
    if (c >= '0' && c <= '9') {
      cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
    } else if (cur >= 0) {
      out.push_back(cur);
      cur = -1;
    }
  }
  if (cur >= 0) out.push_back(cur);
  return out;
}

void mark_parser(Verdict& v) {
  struct Quoted {
    const char* text;
    MarkFamily family;
  };
  // Every mark string the source text quotes, verbatim.
  const std::vector<Quoted> marked = {
      {"ЗК96-7 (10500 x 600 x 400, 2.300)", MarkFamily::Column},
      {"ОР 15-6 (1460 x 570)", MarkFamily::Opening},
      {"ДН 21-13АПЩ (2085 x 1274, АПЩР2)", MarkFamily::Opening},
      {"2ПБ19-3-п (1940 x 120 x 140, 0.033)", MarkFamily::Lintel},
      {"2ПП18-5 (1810 x 380 x 140, 0.096)", MarkFamily::Lintel},
      {"ФВ 04-12 (390 x 1170)", MarkFamily::Transom},
      {"ФВ 13-10 (1290 x 970)", MarkFamily::Transom},
      {"2БСО 12-6 АШв (11960 x 280 x 890, 2.00)", MarkFamily::Beam},
      {"ИБ 8-21 (5280 x 800 x 300, 1.23)", MarkFamily::Beam},
      {"2ПВ12-5-4 (11960 x 2980 x 525, 3.200)", MarkFamily::Slab},
      {"ПК24.12-8Т (2380 x 1190 x 220, 0.35)", MarkFamily::Slab},
      {"1Ф 12.8-1 (1200 x 1200 x 750, 0.75)", MarkFamily::Footing},
      {"2Ф 18.9-2 (1800 x 1800 x 900, 1.60)", MarkFamily::Footing},
      {"1БФ6-5 (5050 x 200 x 300, 0.27)", MarkFamily::FoundationBeam},
      {"ФБ 6-36 (5050 x 450 x 520, 0.75)", MarkFamily::FoundationBeam},
  };
  const std::vector<std::string> unmarked = {"Немаркированная колонна", "Немаркированный проем", "Немаркированная"};

  std::set<MarkFamily> families;
  int parsed = 0;
  for (const auto& q : marked) {
    try {
      const auto r = parse_mark_string(q.text);
      const auto* f = std::get_if<MarkFragment>(&r);
      if (!f) {
        v.fail(std::string(q.text) + " parsed as unmarked");
        continue;
      }
      if (f->dims != parenthetical_numbers(q.text)) v.fail(std::string(q.text) + " dims differ");
      const MarkRecord* rec = Catalog::builtin().lookup(q.family, f->name);
      if (!rec || rec->mark != *f) v.fail(std::string(q.text) + " missing from the catalog");
      families.insert(q.family);
      ++parsed;
    } catch (const Error& e) {
      v.fail(std::string(q.text) + ": " + e.what());
    }
  }
  for (const auto& u : unmarked) {
    try {
      if (!std::holds_alternative<Unmarked>(parse_mark_string(u))) v.fail(u + " not unmarked");
      ++parsed;
    } catch (const Error& e) {
      v.fail(u + ": " + e.what());
    }
  }
  const std::size_t quoted = marked.size() + unmarked.size();
  if (families.size() != 8) v.fail("families covered: " + std::to_string(families.size()));
  if (quoted < 20) {
    v.fail("the source text quotes " + std::to_string(quoted) + " mark strings, criterion asks for >= 20");
  }

  std::size_t total = 0, identical = 0;
  for (MarkFamily fam : all_families()) {
    for (const MarkRecord& r : Catalog::builtin().records(fam)) {
      ++total;
      const auto back = parse_mark_string(render_mark_string(r));
      if (const auto* f = std::get_if<MarkFragment>(&back); f && *f == r.mark) ++identical;
    }
  }
  if (identical != total) v.fail("round trip " + std::to_string(identical) + "/" + std::to_string(total));
  v.note(std::to_string(parsed) + "/" + std::to_string(quoted) + " quoted strings parse with exact dims across " +
         std::to_string(families.size()) + " families; round trip " + std::to_string(identical) + "/" +
         std::to_string(total));
}

// Positions from the placement API against the hand-rolled grid.
bool positions_match(const Model& m, std::string& why) {
  const AxisGrid grid = resolve_grid(m);
  for (const auto& g : m.column_groups) {
    for (const auto& c : column_positions(grid, g)) {
      const int h = std::min(g.start.h_axis, g.end.h_axis) + c.iy - 1;
      const int vv = std::min(g.start.v_axis, g.end.v_axis) + c.ix - 1;
      const Point expect = oracle::node(m, h, vv) + g.start.offset() + g.center_offset;
      if (!(c.center == expect)) {
        why = "column group " + std::to_string(g.id.value);
        return false;
      }
    }
  }
  for (const auto& p : m.partitions) {
    const BaseLine b = partition_base_line(grid, p);
    const Point s = oracle::at(m, p.anchor);
    const Point e = p.along_x ? Point{s.x + p.length_mm, s.y} : Point{s.x, s.y + p.length_mm};
    if (!(b.start == s) || !(b.end == e)) {
      why = "partition " + std::to_string(p.id.value);
      return false;
    }
    for (const auto& o : m.openings) {
      if (o.partition != p.id) continue;
      const BaseLine ol = opening_line(grid, p, o);
      const Point os = p.along_x ? Point{s.x + o.anchor_offset_mm, s.y} : Point{s.x, s.y + o.anchor_offset_mm};
      if (!(ol.start == os)) {
        why = "opening " + std::to_string(o.id.value);
        return false;
      }
    }
  }
  return true;
}

struct AnchorSnapshot {
  std::vector<Anchor> anchors;
  std::vector<Mm> offsets;
  bool operator==(const AnchorSnapshot&) const = default;
};

AnchorSnapshot anchors_of(const Model& m) {
  AnchorSnapshot s;
  for (const auto& c : m.column_groups) {
    s.anchors.push_back(c.start);
    s.anchors.push_back(c.end);
  }
  for (const auto& p : m.partitions) s.anchors.push_back(p.anchor);
  for (const auto& o : m.openings) s.offsets.push_back(o.anchor_offset_mm);
  return s;
}

void axis_edit_invariance(Verdict& v) {
  gen::Rng rng(20240601);
  const std::vector<Mm> steps = {3000, 4500, 6000, 7500, 9000};
  int models = 0, objects = 0;
  for (int i = 0; i < 1000; ++i) {
    const Model m = gen::random_floor(rng);
    std::vector<std::size_t> mains;
    const Orientation o = rng.coin() ? Orientation::H : Orientation::V;
    for (std::size_t k = 0; k < m.axis_groups(o).size(); ++k) {
      if (m.axis_groups(o)[k].is_main()) mains.push_back(k);
    }
    AxisGroup g = m.axis_groups(o)[rng.pick(mains)];
    const Mm old = std::get<MainAxes>(g.kind).step_mm;
    Mm step = old;
    while (step == old) step = rng.pick(steps);
    g.kind = MainAxes{step};
    Model edited;
    try {
      edited = upsert_axis_group(m, g);
    } catch (const Error& e) {
      v.fail("model " + std::to_string(i) + ": step edit rejected: " + e.what());
      continue;
    }
    ++models;
    if (!(anchors_of(edited) == anchors_of(m))) v.fail("model " + std::to_string(i) + ": anchors changed");
    std::string why;
    if (!positions_match(edited, why)) v.fail("model " + std::to_string(i) + ": " + why + " misplaced");
    objects += static_cast<int>(m.column_groups.size() + m.partitions.size() + m.openings.size());
  }
  v.note(std::to_string(models) + " models, " + std::to_string(objects) + " anchored objects checked");
}

void opening_oracle(Verdict& v) {
  const auto t0 = Clock::now();
  gen::Rng rng(777);
  int cases = 0, agree = 0, accepted = 0;
  while (cases < 12000) {
    const Mm length = rng.uniform(10, 90) * 100 + rng.uniform(0, 99);
    Model m = fx::grid(2, 9000, 2, 9000);
    m = place_partition_chain(m, fx::chain({{0, 0}, {length, 0}}));
    const EntityId pid = m.partitions[0].id;
    std::vector<std::pair<Mm, Mm>> siblings;
    const int wanted = rng.uniform(0, 3);
    for (int s = 0; s < wanted * 4 && static_cast<int>(siblings.size()) < wanted; ++s) {
      const Mm w = rng.uniform(300, 1500);
      const Mm off = rng.uniform(0, static_cast<int>(length));
      if (oracle::opening_fits(length, siblings, off, w)) {
        m = place_opening(m, {pid, off}, fx::proto(w));
        siblings.emplace_back(off, w);
      }
    }
    for (int k = 0; k < 10; ++k) {
      Mm w = rng.uniform(1, 2000);
      Mm off;
      // Half the probes sit on an edge of the partition or of a sibling.
      if (rng.coin() && !siblings.empty()) {
        const auto& [so, sw] = rng.pick(siblings);
        const std::vector<Mm> edges = {so - w, so - w + 1, so - w - 1, so + sw, so + sw - 1, so + sw + 1, so};
        off = rng.pick(edges);
      } else if (rng.coin(0.3)) {
        off = rng.pick(std::vector<Mm>{-1, 0, 1, length - w, length - w + 1, length - w - 1});
      } else {
        off = rng.uniform(-100, static_cast<int>(length) + 100);
      }
      const bool expect = oracle::opening_fits(length, siblings, off, w);
      const bool fit = check_opening_fit(length, siblings, off, w) == OpeningFit::Fits;
      bool placed = false;
      try {
        placed = place_opening(m, {pid, off}, fx::proto(w)).openings.size() == siblings.size() + 1;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::OutOfPartition && e.code() != ErrorCode::OverlapsOpening) {
          v.fail(std::string("unexpected error ") + std::string(error_name(e.code())));
        }
      }
      ++cases;
      if (fit == expect && placed == expect) {
        ++agree;
      } else {
        v.fail("length " + std::to_string(length) + " offset " + std::to_string(off) + " width " +
               std::to_string(w));
      }
      accepted += expect ? 1 : 0;
    }
  }
  const double t = seconds_since(t0);
  if (t >= 10.0) v.fail("took " + fmt_seconds(t));
  v.note(std::to_string(agree) + "/" + std::to_string(cases) + " agree (" + std::to_string(accepted) +
         " fit), " + fmt_seconds(t));
}

void beam_span(Verdict& v) {
  Model m = fx::grid(2, 6000, 3, 6000, PlanKind::Ceiling);
  ColumnGroupSpec c;
  c.mark = "КН 33-1";
  c.start = {1, 1};
  c.end = {1, 3};
  m = place_column_group(m, c);
  BeamSpec b;
  b.end_a = {m.column_groups[0].id, 1, 1};
  b.end_b = {m.column_groups[0].id, 3, 1};
  const Point a = oracle::node(m, 1, 1), z = oracle::node(m, 1, 3);
  const Mm span = z.x - a.x;
  if (span != 12000) v.fail("span is " + std::to_string(span));

  b.mark = "2БСО 12-6 АШв";
  try {
    const Model ok = place_beam(m, b);
    if (ok.beams.size() != 1 || ok.beams[0].length_mm != 11960) v.fail("accepted beam has wrong length");
    v.note("2БСО 12-6 АШв accepted, slack " + std::to_string(span - ok.beams[0].length_mm));
  } catch (const Error& e) {
    v.fail(std::string("2БСО 12-6 АШв rejected: ") + e.what());
  }
  b.mark = "ИБ 8-21";
  try {
    place_beam(m, b);
    v.fail("ИБ 8-21 accepted");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SpanMismatch) v.fail(std::string("ИБ 8-21 gave ") + std::string(error_name(e.code())));
    v.note(std::string("ИБ 8-21 rejected with ") + std::string(error_name(e.code())));
  }
}

Mm dims_sum(const std::vector<DimLinear>& dims, Verdict& v) {
  Mm s = 0;
  for (const auto& d : dims) {
    const Mm t = oracle::text_value(d.text);
    if (t != d.measured()) v.fail("dimension text " + d.text + " disagrees with its geometry");
    s += t;
  }
  return s;
}

void dimension_conservation(Verdict& v) {
  gen::Rng rng(4242);
  int grids = 0, partitions = 0;
  for (int i = 0; i < 1000; ++i) {
    const Model m = gen::random_floor(rng);
    for (Side side : {Side::Left, Side::Right, Side::Bottom, Side::Top}) {
      const Orientation o = side == Side::Left || side == Side::Right ? Orientation::H : Orientation::V;
      const auto mains = oracle::main_coords(m, o);
      if (mains.size() < 2) continue;
      const Mm extreme = mains.back() - mains.front();
      const Mm spans = dims_sum(generate_span_dimensions(m, side), v);
      const Mm overall = oracle::text_value(generate_overall_dimension(m, side).text);
      if (spans != extreme || overall != extreme) {
        v.fail("grid " + std::to_string(i) + ": spans " + std::to_string(spans) + ", overall " +
               std::to_string(overall) + ", axes " + std::to_string(extreme));
      }
    }
    ++grids;
    for (const auto& p : m.partitions) {
      if (dims_sum(dimension_partition(m, p.id), v) != p.length_mm) {
        v.fail("partition " + std::to_string(p.id.value) + " of model " + std::to_string(i));
      }
      ++partitions;
    }
  }
  v.note(std::to_string(grids) + " grids, " + std::to_string(partitions) + " partitions");
}

void derivation(Verdict& v) {
  gen::Rng rng(99);
  int n = 0;
  for (int i = 0; i < 500; ++i) {
    const Model floor = gen::random_floor(rng);
    const Model f = derive_foundation_plan(floor);
    FoundationDeriveOptions bo;
    bo.bearing_only = true;
    const Model fb = derive_foundation_plan(floor, bo);
    const Model c = derive_ceiling_plan(floor);
    std::size_t bearing = 0, marked = 0;
    for (const auto& p : floor.partitions) bearing += p.bearing ? 1 : 0;
    for (const auto& g : floor.column_groups) marked += g.mark ? 1 : 0;
    if (f.footing_groups.size() != floor.column_groups.size()) v.fail("footing groups");
    if (f.strip_foundations.size() != floor.partitions.size()) v.fail("strip foundations");
    if (fb.strip_foundations.size() != bearing) v.fail("bearing-only strips");
    if (c.column_groups.size() != marked) v.fail("ceiling columns");
    for (const auto& g : c.column_groups) {
      if (!g.mark) v.fail("unmarked column kept");
    }
    if (c.partitions.size() != bearing) v.fail("ceiling partitions");
    for (const auto& p : c.partitions) {
      if (!p.bearing) v.fail("non-bearing partition kept");
    }
    if (!c.openings.empty()) v.fail("openings kept");
    for (const Model* d : {&f, &fb, &c}) {
      for (auto o : {Orientation::H, Orientation::V}) {
        if (resolve_axes(*d, o) != resolve_axes(floor, o)) v.fail("grid differs");
        if (oracle::axis_coords(*d, o) != oracle::axis_coords(floor, o)) v.fail("grid oracle differs");
      }
      if (!check_model(*d).empty()) v.fail("derived plan invalid");
    }
    ++n;
  }
  v.note(std::to_string(n) + " floor plans, 3 derivations each");
}

void section_levels(Verdict& v) {
  const SectionSpec spec = load_section_text(read_file(fx::data("reference_section.json")));
  std::vector<Mm> levels;
  if (spec.foundation) levels.push_back(spec.foundation->sole_level_mm);
  for (const auto& f : spec.floors) levels.push_back(f.level_mm);
  if (spec.roof) levels.push_back(spec.roof->underside_level_mm);
  if (levels != std::vector<Mm>{-1800, 0, 6000}) v.fail("reference spec levels differ");
  const auto plans = load_section_plans(spec, fx::source_dir() / "data");
  const auto r = generate_section(spec, plans);
  const std::vector<std::string> expected = {"−1.800", "±0.000", "+6.000"};
  if (r.level_marks != expected) v.fail("marks differ");
  // The drawing itself carries exactly these elevation texts, bottom to top.
  std::vector<std::pair<Mm, std::string>> drawn;
  for (const auto& p : r.display.items) {
    if (const auto* t = std::get_if<TextPrim>(&p.shape)) {
      for (const auto& e : expected) {
        if (t->content == e) drawn.emplace_back(t->origin.y, t->content);
      }
    }
  }
  std::sort(drawn.begin(), drawn.end());
  std::vector<std::string> order;
  for (const auto& [y, s] : drawn) order.push_back(s);
  if (order != expected) v.fail("drawn marks are not exactly the three levels in ascending order");
  const auto again = generate_section(spec, plans);
  if (!(again.display == r.display)) v.fail("section generation is not deterministic");

  gen::Rng rng(5);
  int steps = 0;
  for (int i = 0; i < 1000; ++i) {
    Secant s;
    Point p{rng.uniform(-20000, 20000), rng.uniform(-20000, 20000)};
    s.polyline.push_back(p);
    const int segs = rng.uniform(1, 4);
    for (int k = 0; k < segs; ++k) {
      const Mm d = rng.uniform(1, 200) * 100 * (rng.coin() ? 1 : -1);
      p = k % 2 == 0 ? Point{p.x + d, p.y} : Point{p.x, p.y + d};
      s.polyline.push_back(p);
    }
    const Mm step = rng.uniform(1, 50) * 100;
    const Secant back = step_secant(step_secant(s, SecantAction::ShiftForward, step), SecantAction::ShiftBack, step);
    if (!(back == s)) v.fail("shift then unshift moved the secant");
    ++steps;
  }
  v.note("marks " + std::to_string(r.level_marks.size()) + " ascending; " + std::to_string(steps) +
         " secants shift/unshift");
}

void determinism_goldens(Verdict& v) {
  const auto golden = fx::source_dir() / "tests" / "golden";
  const Model m = fx::reference_floor();
  const std::string svg = emit_svg(generate_plan_display(m), 100);
  const std::string dxf = emit_dxf(generate_plan_display(fx::reference_floor()), 100);
  if (svg != emit_svg(generate_plan_display(m), 100)) v.fail("svg differs between runs");
  try {
    if (svg != read_file(golden / "reference_floor.svg")) v.fail("svg differs from golden");
    if (dxf != read_file(golden / "reference_floor.dxf")) v.fail("dxf differs from golden");
  } catch (const std::exception& e) {
    v.fail(e.what());
  }
  v.note("svg " + std::to_string(svg.size()) + " B, dxf " + std::to_string(dxf.size()) + " B match goldens");
}

std::vector<Model> fuzz_seeds() {
  std::vector<Model> seeds;
  gen::Rng rng(31337);
  for (int i = 0; i < 16; ++i) {
    seeds.push_back(gen::random_grid(rng, PlanKind::Floor));
    seeds.push_back(gen::random_grid(rng, PlanKind::Ceiling));
    seeds.push_back(gen::random_grid(rng, PlanKind::Foundation));
  }
  for (int i = 0; i < 8; ++i) seeds.push_back(gen::random_floor(rng));
  seeds.push_back(fx::reference_floor());
  seeds.push_back(fx::reference_ceiling());
  seeds.push_back(fx::reference_foundation());
  return seeds;
}

void integrity_fuzz(Verdict& v) {
  const auto t0 = Clock::now();
  const auto seeds = fuzz_seeds();
  gen::Rng rng(1);
  long ops = 0, applied = 0, gated = 0;
  for (int seq = 0; seq < 100000; ++seq) {
    Model m = seeds[static_cast<std::size_t>(seq) % seeds.size()];
    const int len = rng.uniform(1, 8);
    for (int k = 0; k < len; ++k) {
      const gen::OpAttempt op = gen::random_op(rng, m);
      const bool forbidden = op.target && !list_permitted(m.kind, *op.target);
      ++ops;
      try {
        Model next = op.run(m);
        if (forbidden) v.fail(std::string(op.name) + " succeeded on a plan that forbids it");
        if (oracle::dangling_refs(next) != 0) v.fail(std::string("dangling reference after ") + op.name);
        if (oracle::gating_violations(next) != 0) v.fail(std::string("gating violated after ") + op.name);
        if (!check_model(next).empty()) v.fail(std::string("validator rejects the result of ") + op.name);
        m = std::move(next);
        ++applied;
      } catch (const Error& e) {
        if (forbidden) {
          ++gated;
          if (e.code() != ErrorCode::PlanKindForbidden) {
            v.fail(std::string(op.name) + " on a forbidden plan gave " + std::string(error_name(e.code())));
          }
        }
      }
    }
  }
  const double t = seconds_since(t0);
  if (t >= 60.0) v.fail("took " + fmt_seconds(t));
  v.note("100000 sequences, " + std::to_string(ops) + " ops (" + std::to_string(applied) + " applied, " +
         std::to_string(gated) + " gated), " + fmt_seconds(t));
}

struct Criterion {
  const char* name;
  std::function<void(Verdict&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"capsule compactness", capsule_compactness},
      {"mark parser", mark_parser},
      {"axis-edit invariance", axis_edit_invariance},
      {"opening validator vs oracle", opening_oracle},
      {"beam span rule", beam_span},
      {"dimension conservation", dimension_conservation},
      {"derivation cardinalities", derivation},
      {"section levels", section_levels},
      {"determinism goldens", determinism_goldens},
      {"integrity fuzz", integrity_fuzz},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Verdict v;
    try {
      criteria[i].run(v);
    } catch (const std::exception& e) {
      v.fail(std::string("uncaught: ") + e.what());
    }
    std::printf("%s [%zu] %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, v.detail.str().c_str());
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
