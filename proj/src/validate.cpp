#include "podo/validate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "podo/axes.hpp"
#include "podo/placement.hpp"
#include "utf8.hpp"

namespace podo {

namespace {

class Checker {
 public:
  explicit Checker(const Model& m) : m_(m) {}

  std::vector<Issue> run() {
    settings();
    ids();
    axis_groups();
    gating();
    if (grid_ok_) entities();
    return std::move(issues_);
  }

 private:
  void add(ErrorCode code, EntityId id, std::string message) {
    issues_.push_back({code, id, std::move(message)});
  }

  static std::string tag(const char* what, EntityId id) {
    return std::string(what) + " " + std::to_string(id.value);
  }

  void settings() {
    const auto& s = m_.settings;
    if (s.axis_label_offset_mm <= 0) add(ErrorCode::InvalidValue, {}, "axis_label_offset_mm must be > 0");
    if (s.dim_offset_mm <= 0) add(ErrorCode::InvalidValue, {}, "dim_offset_mm must be > 0");
    if (s.gen_font_height_mm <= 0) add(ErrorCode::InvalidValue, {}, "gen_font_height_mm must be > 0");
    if (s.beam_span_tolerance_mm < 0) add(ErrorCode::InvalidValue, {}, "beam_span_tolerance_mm must be >= 0");
    if (s.letter_alphabet.empty()) add(ErrorCode::InvalidValue, {}, "letter_alphabet is empty");
    std::set<std::string> seen;
    for (const auto& letter : s.letter_alphabet) {
      if (detail::split_code_points(letter).size() != 1) {
        add(ErrorCode::InvalidValue, {}, "letter_alphabet entry '" + letter + "' is not one character");
      }
      if (!seen.insert(letter).second) {
        add(ErrorCode::InvalidValue, {}, "letter_alphabet repeats '" + letter + "'");
      }
    }
  }

  template <class List>
  void collect(const List& list, const char* what) {
    EntityId prev;
    for (const auto& e : list) {
      if (!e.id) add(ErrorCode::InvalidValue, e.id, std::string(what) + " has id 0");
      if (e.id.value >= m_.next_id) add(ErrorCode::InvalidValue, e.id, tag(what, e.id) + " is not below next_id");
      if (!seen_ids_.insert(e.id.value).second) add(ErrorCode::InvalidValue, e.id, "duplicate id " + std::to_string(e.id.value));
      if (prev && e.id <= prev) add(ErrorCode::InvalidValue, e.id, std::string(what) + " list is not in ascending id order");
      prev = e.id;
    }
  }

  void ids() {
    collect(m_.axis_groups_h, "axis group");
    collect(m_.axis_groups_v, "axis group");
    collect(m_.column_groups, "column group");
    collect(m_.partitions, "partition");
    collect(m_.openings, "opening");
    collect(m_.beams, "beam");
    collect(m_.slab_groups, "slab group");
    collect(m_.strip_foundations, "strip foundation");
    collect(m_.footing_groups, "footing group");
    collect(m_.foundation_beams, "foundation beam");
    collect(m_.texts, "text");
  }

  void axis_groups() {
    for (auto o : {Orientation::H, Orientation::V}) {
      for (const auto& g : m_.axis_groups(o)) {
        if (g.orientation != o) add(ErrorCode::InvalidValue, g.id, tag("axis group", g.id) + " is in the wrong orientation list");
        if (g.count < 1 || g.count > kMaxAxesPerGroup) {
          add(ErrorCode::CountOutOfRange, g.id, tag("axis group", g.id) + " count must be 1..99");
        }
        if (const auto* main = std::get_if<MainAxes>(&g.kind); main && main->step_mm <= 0) {
          add(ErrorCode::InvalidValue, g.id, tag("axis group", g.id) + " step must be > 0");
        }
        if (const auto* extra = std::get_if<AdditionalAxes>(&g.kind); extra && extra->offset_mm == 0) {
          add(ErrorCode::InvalidValue, g.id, tag("axis group", g.id) + " additional offset must be non-zero");
        }
      }
    }
    try {
      grid_ = resolve_grid(m_);
    } catch (const Error& e) {
      grid_ok_ = false;
      add(e.code(), e.entity(), e.what());
    }
  }

  void gating() {
    auto check = [&](EntityList list, std::size_t size) {
      if (size != 0 && !list_permitted(m_.kind, list)) {
        add(ErrorCode::PlanKindForbidden, {},
            std::string(entity_list_name(list)) + " not allowed on a " + std::string(plan_kind_name(m_.kind)) + " plan");
      }
    };
    check(EntityList::ColumnGroups, m_.column_groups.size());
    check(EntityList::Partitions, m_.partitions.size());
    check(EntityList::Openings, m_.openings.size());
    check(EntityList::Beams, m_.beams.size());
    check(EntityList::SlabGroups, m_.slab_groups.size());
    check(EntityList::StripFoundations, m_.strip_foundations.size());
    check(EntityList::FootingGroups, m_.footing_groups.size());
    check(EntityList::FoundationBeams, m_.foundation_beams.size());
    check(EntityList::Texts, m_.texts.size());
  }

  bool anchor(const Anchor& a, EntityId id, const char* what) {
    bool ok = true;
    if (!grid_.has(Orientation::H, a.h_axis)) {
      add(ErrorCode::UnknownAxis, id, tag(what, id) + " refers to missing horizontal axis " + std::to_string(a.h_axis));
      ok = false;
    }
    if (!grid_.has(Orientation::V, a.v_axis)) {
      add(ErrorCode::UnknownAxis, id, tag(what, id) + " refers to missing vertical axis " + std::to_string(a.v_axis));
      ok = false;
    }
    return ok;
  }

  void positive(Mm value, EntityId id, const char* what, const char* field) {
    if (value <= 0) add(ErrorCode::InvalidValue, id, tag(what, id) + " " + field + " must be > 0");
  }

  template <class Group>
  void node_group(const Group& g, const char* what) {
    const bool a = anchor(g.start, g.id, what);
    const bool b = anchor(g.end, g.id, what);
    if (a && b && g.start.offset() != g.end.offset()) {
      add(ErrorCode::NonRectangularRun, g.id, tag(what, g.id) + " corners carry different offsets");
    }
  }

  // Span rule shared by ceiling beams and foundation beams.
  void span(EntityId id, const char* what, Mm length, bool along_x, std::optional<Point> a, std::optional<Point> b) {
    if (!a || !b) return;
    if (*a == *b) {
      add(ErrorCode::NotCollinear, id, tag(what, id) + " rests on a single support");
      return;
    }
    const bool on_x = a->y == b->y;
    const bool on_y = a->x == b->x;
    if ((along_x && !on_x) || (!along_x && !on_y)) {
      add(ErrorCode::NotCollinear, id, tag(what, id) + " supports are not aligned with its direction");
      return;
    }
    const Mm distance = along_x ? std::abs(b->x - a->x) : std::abs(b->y - a->y);
    const Mm slack = distance - length;
    if (slack < 0 || slack > m_.settings.beam_span_tolerance_mm) {
      add(ErrorCode::SpanMismatch, id,
          tag(what, id) + " length " + std::to_string(length) + " does not fit span " + std::to_string(distance));
    }
  }

  void entities() {
    for (const auto& g : m_.column_groups) {
      node_group(g, "column group");
      if (g.mark.has_value() == g.unmarked_type.has_value()) {
        add(ErrorCode::InvalidValue, g.id, tag("column group", g.id) + " needs exactly one of mark or unmarked type");
      }
      positive(g.width_mm, g.id, "column group", "width");
      positive(g.thickness_mm, g.id, "column group", "thickness");
      if (g.console_len_mm && *g.console_len_mm < 0) {
        add(ErrorCode::InvalidValue, g.id, tag("column group", g.id) + " console length must be >= 0");
      }
    }

    std::map<std::uint32_t, const Partition*> partitions;
    for (const auto& p : m_.partitions) {
      partitions[p.id.value] = &p;
      anchor(p.anchor, p.id, "partition");
      positive(p.thickness_mm, p.id, "partition", "thickness");
      positive(p.length_mm, p.id, "partition", "length");
      if (!p.chain_id) add(ErrorCode::InvalidValue, p.id, tag("partition", p.id) + " has no chain id");
    }

    std::map<std::uint32_t, std::vector<const Opening*>> by_host;
    for (const auto& o : m_.openings) {
      if (o.gost_type < 1 || o.gost_type > kOpeningTypeCount) {
        add(ErrorCode::InvalidValue, o.id, tag("opening", o.id) + " type must be 1..19");
      }
      positive(o.width_mm, o.id, "opening", "width");
      positive(o.height_mm, o.id, "opening", "height");
      if (o.section_extra) {
        if (o.section_extra->sill_height_mm < 0) add(ErrorCode::InvalidValue, o.id, tag("opening", o.id) + " sill height must be >= 0");
        positive(o.section_extra->opening_height_mm, o.id, "opening", "section opening height");
      }
      const auto it = partitions.find(o.partition.value);
      if (it == partitions.end()) {
        add(ErrorCode::DanglingReference, o.id,
            tag("opening", o.id) + " refers to missing partition " + std::to_string(o.partition.value));
        continue;
      }
      const Partition& host = *it->second;
      if (o.along_x != host.along_x) add(ErrorCode::InvalidValue, o.id, tag("opening", o.id) + " direction differs from its partition");
      if (o.anchor_offset_mm < 0 || o.anchor_offset_mm + o.width_mm > host.length_mm) {
        add(ErrorCode::OutOfPartition, o.id, tag("opening", o.id) + " leaves partition " + std::to_string(host.id.value));
      }
      by_host[host.id.value].push_back(&o);
    }
    for (auto& [host, list] : by_host) {
      std::sort(list.begin(), list.end(), [](const Opening* a, const Opening* b) {
        return a->anchor_offset_mm < b->anchor_offset_mm;
      });
      for (std::size_t i = 1; i < list.size(); ++i) {
        if (list[i]->anchor_offset_mm < list[i - 1]->anchor_offset_mm + list[i - 1]->width_mm) {
          add(ErrorCode::OverlapsOpening, list[i]->id,
              tag("opening", list[i]->id) + " overlaps opening " + std::to_string(list[i - 1]->id.value));
        }
      }
    }

    for (const auto& b : m_.beams) {
      anchor(b.anchor, b.id, "beam");
      positive(b.length_mm, b.id, "beam", "length");
      positive(b.width_mm, b.id, "beam", "width");
      positive(b.height_mm, b.id, "beam", "height");
      const auto a = column_center(m_, grid_, b.end_a);
      const auto z = column_center(m_, grid_, b.end_b);
      if (!a) add(ErrorCode::UnknownColumn, b.id, tag("beam", b.id) + " end A refers to a missing column");
      if (!z) add(ErrorCode::UnknownColumn, b.id, tag("beam", b.id) + " end B refers to a missing column");
      span(b.id, "beam", b.length_mm, b.along_x, a, z);
    }

    for (const auto& s : m_.slab_groups) {
      anchor(s.anchor, s.id, "slab group");
      positive(s.length_mm, s.id, "slab group", "length");
      positive(s.width_mm, s.id, "slab group", "width");
      positive(s.height_mm, s.id, "slab group", "height");
      if (s.count < 1) add(ErrorCode::CountOutOfRange, s.id, tag("slab group", s.id) + " count must be >= 1");
    }

    for (const auto& s : m_.strip_foundations) {
      anchor(s.anchor, s.id, "strip foundation");
      positive(s.width_mm, s.id, "strip foundation", "width");
      positive(s.length_mm, s.id, "strip foundation", "length");
      if (!s.chain_id) add(ErrorCode::InvalidValue, s.id, tag("strip foundation", s.id) + " has no chain id");
    }

    for (const auto& f : m_.footing_groups) {
      node_group(f, "footing group");
      positive(f.length_mm, f.id, "footing group", "length");
      positive(f.width_mm, f.id, "footing group", "width");
      positive(f.height_mm, f.id, "footing group", "height");
    }

    for (const auto& b : m_.foundation_beams) {
      anchor(b.anchor, b.id, "foundation beam");
      positive(b.length_mm, b.id, "foundation beam", "length");
      positive(b.width_mm, b.id, "foundation beam", "width");
      positive(b.height_mm, b.id, "foundation beam", "height");
      const auto a = footing_center(m_, grid_, b.end_a);
      const auto z = footing_center(m_, grid_, b.end_b);
      if (!a) add(ErrorCode::UnknownFooting, b.id, tag("foundation beam", b.id) + " end A refers to a missing footing");
      if (!z) add(ErrorCode::UnknownFooting, b.id, tag("foundation beam", b.id) + " end B refers to a missing footing");
      span(b.id, "foundation beam", b.length_mm, b.along_x, a, z);
    }

    for (const auto& t : m_.texts) {
      if (t.lines.empty()) add(ErrorCode::InvalidValue, t.id, tag("text", t.id) + " has no lines");
      positive(t.font_height_mm, t.id, "text", "font height");
      positive(t.line_step_mm, t.id, "text", "line step");
    }
  }

  const Model& m_;
  std::vector<Issue> issues_;
  std::set<std::uint32_t> seen_ids_;
  AxisGrid grid_;
  bool grid_ok_ = true;
};

template <class T>
void chain_lint(const std::vector<T>& list, const AxisGrid& grid, const char* what, std::vector<Issue>& out) {
  std::map<std::uint32_t, std::vector<const T*>> chains;
  for (const auto& e : list) chains[e.chain_id.value].push_back(&e);
  for (const auto& [chain, members] : chains) {
    for (std::size_t i = 1; i < members.size(); ++i) {
      BaseLine a, b;
      if constexpr (std::is_same_v<T, Partition>) {
        a = partition_base_line(grid, *members[i - 1]);
        b = partition_base_line(grid, *members[i]);
      } else {
        a = strip_base_line(grid, *members[i - 1]);
        b = strip_base_line(grid, *members[i]);
      }
      const bool touch = a.start == b.start || a.start == b.end || a.end == b.start || a.end == b.end;
      if (!touch) {
        out.push_back({ErrorCode::InvalidValue, members[i]->id,
                       std::string(what) + " " + std::to_string(members[i]->id.value) +
                           " is detached from the previous segment of chain " + std::to_string(chain)});
      }
    }
  }
}

}  // namespace

std::vector<Issue> check_model(const Model& model) { return Checker(model).run(); }

void validate(const Model& model) {
  const auto issues = check_model(model);
  if (!issues.empty()) throw Error(issues.front().code, issues.front().message, issues.front().entity);
}

std::vector<Issue> lint_model(const Model& model) {
  std::vector<Issue> out;
  AxisGrid grid;
  try {
    grid = resolve_grid(model);
  } catch (const Error&) {
    return out;
  }
  try {
    chain_lint(model.partitions, grid, "partition", out);
    chain_lint(model.strip_foundations, grid, "strip foundation", out);
  } catch (const Error&) {
  }
  return out;
}

}  // namespace podo
