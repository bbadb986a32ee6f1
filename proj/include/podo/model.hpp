#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "podo/types.hpp"

namespace podo {

/// Default GOST letter series for lettered axes (З Й О Х Ц Ч Щ Ъ Ы Ь omitted).
std::vector<std::string> default_letter_alphabet();

struct ModelSettings {
  // Distance from the extreme perpendicular axis to the axis bubble.
  Mm axis_label_offset_mm = 2400;
  // Distance from the extreme axis to the span dimension line.
  Mm dim_offset_mm = 800;
  bool horiz_axes_lettered = true;
  bool horiz_dims_above = false;
  Mm gen_font_height_mm = 250;
  Mm beam_span_tolerance_mm = 500;
  std::vector<std::string> letter_alphabet = default_letter_alphabet();

  friend bool operator==(const ModelSettings&, const ModelSettings&) = default;
};

struct MainAxes {
  Mm step_mm = 6000;  // distance from each axis to the next one
  friend bool operator==(const MainAxes&, const MainAxes&) = default;
};

struct AdditionalAxes {
  int base_axis = 1;  // 1-based ordinal among the Main axes of the same orientation
  Mm offset_mm = 0;   // axis k of the group sits at base + k * offset
  friend bool operator==(const AdditionalAxes&, const AdditionalAxes&) = default;
};

inline constexpr int kMaxAxesPerGroup = 99;

struct AxisGroup {
  EntityId id;
  Orientation orientation = Orientation::H;
  int count = 1;
  std::variant<MainAxes, AdditionalAxes> kind = MainAxes{};
  // Empty: continue the label sequence of the previous Main group.
  std::string label_start;

  bool is_main() const { return std::holds_alternative<MainAxes>(kind); }
  friend bool operator==(const AxisGroup&, const AxisGroup&) = default;
};

/// A grid node (global 1-based axis indices) plus an offset from it.
struct Anchor {
  int h_axis = 1;
  int v_axis = 1;
  Mm dx = 0;
  Mm dy = 0;

  Point offset() const { return {dx, dy}; }
  friend bool operator==(const Anchor&, const Anchor&) = default;
};

enum class ColumnType { RcPlain, RcOneConsole, RcTwoConsole, MetalSolid, MetalTwoBranch };

struct ColumnGroup {
  EntityId id;
  std::optional<std::string> mark;
  std::optional<ColumnType> unmarked_type;
  std::optional<Mm> console_len_mm;
  Mm width_mm = 400;      // footprint extent along the group's "X" direction
  Mm thickness_mm = 400;  // footprint extent across it
  // Opposite corners of the node rectangle; both carry the same offset.
  Anchor start;
  Anchor end;
  Point center_offset;
  bool along_x = true;
  bool is_new = false;
  bool console_left = false;

  friend bool operator==(const ColumnGroup&, const ColumnGroup&) = default;
};

enum class PartitionType { Ordinary, PanelShield, GlassBlock, Glazed1, Glazed2, Brick };

struct Partition {
  EntityId id;
  EntityId chain_id;
  PartitionType gost_type = PartitionType::Ordinary;
  Mm thickness_mm = 120;
  Mm length_mm = 0;
  bool bearing = false;
  bool along_x = true;
  Anchor anchor;  // start of the base (center) line, its lower/left end
  bool is_new = false;

  friend bool operator==(const Partition&, const Partition&) = default;
};

struct Lintel {
  std::optional<std::string> mark;
  Mm length_mm = 0;
  Mm width_mm = 0;
  Mm height_mm = 0;
  friend bool operator==(const Lintel&, const Lintel&) = default;
};

struct Transom {
  std::optional<std::string> mark;
  Mm thickness_mm = 0;
  Mm width_mm = 0;
  Mm height_mm = 0;
  friend bool operator==(const Transom&, const Transom&) = default;
};

struct OpeningSectionExtra {
  Mm sill_height_mm = 0;
  Mm opening_height_mm = 0;
  std::optional<Lintel> lintel;
  std::optional<Transom> transom;
  friend bool operator==(const OpeningSectionExtra&, const OpeningSectionExtra&) = default;
};

inline constexpr int kOpeningTypeCount = 19;

struct Opening {
  EntityId id;
  std::optional<std::string> mark;
  int gost_type = 1;  // 1..19
  Mm width_mm = 0;
  Mm height_mm = 0;
  EntityId partition;
  bool along_x = true;
  bool rot180 = false;
  bool flip_side = false;
  Mm anchor_offset_mm = 0;  // from the partition start along its base line
  bool is_new = false;
  std::optional<OpeningSectionExtra> section_extra;

  friend bool operator==(const Opening&, const Opening&) = default;
};

/// A single column inside a group, 1-based along X (ix) and Y (iy).
struct ColumnRef {
  EntityId group;
  int ix = 1;
  int iy = 1;
  friend bool operator==(const ColumnRef&, const ColumnRef&) = default;
};

struct Beam {
  EntityId id;
  std::optional<std::string> mark;
  Mm length_mm = 0;
  Mm width_mm = 0;
  Mm height_mm = 0;
  Anchor anchor;  // start of the beam center line
  bool along_x = true;
  bool is_new = false;
  ColumnRef end_a;  // left (lower) end
  ColumnRef end_b;

  friend bool operator==(const Beam&, const Beam&) = default;
};

struct SlabGroup {
  EntityId id;
  std::optional<std::string> mark;
  Mm length_mm = 0;
  Mm width_mm = 0;
  Mm height_mm = 0;
  bool along_x = true;
  Anchor anchor;  // lower-left corner of the first slab
  int count = 1;

  friend bool operator==(const SlabGroup&, const SlabGroup&) = default;
};

struct StripFoundation {
  EntityId id;
  EntityId chain_id;
  Mm width_mm = 0;
  Mm length_mm = 0;
  bool along_x = true;
  Anchor anchor;
  bool is_new = false;

  friend bool operator==(const StripFoundation&, const StripFoundation&) = default;
};

struct FootingGroup {
  EntityId id;
  std::optional<std::string> mark;
  Mm length_mm = 0;
  Mm width_mm = 0;
  Mm height_mm = 0;
  bool along_x = true;
  Anchor start;
  Anchor end;
  Point center_offset;
  bool is_new = false;

  friend bool operator==(const FootingGroup&, const FootingGroup&) = default;
};

using FootingRef = ColumnRef;

enum class BeamSeat { Center, LeftEdge, RightEdge };

struct FoundationBeam {
  EntityId id;
  std::optional<std::string> mark;
  Mm length_mm = 0;
  Mm width_mm = 0;
  Mm height_mm = 0;
  Anchor anchor;
  bool along_x = true;
  bool is_new = false;
  FootingRef end_a;
  BeamSeat seat = BeamSeat::Center;  // applies to end_a
  FootingRef end_b;

  friend bool operator==(const FoundationBeam&, const FoundationBeam&) = default;
};

struct TextNote {
  EntityId id;
  std::vector<std::string> lines;
  Mm font_height_mm = 350;
  Mm line_step_mm = 500;
  Point origin;
  Point leader_target;

  friend bool operator==(const TextNote&, const TextNote&) = default;
};

/// The parametric representation of one plan. Every list is kept in
/// ascending id order; geometry is never stored, only regenerated.
struct Model {
  PlanKind kind = PlanKind::Floor;
  ModelSettings settings;
  std::vector<AxisGroup> axis_groups_h;
  std::vector<AxisGroup> axis_groups_v;
  std::vector<ColumnGroup> column_groups;
  std::vector<Partition> partitions;
  std::vector<Opening> openings;
  std::vector<Beam> beams;
  std::vector<SlabGroup> slab_groups;
  std::vector<StripFoundation> strip_foundations;
  std::vector<FootingGroup> footing_groups;
  std::vector<FoundationBeam> foundation_beams;
  std::vector<TextNote> texts;
  std::uint32_t next_id = 1;

  const std::vector<AxisGroup>& axis_groups(Orientation o) const {
    return o == Orientation::H ? axis_groups_h : axis_groups_v;
  }
  std::vector<AxisGroup>& axis_groups(Orientation o) {
    return o == Orientation::H ? axis_groups_h : axis_groups_v;
  }

  EntityId allocate_id() { return EntityId{next_id++}; }

  bool has_content() const;
  std::size_t entity_count() const;  // everything except axis groups

  friend bool operator==(const Model&, const Model&) = default;
};

/// Entity lists a plan kind may hold (the plan/object matrix).
enum class EntityList {
  ColumnGroups,
  Partitions,
  Openings,
  Beams,
  SlabGroups,
  StripFoundations,
  FootingGroups,
  FoundationBeams,
  Texts,
};

bool list_permitted(PlanKind kind, EntityList list);
std::string_view entity_list_name(EntityList list);

template <class T>
const T* find_entity(const std::vector<T>& list, EntityId id) {
  for (const auto& e : list) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

template <class T>
T* find_entity(std::vector<T>& list, EntityId id) {
  for (auto& e : list) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::string_view column_type_name(ColumnType t);
std::optional<ColumnType> column_type_from_name(std::string_view s);
std::string_view partition_type_name(PartitionType t);
std::optional<PartitionType> partition_type_from_name(std::string_view s);
std::string_view beam_seat_name(BeamSeat s);
std::optional<BeamSeat> beam_seat_from_name(std::string_view s);
std::optional<PlanKind> plan_kind_from_name(std::string_view s);

/// Glyph family used to draw each of the 19 opening types.
enum class OpeningGlyph { Plain, Window, Door, DoubleDoor, FoldingDoor };

struct OpeningTypeInfo {
  int number;
  std::string_view name;
  OpeningGlyph glyph;
};

const OpeningTypeInfo& opening_type_info(int gost_type);

}  // namespace podo
