#pragma once

#include <optional>
#include <string>
#include <vector>

#include "podo/catalog.hpp"
#include "podo/model.hpp"

namespace podo {

// Mutations are pure: each takes a model and returns the next one, or
// throws podo::Error leaving the input untouched.

/// Replaces the group with the same id, or appends a new group when
/// `group.id` is zero. Anchors follow their axes; entities on axes that no
/// longer exist are re-anchored to the nearest surviving axis at their old
/// world position.
Model upsert_axis_group(const Model& model, AxisGroup group);
Model delete_axis_group(const Model& model, EntityId group_id);

struct ColumnGroupSpec {
  std::optional<std::string> mark;
  std::optional<ColumnType> unmarked_type;
  std::optional<Mm> console_len_mm;
  std::optional<Mm> width_mm;
  std::optional<Mm> thickness_mm;
  Anchor start;
  Anchor end;
  Point center_offset;
  bool along_x = true;
  bool is_new = false;
  bool console_left = false;
};

Model place_column_group(const Model& model, const ColumnGroupSpec& spec,
                         const Catalog& catalog = Catalog::builtin());

struct PartitionChainSpec {
  PartitionType gost_type = PartitionType::Ordinary;
  Mm thickness_mm = 120;
  bool bearing = false;
  bool is_new = false;
  std::vector<Point> polyline;
};

Model place_partition_chain(const Model& model, const PartitionChainSpec& spec);

struct OpeningProto {
  std::optional<std::string> mark;
  int gost_type = 1;
  std::optional<Mm> width_mm;
  std::optional<Mm> height_mm;
  bool rot180 = false;
  bool flip_side = false;
  bool is_new = false;
  std::optional<OpeningSectionExtra> section_extra;
};

struct OpeningPlacement {
  EntityId partition;
  Mm offset_mm = 0;
  bool rot180 = false;
  bool flip_side = false;
  friend bool operator==(const OpeningPlacement&, const OpeningPlacement&) = default;
};

inline constexpr Mm kSnapCaptureRadius = 500;

/// Fills width/height from the catalog when a mark is given (explicit
/// values win). Throws UnknownMark.
OpeningProto resolve_opening_proto(const OpeningProto& proto, const Catalog& catalog = Catalog::builtin());

/// Picks the partition whose base line is nearest the cursor within the
/// capture radius and centers the opening on the cursor projection, clamped
/// into the partition. nullopt is the NoTarget answer.
std::optional<OpeningPlacement> snap_opening_preview(const Model& model, Point cursor,
                                                     const OpeningProto& proto);

enum class OpeningFit { Fits, OutOfPartition, Overlaps };

/// Interval check shared by snapping and placement: [offset, offset+width)
/// must lie within [0, length) and miss every sibling interval.
OpeningFit check_opening_fit(Mm partition_length, const std::vector<std::pair<Mm, Mm>>& siblings,
                             Mm offset, Mm width);

Model place_opening(const Model& model, const OpeningPlacement& placement, const OpeningProto& proto,
                    const Catalog& catalog = Catalog::builtin());

/// Steps (rot180, flip_side) through a cycle of length 4.
Model cycle_opening_variant(const Model& model, EntityId opening_id);

struct BeamSpec {
  std::optional<std::string> mark;
  std::optional<Mm> length_mm;
  std::optional<Mm> width_mm;
  std::optional<Mm> height_mm;
  ColumnRef end_a;
  ColumnRef end_b;
  bool is_new = false;
};

Model place_beam(const Model& model, const BeamSpec& spec, const Catalog& catalog = Catalog::builtin());

struct SlabGroupSpec {
  std::optional<std::string> mark;
  std::optional<Mm> length_mm;
  std::optional<Mm> width_mm;
  std::optional<Mm> height_mm;
  bool along_x = true;
  Anchor anchor;
  int count = 1;
};

Model place_slab_group(const Model& model, const SlabGroupSpec& spec,
                       const Catalog& catalog = Catalog::builtin());

struct StripFoundationSpec {
  Mm width_mm = 0;
  bool is_new = false;
  std::vector<Point> polyline;
};

Model place_strip_foundation(const Model& model, const StripFoundationSpec& spec);

struct FootingGroupSpec {
  std::optional<std::string> mark;
  std::optional<Mm> length_mm;
  std::optional<Mm> width_mm;
  std::optional<Mm> height_mm;
  bool along_x = true;
  Anchor start;
  Anchor end;
  Point center_offset;
  bool is_new = false;
};

Model place_footing_group(const Model& model, const FootingGroupSpec& spec,
                          const Catalog& catalog = Catalog::builtin());

struct FoundationBeamSpec {
  std::optional<std::string> mark;
  std::optional<Mm> length_mm;
  std::optional<Mm> width_mm;
  std::optional<Mm> height_mm;
  FootingRef end_a;
  BeamSeat seat = BeamSeat::Center;
  FootingRef end_b;
  bool is_new = false;
};

Model place_foundation_beam(const Model& model, const FoundationBeamSpec& spec,
                            const Catalog& catalog = Catalog::builtin());

struct TextSpec {
  std::vector<std::string> lines;
  Mm font_height_mm = 350;
  Mm line_step_mm = 500;
  Point origin;
  Point leader_target;
};

Model place_text(const Model& model, const TextSpec& spec);

/// Cascades: a partition takes its openings along; a column or footing
/// group takes the beams resting on it.
Model delete_entity(const Model& model, EntityId id);

Model update_settings(const Model& model, const ModelSettings& settings);

}  // namespace podo
