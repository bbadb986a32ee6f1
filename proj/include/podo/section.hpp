#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "podo/display.hpp"
#include "podo/model.hpp"

namespace podo {

enum class ViewDirection { LeftOfTravel, RightOfTravel };

struct Secant {
  std::vector<Point> polyline;  // segments parallel to X or Y
  ViewDirection view = ViewDirection::LeftOfTravel;
  friend bool operator==(const Secant&, const Secant&) = default;
};

struct SectionFloor {
  std::string plan;  // floor plan reference
  Mm level_mm = 0;
  // From the second storey on, a ceiling plan may serve as this storey's floor.
  std::optional<std::string> ceiling_plan;
  friend bool operator==(const SectionFloor&, const SectionFloor&) = default;
};

struct SectionFoundation {
  std::string plan;
  Mm sole_level_mm = 0;
  friend bool operator==(const SectionFoundation&, const SectionFoundation&) = default;
};

struct SectionRoof {
  std::string plan;
  Mm underside_level_mm = 0;
  friend bool operator==(const SectionRoof&, const SectionRoof&) = default;
};

struct SectionSpec {
  std::vector<SectionFloor> floors;  // bottom to top
  std::optional<SectionFoundation> foundation;
  std::optional<SectionRoof> roof;
  Secant secant;
  std::string letter = "А";
  int scale = 100;  // 1:scale
  // Top of the highest storey when there is no roof.
  std::optional<Mm> top_level_mm;
  friend bool operator==(const SectionSpec&, const SectionSpec&) = default;
};

inline constexpr Mm kDefaultStoreyHeight = 3000;
inline constexpr Mm kDefaultSillMm = 900;

enum class CutKind { Wall, OpeningVoid, Lintel, Transom, Column, Footing, Strip, FoundationBeam, Beam, Slab };

std::string_view cut_kind_name(CutKind kind);

// One cut element in section coordinates: u along the unfolded secant, z is
// the elevation.
struct SectionCut {
  CutKind kind = CutKind::Wall;
  std::string plan;
  EntityId entity;
  Mm u0 = 0, u1 = 0;
  Mm z0 = 0, z1 = 0;
  friend bool operator==(const SectionCut&, const SectionCut&) = default;
};

struct SectionResult {
  DisplayList display;
  std::vector<SectionCut> cuts;
  std::vector<std::string> level_marks;  // ascending
  std::vector<std::string> warnings;
};

/// Elevation text in meters with three decimals: "+6.000", "±0.000", "−1.800"
/// (U+2212 minus).
std::string format_elevation(Mm level_mm);

/// Checks kinds, level order and the secant. Throws DanglingPlanRef,
/// WrongKind, InvalidValue, EmptyPolyline, NonAxisAlignedSegment.
void check_section_spec(const SectionSpec& spec, const std::map<std::string, Model>& plans);

/// Unfolds the secant by arc length and cuts every entity whose footprint it
/// crosses. A secant that cuts nothing yields axes and levels plus an
/// "EmptySecantIntersection" warning.
SectionResult generate_section(const SectionSpec& spec, const std::map<std::string, Model>& plans);

enum class SecantAction { ShiftForward, ShiftBack, Rotate90 };

/// Shifts move the whole polyline along the normal of its first segment
/// (+X for a segment along Y, +Y for one along X). Rotate90 turns a single
/// segment about its midpoint; rounding keeps two turns an identity.
/// Throws RotateOnPolyline, EmptyPolyline, NonAxisAlignedSegment.
Secant step_secant(const Secant& secant, SecantAction action, Mm step_mm);

}  // namespace podo
