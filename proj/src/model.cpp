#include "podo/model.hpp"

#include <array>

#include "utf8.hpp"

namespace podo {

std::vector<std::string> default_letter_alphabet() {
  return detail::split_code_points("АБВГДЕЖИКЛМНПРСТУФШЭЮЯ");
}

std::string_view plan_kind_name(PlanKind kind) {
  switch (kind) {
    case PlanKind::Floor: return "floor";
    case PlanKind::Ceiling: return "ceiling";
    case PlanKind::Foundation: return "foundation";
  }
  return "floor";
}

std::optional<PlanKind> plan_kind_from_name(std::string_view s) {
  if (s == "floor") return PlanKind::Floor;
  if (s == "ceiling") return PlanKind::Ceiling;
  if (s == "foundation") return PlanKind::Foundation;
  return std::nullopt;
}

bool Model::has_content() const { return entity_count() != 0; }

std::size_t Model::entity_count() const {
  return column_groups.size() + partitions.size() + openings.size() + beams.size() +
         slab_groups.size() + strip_foundations.size() + footing_groups.size() +
         foundation_beams.size() + texts.size();
}

bool list_permitted(PlanKind kind, EntityList list) {
  const bool floor = kind == PlanKind::Floor;
  const bool ceiling = kind == PlanKind::Ceiling;
  const bool foundation = kind == PlanKind::Foundation;
  switch (list) {
    case EntityList::ColumnGroups: return floor || ceiling;
    case EntityList::Partitions: return floor || ceiling;
    case EntityList::Openings: return floor;
    case EntityList::Beams: return ceiling;
    case EntityList::SlabGroups: return ceiling;
    case EntityList::StripFoundations: return foundation;
    case EntityList::FootingGroups: return foundation;
    case EntityList::FoundationBeams: return foundation;
    case EntityList::Texts: return true;
  }
  return false;
}

std::string_view entity_list_name(EntityList list) {
  switch (list) {
    case EntityList::ColumnGroups: return "column_groups";
    case EntityList::Partitions: return "partitions";
    case EntityList::Openings: return "openings";
    case EntityList::Beams: return "beams";
    case EntityList::SlabGroups: return "slab_groups";
    case EntityList::StripFoundations: return "strip_foundations";
    case EntityList::FootingGroups: return "footing_groups";
    case EntityList::FoundationBeams: return "foundation_beams";
    case EntityList::Texts: return "texts";
  }
  return "";
}

namespace {

template <class E, std::size_t N>
std::optional<E> lookup_name(const std::array<std::pair<E, std::string_view>, N>& table,
                             std::string_view s) {
  for (const auto& [e, name] : table) {
    if (name == s) return e;
  }
  return std::nullopt;
}

template <class E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E e) {
  for (const auto& [value, name] : table) {
    if (value == e) return name;
  }
  return table.front().second;
}

constexpr std::array<std::pair<ColumnType, std::string_view>, 5> kColumnTypes{{
    {ColumnType::RcPlain, "rc_plain"},
    {ColumnType::RcOneConsole, "rc_one_console"},
    {ColumnType::RcTwoConsole, "rc_two_console"},
    {ColumnType::MetalSolid, "metal_solid"},
    {ColumnType::MetalTwoBranch, "metal_two_branch"},
}};

constexpr std::array<std::pair<PartitionType, std::string_view>, 6> kPartitionTypes{{
    {PartitionType::Ordinary, "ordinary"},
    {PartitionType::PanelShield, "panel_shield"},
    {PartitionType::GlassBlock, "glass_block"},
    {PartitionType::Glazed1, "glazed1"},
    {PartitionType::Glazed2, "glazed2"},
    {PartitionType::Brick, "brick"},
}};

constexpr std::array<std::pair<BeamSeat, std::string_view>, 3> kSeats{{
    {BeamSeat::Center, "center"},
    {BeamSeat::LeftEdge, "left_edge"},
    {BeamSeat::RightEdge, "right_edge"},
}};

// Conventional opening symbols of GOST 21.107-78, in table order.
constexpr std::array<OpeningTypeInfo, kOpeningTypeCount> kOpeningTypes{{
    {1, "Проем без четвертей (доходящий до пола)", OpeningGlyph::Plain},
    {2, "Проем без четвертей (не доходящий до пола)", OpeningGlyph::Plain},
    {3, "Проем с четвертями (доходящий до пола)", OpeningGlyph::Plain},
    {4, "Проем с четвертями (не доходящий до пола)", OpeningGlyph::Plain},
    {5, "Окно в проеме без четвертей", OpeningGlyph::Window},
    {6, "Окно в проеме с четвертями", OpeningGlyph::Window},
    {7, "Дверь однопольная в проеме без четвертей", OpeningGlyph::Door},
    {8, "Дверь однопольная в проеме с четвертями", OpeningGlyph::Door},
    {9, "Дверь двупольная в проеме без четвертей", OpeningGlyph::DoubleDoor},
    {10, "Дверь двупольная в проеме с четвертями", OpeningGlyph::DoubleDoor},
    {11, "Дверь однопольная качающаяся", OpeningGlyph::Door},
    {12, "Дверь двупольная качающаяся", OpeningGlyph::DoubleDoor},
    {13, "Дверь складчатая в проеме без четвертей", OpeningGlyph::FoldingDoor},
    {14, "Дверь складчатая в проеме с четвертями", OpeningGlyph::FoldingDoor},
    {15, "Дверь раздвижная", OpeningGlyph::Plain},
    {16, "Дверь откатная", OpeningGlyph::Plain},
    {17, "Дверь подъемная", OpeningGlyph::Plain},
    {18, "Дверь вращающаяся", OpeningGlyph::Plain},
    {19, "Ворота", OpeningGlyph::Plain},
}};

}  // namespace

std::string_view column_type_name(ColumnType t) { return name_of(kColumnTypes, t); }
std::optional<ColumnType> column_type_from_name(std::string_view s) { return lookup_name(kColumnTypes, s); }
std::string_view partition_type_name(PartitionType t) { return name_of(kPartitionTypes, t); }
std::optional<PartitionType> partition_type_from_name(std::string_view s) {
  return lookup_name(kPartitionTypes, s);
}
std::string_view beam_seat_name(BeamSeat s) { return name_of(kSeats, s); }
std::optional<BeamSeat> beam_seat_from_name(std::string_view s) { return lookup_name(kSeats, s); }

const OpeningTypeInfo& opening_type_info(int gost_type) {
  if (gost_type < 1 || gost_type > kOpeningTypeCount) {
    throw Error(ErrorCode::InvalidValue, "opening type must be 1.." + std::to_string(kOpeningTypeCount));
  }
  return kOpeningTypes[static_cast<std::size_t>(gost_type - 1)];
}

}  // namespace podo
