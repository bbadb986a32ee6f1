#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "podo/types.hpp"

namespace podo {

enum class MarkFamily { Column, Opening, Lintel, Transom, Beam, Slab, Footing, FoundationBeam };

std::string_view family_name(MarkFamily family);
std::optional<MarkFamily> family_from_name(std::string_view name);
const std::vector<MarkFamily>& all_families();

// Fixed-point decimal that remembers how many fraction digits were written,
// so "1.60" and "1.6" stay distinct.
struct Decimal {
  std::int64_t units = 0;
  int scale = 0;

  double value() const;
  std::string to_string() const;
  static std::optional<Decimal> parse(std::string_view text);

  friend bool operator==(const Decimal&, const Decimal&) = default;
};

// Directions in which a beam may leave a column, in the column's own frame.
struct BearingTable {
  bool pos_x = true;
  bool neg_x = true;
  bool pos_y = true;
  bool neg_y = true;

  friend bool operator==(const BearingTable&, const BearingTable&) = default;
};

// What a mark string carries by itself.
struct MarkFragment {
  std::string name;
  std::vector<Mm> dims;
  std::optional<Decimal> metric;
  // Non-numeric trailing item, e.g. "АПЩР2" in "ДН 21-13АПЩ (2085 x 1274, АПЩР2)".
  std::optional<std::string> tag;

  friend bool operator==(const MarkFragment&, const MarkFragment&) = default;
};

struct Unmarked {
  std::string text;
  friend bool operator==(const Unmarked&, const Unmarked&) = default;
};

struct MarkRecord {
  MarkFamily family = MarkFamily::Column;
  MarkFragment mark;
  std::string series_note;
  std::optional<BearingTable> bearing;
  // Opening marks such as doors list height before width.
  bool height_first = false;

  const std::string& name() const { return mark.name; }
  const std::vector<Mm>& dims() const { return mark.dims; }

  friend bool operator==(const MarkRecord&, const MarkRecord&) = default;
};

/// Parses `NAME "(" D1 "x" D2 ["x" D3] ["," METRIC] ")"`.
///
/// Whitespace runs inside the name collapse to one space. Strings starting
/// with "Немаркированн" yield Unmarked. Throws ParseError carrying the byte
/// offset of the first malformed character.
std::variant<MarkFragment, Unmarked> parse_mark_string(std::string_view text);

std::string render_mark_string(const MarkFragment& mark);
inline std::string render_mark_string(const MarkRecord& record) {
  return render_mark_string(record.mark);
}

class Catalog {
 public:
  Catalog() = default;

  /// Line format: family TAB mark-string TAB note [TAB attributes].
  /// Attributes are `key=value` pairs separated by ';' (bearing=+X,-X; order=HW).
  static Catalog load(std::istream& in);
  static Catalog load_file(const std::string& path);
  static Catalog from_string(std::string_view text);
  // The sample catalog shipped in data/catalog.tsv, compiled in.
  static const Catalog& builtin();

  const MarkRecord* lookup(MarkFamily family, std::string_view name) const;
  const std::vector<MarkRecord>& records(MarkFamily family) const;
  std::size_t size() const;

 private:
  std::map<MarkFamily, std::vector<MarkRecord>> records_;
};

}  // namespace podo
