#pragma once

#include <string>
#include <variant>
#include <vector>

#include "podo/types.hpp"

namespace podo {

// Display lists are the only geometry the kernel produces. Coordinates are
// world millimeters; text heights too, so a list is independent of the
// output scale.

enum class Weight { Thin, Thick };
enum class Pattern { Solid, Dashed, AxisDashDot };

struct Style {
  Weight weight = Weight::Thin;
  Pattern pattern = Pattern::Solid;
  friend bool operator==(const Style&, const Style&) = default;
};

struct Segment {
  Point a;
  Point b;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Circle {
  Point center;
  Mm r = 0;
  friend bool operator==(const Circle&, const Circle&) = default;
};

// Counter-clockwise from a0 to a1, whole degrees.
struct Arc {
  Point center;
  Mm r = 0;
  int a0_deg = 0;
  int a1_deg = 90;
  friend bool operator==(const Arc&, const Arc&) = default;
};

enum class TextAlign { Left, Center };

struct TextPrim {
  Point origin;  // baseline start, or baseline middle when centered
  Mm height = 250;
  std::string content;
  int rotation_deg = 0;  // 0 or 90
  TextAlign align = TextAlign::Left;
  friend bool operator==(const TextPrim&, const TextPrim&) = default;
};

// Linear dimension between two points sharing x or y. The dimension line
// runs parallel to p1-p2, shifted by `offset` along +Y (horizontal
// dimensions) or +X (vertical ones).
struct DimLinear {
  Point p1;
  Point p2;
  Mm offset = 0;
  std::string text;
  Mm text_height = 250;

  bool horizontal() const { return p1.y == p2.y; }
  Mm measured() const;
  friend bool operator==(const DimLinear&, const DimLinear&) = default;
};

struct AxisBubble {
  Point center;
  Mm r = 0;
  std::string label;
  Mm text_height = 250;
  friend bool operator==(const AxisBubble&, const AxisBubble&) = default;
};

struct Leader {
  std::vector<Point> points;  // from the target to the text shelf
  std::string text;  // lines separated by '\n'
  Mm text_height = 250;
  Mm line_step = 500;
  friend bool operator==(const Leader&, const Leader&) = default;
};

using Shape = std::variant<Segment, Circle, Arc, TextPrim, DimLinear, AxisBubble, Leader>;

struct Primitive {
  Shape shape;
  Style style;
  EntityId owner;
  friend bool operator==(const Primitive&, const Primitive&) = default;
};

struct BBox {
  Point min;
  Point max;
  bool empty = true;

  void add(Point p);
  void merge(const BBox& other);
  Mm width() const { return empty ? 0 : max.x - min.x; }
  Mm height() const { return empty ? 0 : max.y - min.y; }
  friend bool operator==(const BBox&, const BBox&) = default;
};

struct DisplayList {
  std::vector<Primitive> items;

  void add(Shape shape, Style style = {}, EntityId owner = {}) {
    items.push_back({std::move(shape), style, owner});
  }
  void append(const DisplayList& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }
  BBox bbox() const;
  bool empty() const { return items.empty(); }
  friend bool operator==(const DisplayList&, const DisplayList&) = default;
};

BBox shape_bbox(const Shape& shape);

std::string_view shape_kind_name(const Shape& shape);

// Rough advance width of a text run: 0.7 of the height per code point.
Mm text_width(const std::string& text, Mm height);

/// Breaks a dimension into plain primitives: dimension line, two extension
/// lines, two oblique serifs and the value text, all thin. Emitters without native
/// dimensions draw this.
std::vector<Primitive> explode_dimension(const DimLinear& dim, EntityId owner = {});

/// Breaks a leader into its polyline segments, a target dot and text lines.
std::vector<Primitive> explode_leader(const Leader& leader, Style style, EntityId owner);

}  // namespace podo
