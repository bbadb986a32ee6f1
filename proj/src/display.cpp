#include "podo/display.hpp"

#include <algorithm>
#include <cstdlib>

#include "utf8.hpp"

namespace podo {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

BBox text_bbox(const TextPrim& t) {
  const Mm w = text_width(t.content, t.height);
  const Mm lead = t.align == TextAlign::Center ? w / 2 : 0;
  BBox b;
  if (t.rotation_deg == 90) {
    b.add({t.origin.x - t.height, t.origin.y - lead});
    b.add({t.origin.x, t.origin.y - lead + w});
  } else {
    b.add({t.origin.x - lead, t.origin.y});
    b.add({t.origin.x - lead + w, t.origin.y + t.height});
  }
  return b;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto at = text.find('\n', start);
    out.push_back(text.substr(start, at == std::string::npos ? std::string::npos : at - start));
    if (at == std::string::npos) return out;
    start = at + 1;
  }
}

}  // namespace

Mm DimLinear::measured() const { return horizontal() ? std::llabs(p2.x - p1.x) : std::llabs(p2.y - p1.y); }

void BBox::add(Point p) {
  if (empty) {
    min = max = p;
    empty = false;
    return;
  }
  min = {std::min(min.x, p.x), std::min(min.y, p.y)};
  max = {std::max(max.x, p.x), std::max(max.y, p.y)};
}

void BBox::merge(const BBox& other) {
  if (other.empty) return;
  add(other.min);
  add(other.max);
}

Mm text_width(const std::string& text, Mm height) {
  return static_cast<Mm>(detail::split_code_points(text).size()) * height * 7 / 10;
}

BBox shape_bbox(const Shape& shape) {
  BBox b;
  std::visit(Overloaded{
                 [&](const Segment& s) {
                   b.add(s.a);
                   b.add(s.b);
                 },
                 [&](const Circle& c) {
                   b.add({c.center.x - c.r, c.center.y - c.r});
                   b.add({c.center.x + c.r, c.center.y + c.r});
                 },
                 [&](const Arc& a) {
                   b.add({a.center.x - a.r, a.center.y - a.r});
                   b.add({a.center.x + a.r, a.center.y + a.r});
                 },
                 [&](const TextPrim& t) { b.merge(text_bbox(t)); },
                 [&](const DimLinear& d) {
                   for (const auto& p : explode_dimension(d)) b.merge(shape_bbox(p.shape));
                 },
                 [&](const AxisBubble& a) {
                   b.add({a.center.x - a.r, a.center.y - a.r});
                   b.add({a.center.x + a.r, a.center.y + a.r});
                 },
                 [&](const Leader& l) {
                   for (const auto& p : explode_leader(l, {}, {})) b.merge(shape_bbox(p.shape));
                 },
             },
             shape);
  return b;
}

BBox DisplayList::bbox() const {
  BBox b;
  for (const auto& p : items) b.merge(shape_bbox(p.shape));
  return b;
}

std::string_view shape_kind_name(const Shape& shape) {
  return std::visit(Overloaded{
                        [](const Segment&) { return std::string_view("segment"); },
                        [](const Circle&) { return std::string_view("circle"); },
                        [](const Arc&) { return std::string_view("arc"); },
                        [](const TextPrim&) { return std::string_view("text"); },
                        [](const DimLinear&) { return std::string_view("dim_linear"); },
                        [](const AxisBubble&) { return std::string_view("axis_bubble"); },
                        [](const Leader&) { return std::string_view("leader"); },
                    },
                    shape);
}

std::vector<Primitive> explode_dimension(const DimLinear& dim, EntityId owner) {
  const Style thin{Weight::Thin, Pattern::Solid};
  const Mm h = dim.text_height;
  const Mm overshoot = h / 2;
  const Mm tick = h / 3;
  const Mm sign = dim.offset < 0 ? -1 : 1;
  std::vector<Primitive> out;
  auto seg = [&](Point a, Point b) { out.push_back({Segment{a, b}, thin, owner}); };

  if (dim.horizontal()) {
    const Mm xa = std::min(dim.p1.x, dim.p2.x);
    const Mm xb = std::max(dim.p1.x, dim.p2.x);
    const Mm yd = dim.p1.y + dim.offset;
    seg({xa - overshoot, yd}, {xb + overshoot, yd});
    seg(dim.p1, {dim.p1.x, yd + sign * overshoot});
    seg(dim.p2, {dim.p2.x, yd + sign * overshoot});
    seg({xa - tick, yd - tick}, {xa + tick, yd + tick});
    seg({xb - tick, yd - tick}, {xb + tick, yd + tick});
    out.push_back({TextPrim{{xa + (xb - xa) / 2, yd + h / 4}, h, dim.text, 0, TextAlign::Center}, thin, owner});
  } else {
    const Mm ya = std::min(dim.p1.y, dim.p2.y);
    const Mm yb = std::max(dim.p1.y, dim.p2.y);
    const Mm xd = dim.p1.x + dim.offset;
    seg({xd, ya - overshoot}, {xd, yb + overshoot});
    seg(dim.p1, {xd + sign * overshoot, dim.p1.y});
    seg(dim.p2, {xd + sign * overshoot, dim.p2.y});
    seg({xd - tick, ya - tick}, {xd + tick, ya + tick});
    seg({xd - tick, yb - tick}, {xd + tick, yb + tick});
    out.push_back({TextPrim{{xd - h / 4, ya + (yb - ya) / 2}, h, dim.text, 90, TextAlign::Center}, thin, owner});
  }
  return out;
}

std::vector<Primitive> explode_leader(const Leader& leader, Style style, EntityId owner) {
  std::vector<Primitive> out;
  for (std::size_t i = 1; i < leader.points.size(); ++i) {
    out.push_back({Segment{leader.points[i - 1], leader.points[i]}, style, owner});
  }
  if (!leader.points.empty()) {
    out.push_back({Circle{leader.points.front(), std::max<Mm>(leader.text_height / 5, 1)}, style, owner});
  }
  const Point shelf = leader.points.empty() ? Point{} : leader.points.back();
  const auto lines = split_lines(leader.text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Point origin{shelf.x, shelf.y - static_cast<Mm>(i) * leader.line_step};
    out.push_back({TextPrim{origin, leader.text_height, lines[i]}, style, owner});
  }
  return out;
}

}  // namespace podo
