#include "podo/display_json.hpp"

#include "podo/text_format.hpp"

namespace podo {

namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const char* pattern_name(Pattern p) {
  switch (p) {
    case Pattern::Dashed: return "dashed";
    case Pattern::AxisDashDot: return "axis_dash_dot";
    case Pattern::Solid: break;
  }
  return "solid";
}

json shape_json(const Shape& shape) {
  return std::visit(
      Overloaded{
          [](const Segment& s) { return json{{"a", point_to_json(s.a)}, {"b", point_to_json(s.b)}}; },
          [](const Circle& c) { return json{{"center", point_to_json(c.center)}, {"r", c.r}}; },
          [](const Arc& a) {
            return json{{"center", point_to_json(a.center)}, {"r", a.r}, {"a0_deg", a.a0_deg}, {"a1_deg", a.a1_deg}};
          },
          [](const TextPrim& t) {
            return json{{"origin", point_to_json(t.origin)},
                        {"height", t.height},
                        {"content", t.content},
                        {"rotation_deg", t.rotation_deg},
                        {"align", t.align == TextAlign::Center ? "center" : "left"}};
          },
          [](const DimLinear& d) {
            return json{{"p1", point_to_json(d.p1)},
                        {"p2", point_to_json(d.p2)},
                        {"offset", d.offset},
                        {"text", d.text},
                        {"text_height", d.text_height}};
          },
          [](const AxisBubble& b) {
            return json{{"center", point_to_json(b.center)}, {"r", b.r}, {"label", b.label}, {"text_height", b.text_height}};
          },
          [](const Leader& l) {
            json pts = json::array();
            for (Point p : l.points) pts.push_back(point_to_json(p));
            return json{{"points", pts}, {"text", l.text}, {"text_height", l.text_height}, {"line_step", l.line_step}};
          },
      },
      shape);
}

Shape shape_from(JsonReader& r, const std::string& kind) {
  auto pt = [&](const char* key) { return point_from_json(r.raw(key), r.child(key)); };
  if (kind == "segment") return Segment{pt("a"), pt("b")};
  if (kind == "circle") {
    Circle c;
    c.center = pt("center");
    c.r = r.integer("r");
    return c;
  }
  if (kind == "arc") {
    Arc a;
    a.center = pt("center");
    a.r = r.integer("r");
    a.a0_deg = static_cast<int>(r.integer("a0_deg"));
    a.a1_deg = static_cast<int>(r.integer("a1_deg"));
    return a;
  }
  if (kind == "text") {
    TextPrim t;
    t.origin = pt("origin");
    t.height = r.integer("height");
    t.content = r.string("content");
    t.rotation_deg = static_cast<int>(r.integer_or("rotation_deg", 0));
    const std::string align = r.has("align") ? r.string("align") : "left";
    if (align == "center") t.align = TextAlign::Center;
    else if (align != "left") throw SchemaError(r.child("align"), "unknown alignment \"" + align + "\"");
    return t;
  }
  if (kind == "dim_linear") {
    DimLinear d;
    d.p1 = pt("p1");
    d.p2 = pt("p2");
    d.offset = r.integer("offset");
    d.text = r.string("text");
    d.text_height = r.integer("text_height");
    return d;
  }
  if (kind == "axis_bubble") {
    AxisBubble b;
    b.center = pt("center");
    b.r = r.integer("r");
    b.label = r.string("label");
    b.text_height = r.integer("text_height");
    return b;
  }
  if (kind == "leader") {
    Leader l;
    const auto& pts = r.array("points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      l.points.push_back(point_from_json(pts[i], r.child("points") + "/" + std::to_string(i)));
    }
    l.text = r.string("text");
    l.text_height = r.integer("text_height");
    l.line_step = r.integer("line_step");
    return l;
  }
  throw SchemaError(r.child("kind"), "unknown primitive kind \"" + kind + "\"");
}

}  // namespace

json display_to_json(const DisplayList& list) {
  json out = json::array();
  for (const auto& p : list.items) {
    json j = shape_json(p.shape);
    j["kind"] = shape_kind_name(p.shape);
    j["weight"] = p.style.weight == Weight::Thick ? "thick" : "thin";
    j["pattern"] = pattern_name(p.style.pattern);
    j["owner"] = p.owner.value;
    out.push_back(std::move(j));
  }
  return out;
}

DisplayList display_from_json(const json& doc) {
  if (!doc.is_array()) throw SchemaError("", "display list must be an array");
  DisplayList out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    JsonReader r(doc[i], "/" + std::to_string(i));
    const std::string kind = r.string("kind");
    Primitive p;
    p.shape = shape_from(r, kind);
    const std::string weight = r.string("weight");
    if (weight == "thick") p.style.weight = Weight::Thick;
    else if (weight != "thin") throw SchemaError(r.child("weight"), "unknown weight \"" + weight + "\"");
    const std::string pattern = r.string("pattern");
    if (pattern == "dashed") p.style.pattern = Pattern::Dashed;
    else if (pattern == "axis_dash_dot") p.style.pattern = Pattern::AxisDashDot;
    else if (pattern != "solid") throw SchemaError(r.child("pattern"), "unknown pattern \"" + pattern + "\"");
    p.owner = EntityId{r.id("owner")};
    r.finish();
    out.items.push_back(std::move(p));
  }
  return out;
}

}  // namespace podo
