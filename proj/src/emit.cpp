#include "podo/emit.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "numfmt.hpp"
#include "utf8.hpp"

namespace podo {

namespace {

using detail::format_double;
using detail::format_ratio;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Flattens composite shapes so emitters only meet segments, circles, arcs and
// texts.
std::vector<Primitive> flatten(const DisplayList& list) {
  std::vector<Primitive> out;
  for (const auto& p : list.items) {
    std::visit(Overloaded{
                   [&](const DimLinear& d) {
                     for (auto& q : explode_dimension(d, p.owner)) out.push_back(std::move(q));
                   },
                   [&](const Leader& l) {
                     for (auto& q : explode_leader(l, p.style, p.owner)) out.push_back(std::move(q));
                   },
                   [&](const AxisBubble& b) {
                     out.push_back({Circle{b.center, b.r}, p.style, p.owner});
                     out.push_back({TextPrim{{b.center.x, b.center.y - b.text_height / 2}, b.text_height, b.label, 0,
                                             TextAlign::Center},
                                    p.style, p.owner});
                   },
                   [&](const auto&) { out.push_back(p); },
               },
               p.shape);
  }
  return out;
}

// Point on a circle; quarter turns are exact.
std::pair<double, double> polar(Point c, Mm r, int deg) {
  int d = ((deg % 360) + 360) % 360;
  double cs = 0, sn = 0;
  switch (d) {
    case 0: cs = 1; break;
    case 90: sn = 1; break;
    case 180: cs = -1; break;
    case 270: sn = -1; break;
    default: {
      const double rad = d * 3.14159265358979323846 / 180.0;
      cs = std::cos(rad);
      sn = std::sin(rad);
    }
  }
  return {static_cast<double>(c.x) + static_cast<double>(r) * cs, static_cast<double>(c.y) + static_cast<double>(r) * sn};
}

int sweep_deg(const Arc& a) {
  int s = ((a.a1_deg - a.a0_deg) % 360 + 360) % 360;
  return s == 0 ? 360 : s;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* dasharray(Pattern p) {
  switch (p) {
    case Pattern::Dashed: return "2 1";
    case Pattern::AxisDashDot: return "6 1 0.5 1";
    case Pattern::Solid: break;
  }
  return nullptr;
}

}  // namespace

std::string emit_svg(const DisplayList& list, int scale) {
  if (scale <= 0) scale = 1;
  const auto prims = flatten(list);
  BBox box;
  for (const auto& p : prims) box.merge(shape_bbox(p.shape));
  const Mm margin = 10 * static_cast<Mm>(scale);  // 10 paper mm
  const Mm min_x = box.empty ? 0 : box.min.x;
  const Mm max_y = box.empty ? 0 : box.max.y;
  const Mm w = box.empty ? 0 : box.width() + 2 * margin;
  const Mm h = box.empty ? 0 : box.height() + 2 * margin;

  auto X = [&](Mm x) { return format_ratio(x - min_x + margin, scale); };
  auto Y = [&](Mm y) { return format_ratio(max_y - y + margin, scale); };
  auto Xd = [&](double x) { return format_double((x - static_cast<double>(min_x) + static_cast<double>(margin)) / scale); };
  auto Yd = [&](double y) { return format_double((static_cast<double>(max_y) - y + static_cast<double>(margin)) / scale); };
  auto L = [&](Mm v) { return format_ratio(v, scale); };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << L(w) << "mm\" height=\"" << L(h)
    << "mm\" viewBox=\"0 0 " << L(w) << ' ' << L(h) << "\">\n";
  o << "<g id=\"drawing\" fill=\"none\" stroke=\"#000\" stroke-linecap=\"round\">\n";

  for (const auto& p : prims) {
    std::string stroke = " stroke-width=\"";
    stroke += format_double(p.style.weight == Weight::Thick ? kThickStrokeMm : kThinStrokeMm);
    stroke += '"';
    if (const char* dash = dasharray(p.style.pattern)) {
      stroke += " stroke-dasharray=\"";
      stroke += dash;
      stroke += '"';
    }
    if (p.owner.value != 0) stroke += " data-owner=\"" + std::to_string(p.owner.value) + "\"";

    std::visit(Overloaded{
                   [&](const Segment& s) {
                     o << "<line x1=\"" << X(s.a.x) << "\" y1=\"" << Y(s.a.y) << "\" x2=\"" << X(s.b.x) << "\" y2=\""
                       << Y(s.b.y) << '"' << stroke << "/>\n";
                   },
                   [&](const Circle& c) {
                     o << "<circle cx=\"" << X(c.center.x) << "\" cy=\"" << Y(c.center.y) << "\" r=\"" << L(c.r) << '"'
                       << stroke << "/>\n";
                   },
                   [&](const Arc& a) {
                     const int sweep = sweep_deg(a);
                     if (sweep == 360) {
                       o << "<circle cx=\"" << X(a.center.x) << "\" cy=\"" << Y(a.center.y) << "\" r=\"" << L(a.r)
                         << '"' << stroke << "/>\n";
                       return;
                     }
                     const auto [x0, y0] = polar(a.center, a.r, a.a0_deg);
                     const auto [x1, y1] = polar(a.center, a.r, a.a1_deg);
                     // counter-clockwise in world is sweep-flag 0 once Y is flipped
                     o << "<path d=\"M " << Xd(x0) << ' ' << Yd(y0) << " A " << L(a.r) << ' ' << L(a.r) << " 0 "
                       << (sweep > 180 ? 1 : 0) << " 0 " << Xd(x1) << ' ' << Yd(y1) << '"' << stroke << "/>\n";
                   },
                   [&](const TextPrim& t) {
                     const std::string x = X(t.origin.x), y = Y(t.origin.y);
                     o << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << L(t.height)
                       << "\" font-family=\"sans-serif\" fill=\"#000\" stroke=\"none\"";
                     if (t.align == TextAlign::Center) o << " text-anchor=\"middle\"";
                     if (t.rotation_deg != 0) o << " transform=\"rotate(" << -t.rotation_deg << ' ' << x << ' ' << y << ")\"";
                     if (p.owner.value != 0) o << " data-owner=\"" << p.owner.value << '"';
                     o << '>' << xml_escape(t.content) << "</text>\n";
                   },
                   [&](const auto&) {},
               },
               p.shape);
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

std::string transliterate_ascii(const std::string& utf8) {
  static const std::map<char32_t, const char*> table = [] {
    std::map<char32_t, const char*> t;
    const char* upper[] = {"A", "B", "V", "G", "D", "E", "Zh", "Z", "I", "Y", "K", "L", "M", "N", "O", "P",
                           "R", "S", "T", "U", "F", "Kh", "Ts", "Ch", "Sh", "Shch", "\"", "Y", "'", "E", "Yu", "Ya"};
    const char* lower[] = {"a", "b", "v", "g", "d", "e", "zh", "z", "i", "y", "k", "l", "m", "n", "o", "p",
                           "r", "s", "t", "u", "f", "kh", "ts", "ch", "sh", "shch", "\"", "y", "'", "e", "yu", "ya"};
    for (char32_t i = 0; i < 32; ++i) {
      t[0x0410 + i] = upper[i];
      t[0x0430 + i] = lower[i];
    }
    t[0x0401] = "Yo";
    t[0x0451] = "yo";
    t[0x00B1] = "%%p";
    t[0x00D7] = "x";
    t[0x00B0] = "%%d";
    t[0x2212] = "-";
    t[0x2013] = "-";
    t[0x2014] = "-";
    t[0x00AB] = "\"";
    t[0x00BB] = "\"";
    t[0x2116] = "No";
    return t;
  }();
  std::string out;
  for (const auto& cp : detail::split_code_points(utf8)) {
    const char32_t c = detail::decode_one(cp);
    if (c < 0x80) {
      out += static_cast<char>(c);
    } else if (auto it = table.find(c); it != table.end()) {
      out += it->second;
    } else {
      out += '?';
    }
  }
  return out;
}

namespace {

std::string dxf_text(const std::string& utf8, bool transliterate) {
  if (transliterate) return transliterate_ascii(utf8);
  std::string out;
  for (const auto& cp : detail::split_code_points(utf8)) {
    const char32_t c = detail::decode_one(cp);
    if (c < 0x80) {
      out += static_cast<char>(c);
    } else if (c == 0x00B1) {
      out += "%%p";
    } else {
      char buf[16];
      std::snprintf(buf, sizeof buf, "\\U+%04X", static_cast<unsigned>(c));
      out += buf;
    }
  }
  return out;
}

class DxfWriter {
 public:
  void pair(int code, const std::string& value) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%3d", code);
    out_ += buf;
    out_ += '\n';
    out_ += value;
    out_ += '\n';
  }
  void pair(int code, int value) { pair(code, std::to_string(value)); }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

const char* ltype_name(Pattern p) {
  switch (p) {
    case Pattern::Dashed: return "DASHED";
    case Pattern::AxisDashDot: return "DASHDOT";
    case Pattern::Solid: break;
  }
  return "CONTINUOUS";
}

}  // namespace

std::string emit_dxf(const DisplayList& list, int scale, const DxfOptions& options) {
  if (scale <= 0) scale = 1;
  const auto prims = flatten(list);
  BBox box;
  for (const auto& p : prims) box.merge(shape_bbox(p.shape));
  auto V = [&](Mm v) { return format_ratio(v, scale); };

  DxfWriter w;
  w.pair(0, "SECTION");
  w.pair(2, "HEADER");
  w.pair(9, "$ACADVER");
  w.pair(1, "AC1009");
  w.pair(9, "$INSBASE");
  w.pair(10, "0");
  w.pair(20, "0");
  w.pair(30, "0");
  w.pair(9, "$EXTMIN");
  w.pair(10, V(box.empty ? 0 : box.min.x));
  w.pair(20, V(box.empty ? 0 : box.min.y));
  w.pair(9, "$EXTMAX");
  w.pair(10, V(box.empty ? 0 : box.max.x));
  w.pair(20, V(box.empty ? 0 : box.max.y));
  w.pair(0, "ENDSEC");

  w.pair(0, "SECTION");
  w.pair(2, "TABLES");
  w.pair(0, "TABLE");
  w.pair(2, "LTYPE");
  w.pair(70, 3);
  struct Lt {
    const char* name;
    const char* descr;
    std::vector<double> parts;  // paper mm, negative = gap
  };
  const Lt ltypes[] = {
      {"CONTINUOUS", "Solid line", {}},
      {"DASHED", "__ __ __", {2.0, -1.0}},
      {"DASHDOT", "____ . ____", {6.0, -1.0, 0.5, -1.0}},
  };
  for (const auto& lt : ltypes) {
    double total = 0;
    for (double d : lt.parts) total += std::abs(d);
    w.pair(0, "LTYPE");
    w.pair(2, lt.name);
    w.pair(70, 0);
    w.pair(3, lt.descr);
    w.pair(72, 65);
    w.pair(73, static_cast<int>(lt.parts.size()));
    w.pair(40, format_double(total));
    for (double d : lt.parts) w.pair(49, format_double(d));
  }
  w.pair(0, "ENDTAB");
  w.pair(0, "TABLE");
  w.pair(2, "LAYER");
  w.pair(70, 2);
  for (const char* layer : {"THIN", "THICK"}) {
    w.pair(0, "LAYER");
    w.pair(2, layer);
    w.pair(70, 0);
    w.pair(62, 7);
    w.pair(6, "CONTINUOUS");
  }
  w.pair(0, "ENDTAB");
  w.pair(0, "ENDSEC");

  w.pair(0, "SECTION");
  w.pair(2, "ENTITIES");
  for (const auto& p : prims) {
    auto common = [&](const char* type) {
      w.pair(0, type);
      w.pair(8, p.style.weight == Weight::Thick ? "THICK" : "THIN");
      if (p.style.pattern != Pattern::Solid) w.pair(6, ltype_name(p.style.pattern));
    };
    std::visit(Overloaded{
                   [&](const Segment& s) {
                     common("LINE");
                     w.pair(10, V(s.a.x));
                     w.pair(20, V(s.a.y));
                     w.pair(30, "0");
                     w.pair(11, V(s.b.x));
                     w.pair(21, V(s.b.y));
                     w.pair(31, "0");
                   },
                   [&](const Circle& c) {
                     common("CIRCLE");
                     w.pair(10, V(c.center.x));
                     w.pair(20, V(c.center.y));
                     w.pair(30, "0");
                     w.pair(40, V(c.r));
                   },
                   [&](const Arc& a) {
                     common("ARC");
                     w.pair(10, V(a.center.x));
                     w.pair(20, V(a.center.y));
                     w.pair(30, "0");
                     w.pair(40, V(a.r));
                     w.pair(50, a.a0_deg);
                     w.pair(51, a.a1_deg);
                   },
                   [&](const TextPrim& t) {
                     common("TEXT");
                     w.pair(10, V(t.origin.x));
                     w.pair(20, V(t.origin.y));
                     w.pair(30, "0");
                     w.pair(40, V(t.height));
                     w.pair(1, dxf_text(t.content, options.transliterate));
                     if (t.rotation_deg != 0) w.pair(50, t.rotation_deg);
                     if (t.align == TextAlign::Center) {
                       w.pair(72, 1);
                       w.pair(11, V(t.origin.x));
                       w.pair(21, V(t.origin.y));
                       w.pair(31, "0");
                     }
                   },
                   [&](const auto&) {},
               },
               p.shape);
  }
  w.pair(0, "ENDSEC");
  w.pair(0, "EOF");
  return w.take();
}

}  // namespace podo
