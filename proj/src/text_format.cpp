#include "podo/text_format.hpp"

#include <algorithm>

#include "podo/validate.hpp"

namespace podo {

using nlohmann::json;

namespace {

constexpr std::string_view kFormatName = "podosnova";

std::string type_name(const json& j) { return j.type_name(); }

void put_optional(json& j, const char* key, const std::optional<std::string>& v) {
  if (v) j[key] = *v;
}

void put_optional(json& j, const char* key, const std::optional<Mm>& v) {
  if (v) j[key] = *v;
}

json column_ref_json(const ColumnRef& r) { return {{"group", r.group.value}, {"ix", r.ix}, {"iy", r.iy}}; }

ColumnRef column_ref_from(const json& j, const std::string& path) {
  JsonReader r(j, path);
  ColumnRef out;
  out.group = EntityId{r.id("group")};
  out.ix = static_cast<int>(r.integer("ix"));
  out.iy = static_cast<int>(r.integer("iy"));
  r.finish();
  return out;
}

template <class T, class Fn>
std::vector<T> read_list(JsonReader& r, const std::string& key, Fn&& fn) {
  std::vector<T> out;
  const json* arr = r.optional_array(key);
  if (!arr) return out;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    out.push_back(fn((*arr)[i], r.child(key) + "/" + std::to_string(i)));
  }
  return out;
}

template <class T, class Fn>
json write_list(const std::vector<T>& list, Fn&& fn) {
  json arr = json::array();
  for (const auto& e : list) arr.push_back(fn(e));
  return arr;
}

template <class E>
E enum_from(JsonReader& r, const std::string& key, std::optional<E> (*parse)(std::string_view)) {
  const std::string s = r.string(key);
  const auto v = parse(s);
  if (!v) throw SchemaError(r.child(key), "unknown value '" + s + "'");
  return *v;
}

json column_group_json(const ColumnGroup& g) {
  json j = {{"id", g.id.value},
            {"width_mm", g.width_mm},
            {"thickness_mm", g.thickness_mm},
            {"start", anchor_to_json(g.start)},
            {"end", anchor_to_json(g.end)},
            {"center_offset", point_to_json(g.center_offset)},
            {"along_x", g.along_x},
            {"is_new", g.is_new},
            {"console_left", g.console_left}};
  put_optional(j, "mark", g.mark);
  if (g.unmarked_type) j["unmarked_type"] = column_type_name(*g.unmarked_type);
  put_optional(j, "console_len_mm", g.console_len_mm);
  return j;
}

ColumnGroup column_group_from(const json& j, const std::string& path) {
  JsonReader r(j, path);
  ColumnGroup g;
  g.id = EntityId{r.id("id")};
  g.mark = r.optional_string("mark");
  if (r.has("unmarked_type")) g.unmarked_type = enum_from<ColumnType>(r, "unmarked_type", column_type_from_name);
  g.console_len_mm = r.optional_integer("console_len_mm");
  g.width_mm = r.integer("width_mm");
  g.thickness_mm = r.integer("thickness_mm");
  g.start = anchor_from_json(r.raw("start"), r.child("start"));
  g.end = anchor_from_json(r.raw("end"), r.child("end"));
  if (r.has("center_offset")) g.center_offset = point_from_json(r.raw("center_offset"), r.child("center_offset"));
  g.along_x = r.boolean_or("along_x", true);
  g.is_new = r.boolean_or("is_new", false);
  g.console_left = r.boolean_or("console_left", false);
  r.finish();
  return g;
}

json partition_json(const Partition& p) {
  return {{"id", p.id.value},
          {"chain_id", p.chain_id.value},
          {"gost_type", partition_type_name(p.gost_type)},
          {"thickness_mm", p.thickness_mm},
          {"length_mm", p.length_mm},
          {"bearing", p.bearing},
          {"along_x", p.along_x},
          {"anchor", anchor_to_json(p.anchor)},
          {"is_new", p.is_new}};
}

Partition partition_from(const json& j, const std::string& path) {
  JsonReader r(j, path);
  Partition p;
  p.id = EntityId{r.id("id")};
  p.chain_id = EntityId{r.id("chain_id")};
  p.gost_type = enum_from<PartitionType>(r, "gost_type", partition_type_from_name);
  p.thickness_mm = r.integer("thickness_mm");
  p.length_mm = r.integer("length_mm");
  p.bearing = r.boolean_or("bearing", false);
  p.along_x = r.boolean_or("along_x", true);
  p.anchor = anchor_from_json(r.raw("anchor"), r.child("anchor"));
  p.is_new = r.boolean_or("is_new", false);
  r.finish();
  return p;
}

json opening_json(const Opening& o) {
  json j = {{"id", o.id.value},
            {"gost_type", o.gost_type},
            {"width_mm", o.width_mm},
            {"height_mm", o.height_mm},
            {"partition", o.partition.value},
            {"along_x", o.along_x},
            {"rot180", o.rot180},
            {"flip_side", o.flip_side},
            {"anchor_offset_mm", o.anchor_offset_mm},
            {"is_new", o.is_new}};
  put_optional(j, "mark", o.mark);
  if (o.section_extra) j["section_extra"] = section_extra_to_json(*o.section_extra);
  return j;
}

Opening opening_from(const json& j, const std::string& path) {
  JsonReader r(j, path);
  Opening o;
  o.id = EntityId{r.id("id")};
  o.mark = r.optional_string("mark");
  o.gost_type = static_cast<int>(r.integer("gost_type"));
  o.width_mm = r.integer("width_mm");
  o.height_mm = r.integer("height_mm");
  o.partition = EntityId{r.id("partition")};
  o.along_x = r.boolean_or("along_x", true);
  o.rot180 = r.boolean_or("rot180", false);
  o.flip_side = r.boolean_or("flip_side", false);
  o.anchor_offset_mm = r.integer("anchor_offset_mm");
  o.is_new = r.boolean_or("is_new", false);
  if (r.has("section_extra")) o.section_extra = section_extra_from_json(r.raw("section_extra"), r.child("section_extra"));
  r.finish();
  return o;
}

// L x W x H plus optional mark, shared by beams, slabs, footings.
template <class T>
void put_body(json& j, const T& e) {
  j["id"] = e.id.value;
  put_optional(j, "mark", e.mark);
  j["length_mm"] = e.length_mm;
  j["width_mm"] = e.width_mm;
  j["height_mm"] = e.height_mm;
  j["along_x"] = e.along_x;
}

template <class T>
void read_body(JsonReader& r, T& e) {
  e.id = EntityId{r.id("id")};
  e.mark = r.optional_string("mark");
  e.length_mm = r.integer("length_mm");
  e.width_mm = r.integer("width_mm");
  e.height_mm = r.integer("height_mm");
  e.along_x = r.boolean_or("along_x", true);
}

json beam_json(const Beam& b) {
  json j;
  put_body(j, b);
  j["anchor"] = anchor_to_json(b.anchor);
  j["is_new"] = b.is_new;
  j["end_a"] = column_ref_json(b.end_a);
  j["end_b"] = column_ref_json(b.end_b);
  return j;
}

Beam beam_from(const json& j, const std::string& path) {
  JsonReader r(j, path);
  Beam b;
  read_body(r, b);
  b.anchor = anchor_from_json(r.raw("anchor"), r.child("anchor"));
  b.is_new = r.boolean_or("is_new", false);
  b.end_a = column_ref_from(r.raw("end_a"), r.child("end_a"));
  b.end_b = column_ref_from(r.raw("end_b"), r.child("end_b"));
  r.finish();
  return b;
}

json slab_json(const SlabGroup& s) {
  json j;
  put_body(j, s);
  j["anchor"] = anchor_to_json(s.anchor);
  j["count"] = s.count;
  return j;
}

SlabGroup slab_from(const json& j, const std::string& path) {
  JsonReader r(j, path);
  SlabGroup s;
  read_body(r, s);
  s.anchor = anchor_from_json(r.raw("anchor"), r.child("anchor"));
  s.count = static_cast<int>(r.integer("count"));
  r.finish();
  return s;
}

json strip_json(const StripFoundation& s) {
  return {{"id", s.id.value},           {"chain_id", s.chain_id.value}, {"width_mm", s.width_mm},
          {"length_mm", s.length_mm},   {"along_x", s.along_x},         {"anchor", anchor_to_json(s.anchor)},
          {"is_new", s.is_new}};
}

StripFoundation strip_from(const json& j, const std::string& path) {
  JsonReader r(j, path);
  StripFoundation s;
  s.id = EntityId{r.id("id")};
  s.chain_id = EntityId{r.id("chain_id")};
  s.width_mm = r.integer("width_mm");
  s.length_mm = r.integer("length_mm");
  s.along_x = r.boolean_or("along_x", true);
  s.anchor = anchor_from_json(r.raw("anchor"), r.child("anchor"));
  s.is_new = r.boolean_or("is_new", false);
  r.finish();
  return s;
}

json footing_json(const FootingGroup& f) {
  json j;
  put_body(j, f);
  j["start"] = anchor_to_json(f.start);
  j["end"] = anchor_to_json(f.end);
  j["center_offset"] = point_to_json(f.center_offset);
  j["is_new"] = f.is_new;
  return j;
}

FootingGroup footing_from(const json& j, const std::string& path) {
  JsonReader r(j, path);
  FootingGroup f;
  read_body(r, f);
  f.start = anchor_from_json(r.raw("start"), r.child("start"));
  f.end = anchor_from_json(r.raw("end"), r.child("end"));
  if (r.has("center_offset")) f.center_offset = point_from_json(r.raw("center_offset"), r.child("center_offset"));
  f.is_new = r.boolean_or("is_new", false);
  r.finish();
  return f;
}

json foundation_beam_json(const FoundationBeam& b) {
  json j;
  put_body(j, b);
  j["anchor"] = anchor_to_json(b.anchor);
  j["is_new"] = b.is_new;
  j["end_a"] = column_ref_json(b.end_a);
  j["seat"] = beam_seat_name(b.seat);
  j["end_b"] = column_ref_json(b.end_b);
  return j;
}

FoundationBeam foundation_beam_from(const json& j, const std::string& path) {
  JsonReader r(j, path);
  FoundationBeam b;
  read_body(r, b);
  b.anchor = anchor_from_json(r.raw("anchor"), r.child("anchor"));
  b.is_new = r.boolean_or("is_new", false);
  b.end_a = column_ref_from(r.raw("end_a"), r.child("end_a"));
  if (r.has("seat")) b.seat = enum_from<BeamSeat>(r, "seat", beam_seat_from_name);
  b.end_b = column_ref_from(r.raw("end_b"), r.child("end_b"));
  r.finish();
  return b;
}

json text_json(const TextNote& t) {
  return {{"id", t.id.value},
          {"lines", t.lines},
          {"font_height_mm", t.font_height_mm},
          {"line_step_mm", t.line_step_mm},
          {"origin", point_to_json(t.origin)},
          {"leader_target", point_to_json(t.leader_target)}};
}

TextNote text_from(const json& j, const std::string& path) {
  JsonReader r(j, path);
  TextNote t;
  t.id = EntityId{r.id("id")};
  const json& lines = r.array("lines");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!lines[i].is_string()) throw SchemaError(r.child("lines") + "/" + std::to_string(i), "expected string");
    t.lines.push_back(lines[i].get<std::string>());
  }
  t.font_height_mm = r.integer_or("font_height_mm", 350);
  t.line_step_mm = r.integer_or("line_step_mm", 500);
  t.origin = point_from_json(r.raw("origin"), r.child("origin"));
  t.leader_target = point_from_json(r.raw("leader_target"), r.child("leader_target"));
  r.finish();
  return t;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------------------

JsonReader::JsonReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
  if (!j_.is_object()) throw SchemaError(path_.empty() ? "/" : path_, "expected object, got " + type_name(j_));
}

bool JsonReader::has(const std::string& key) const { return j_.contains(key) && !j_.at(key).is_null(); }

const json& JsonReader::raw(const std::string& key) {
  if (!j_.contains(key)) throw SchemaError(child(key), "missing");
  used_.push_back(key);
  return j_.at(key);
}

std::int64_t JsonReader::integer(const std::string& key) {
  const json& v = raw(key);
  if (!v.is_number_integer()) throw SchemaError(child(key), "expected integer, got " + type_name(v));
  return v.get<std::int64_t>();
}

std::int64_t JsonReader::integer_or(const std::string& key, std::int64_t fallback) {
  if (!has(key)) {
    if (j_.contains(key)) used_.push_back(key);
    return fallback;
  }
  return integer(key);
}

bool JsonReader::boolean_or(const std::string& key, bool fallback) {
  if (!has(key)) {
    if (j_.contains(key)) used_.push_back(key);
    return fallback;
  }
  const json& v = raw(key);
  if (!v.is_boolean()) throw SchemaError(child(key), "expected boolean, got " + type_name(v));
  return v.get<bool>();
}

std::string JsonReader::string(const std::string& key) {
  const json& v = raw(key);
  if (!v.is_string()) throw SchemaError(child(key), "expected string, got " + type_name(v));
  return v.get<std::string>();
}

std::optional<std::string> JsonReader::optional_string(const std::string& key) {
  if (!has(key)) {
    if (j_.contains(key)) used_.push_back(key);
    return std::nullopt;
  }
  return string(key);
}

std::optional<std::int64_t> JsonReader::optional_integer(const std::string& key) {
  if (!has(key)) {
    if (j_.contains(key)) used_.push_back(key);
    return std::nullopt;
  }
  return integer(key);
}

std::uint32_t JsonReader::id(const std::string& key) {
  const std::int64_t v = integer(key);
  if (v < 0 || v > 0xFFFFFFFFll) throw SchemaError(child(key), "id out of range");
  return static_cast<std::uint32_t>(v);
}

const json& JsonReader::array(const std::string& key) {
  const json& v = raw(key);
  if (!v.is_array()) throw SchemaError(child(key), "expected array, got " + type_name(v));
  return v;
}

const json* JsonReader::optional_array(const std::string& key) {
  if (!has(key)) {
    if (j_.contains(key)) used_.push_back(key);
    return nullptr;
  }
  return &array(key);
}

const json& JsonReader::object(const std::string& key) {
  const json& v = raw(key);
  if (!v.is_object()) throw SchemaError(child(key), "expected object, got " + type_name(v));
  return v;
}

void JsonReader::finish() const {
  for (auto it = j_.begin(); it != j_.end(); ++it) {
    if (std::find(used_.begin(), used_.end(), it.key()) == used_.end()) {
      throw SchemaError(child(it.key()), "unknown key");
    }
  }
}

// ---------------------------------------------------------------------------

json point_to_json(Point p) { return json::array({p.x, p.y}); }

Point point_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw SchemaError(path, "expected [x, y] integer millimeters");
  }
  return {j[0].get<Mm>(), j[1].get<Mm>()};
}

json anchor_to_json(const Anchor& a) { return {{"h", a.h_axis}, {"v", a.v_axis}, {"dx", a.dx}, {"dy", a.dy}}; }

Anchor anchor_from_json(const json& j, const std::string& path) {
  JsonReader r(j, path);
  Anchor a;
  a.h_axis = static_cast<int>(r.integer("h"));
  a.v_axis = static_cast<int>(r.integer("v"));
  a.dx = r.integer_or("dx", 0);
  a.dy = r.integer_or("dy", 0);
  r.finish();
  return a;
}

json axis_group_to_json(const AxisGroup& g) {
  json j = {{"id", g.id.value}, {"count", g.count}, {"label_start", g.label_start}};
  if (const auto* m = std::get_if<MainAxes>(&g.kind)) {
    j["main"] = {{"step_mm", m->step_mm}};
  } else {
    const auto& a = std::get<AdditionalAxes>(g.kind);
    j["additional"] = {{"base_axis", a.base_axis}, {"offset_mm", a.offset_mm}};
  }
  return j;
}

AxisGroup axis_group_from_json(const json& j, Orientation o, const std::string& path) {
  JsonReader r(j, path);
  AxisGroup g;
  g.orientation = o;
  g.id = EntityId{r.id("id")};
  g.count = static_cast<int>(r.integer("count"));
  g.label_start = r.optional_string("label_start").value_or("");
  const bool main = r.has("main");
  const bool extra = r.has("additional");
  if (main == extra) throw SchemaError(path, "exactly one of 'main' or 'additional' is required");
  if (main) {
    JsonReader m(r.object("main"), r.child("main"));
    g.kind = MainAxes{m.integer("step_mm")};
    m.finish();
  } else {
    JsonReader a(r.object("additional"), r.child("additional"));
    AdditionalAxes add;
    add.base_axis = static_cast<int>(a.integer("base_axis"));
    add.offset_mm = a.integer("offset_mm");
    a.finish();
    g.kind = add;
  }
  r.finish();
  return g;
}

json settings_to_json(const ModelSettings& s) {
  return {{"axis_label_offset_mm", s.axis_label_offset_mm},
          {"dim_offset_mm", s.dim_offset_mm},
          {"horiz_axes_lettered", s.horiz_axes_lettered},
          {"horiz_dims_above", s.horiz_dims_above},
          {"gen_font_height_mm", s.gen_font_height_mm},
          {"beam_span_tolerance_mm", s.beam_span_tolerance_mm},
          {"letter_alphabet", s.letter_alphabet}};
}

ModelSettings settings_from_json(const json& j, const std::string& path) {
  JsonReader r(j, path);
  ModelSettings s;
  s.axis_label_offset_mm = r.integer_or("axis_label_offset_mm", s.axis_label_offset_mm);
  s.dim_offset_mm = r.integer_or("dim_offset_mm", s.dim_offset_mm);
  s.horiz_axes_lettered = r.boolean_or("horiz_axes_lettered", s.horiz_axes_lettered);
  s.horiz_dims_above = r.boolean_or("horiz_dims_above", s.horiz_dims_above);
  s.gen_font_height_mm = r.integer_or("gen_font_height_mm", s.gen_font_height_mm);
  s.beam_span_tolerance_mm = r.integer_or("beam_span_tolerance_mm", s.beam_span_tolerance_mm);
  if (const json* letters = r.optional_array("letter_alphabet")) {
    s.letter_alphabet.clear();
    for (std::size_t i = 0; i < letters->size(); ++i) {
      if (!(*letters)[i].is_string()) {
        throw SchemaError(r.child("letter_alphabet") + "/" + std::to_string(i), "expected string");
      }
      s.letter_alphabet.push_back((*letters)[i].get<std::string>());
    }
  }
  r.finish();
  return s;
}

json section_extra_to_json(const OpeningSectionExtra& e) {
  json j = {{"sill_height_mm", e.sill_height_mm}, {"opening_height_mm", e.opening_height_mm}};
  if (e.lintel) {
    json l = {{"length_mm", e.lintel->length_mm}, {"width_mm", e.lintel->width_mm}, {"height_mm", e.lintel->height_mm}};
    put_optional(l, "mark", e.lintel->mark);
    j["lintel"] = l;
  }
  if (e.transom) {
    json t = {{"thickness_mm", e.transom->thickness_mm},
              {"width_mm", e.transom->width_mm},
              {"height_mm", e.transom->height_mm}};
    put_optional(t, "mark", e.transom->mark);
    j["transom"] = t;
  }
  return j;
}

OpeningSectionExtra section_extra_from_json(const json& j, const std::string& path) {
  JsonReader r(j, path);
  OpeningSectionExtra e;
  e.sill_height_mm = r.integer("sill_height_mm");
  e.opening_height_mm = r.integer("opening_height_mm");
  if (r.has("lintel")) {
    JsonReader l(r.object("lintel"), r.child("lintel"));
    Lintel lintel;
    lintel.mark = l.optional_string("mark");
    lintel.length_mm = l.integer_or("length_mm", 0);
    lintel.width_mm = l.integer_or("width_mm", 0);
    lintel.height_mm = l.integer_or("height_mm", 0);
    l.finish();
    e.lintel = lintel;
  } else if (j.contains("lintel")) {
    r.raw("lintel");
  }
  if (r.has("transom")) {
    JsonReader t(r.object("transom"), r.child("transom"));
    Transom transom;
    transom.mark = t.optional_string("mark");
    transom.thickness_mm = t.integer_or("thickness_mm", 0);
    transom.width_mm = t.integer_or("width_mm", 0);
    transom.height_mm = t.integer_or("height_mm", 0);
    t.finish();
    e.transom = transom;
  } else if (j.contains("transom")) {
    r.raw("transom");
  }
  r.finish();
  return e;
}

json model_to_json(const Model& m) {
  json j;
  j["format"] = kFormatName;
  j["version"] = kTextFormatVersion;
  j["kind"] = plan_kind_name(m.kind);
  j["settings"] = settings_to_json(m.settings);
  j["next_id"] = m.next_id;
  j["axis_groups_h"] = write_list(m.axis_groups_h, axis_group_to_json);
  j["axis_groups_v"] = write_list(m.axis_groups_v, axis_group_to_json);
  j["column_groups"] = write_list(m.column_groups, column_group_json);
  j["partitions"] = write_list(m.partitions, partition_json);
  j["openings"] = write_list(m.openings, opening_json);
  j["beams"] = write_list(m.beams, beam_json);
  j["slab_groups"] = write_list(m.slab_groups, slab_json);
  j["strip_foundations"] = write_list(m.strip_foundations, strip_json);
  j["footing_groups"] = write_list(m.footing_groups, footing_json);
  j["foundation_beams"] = write_list(m.foundation_beams, foundation_beam_json);
  j["texts"] = write_list(m.texts, text_json);
  return j;
}

Model model_from_json(const json& doc, const std::string& path) {
  JsonReader r(doc, path);
  if (r.has("format") && r.string("format") != kFormatName) {
    throw SchemaError(r.child("format"), "expected \"podosnova\"");
  }
  if (r.has("version") && r.integer("version") != kTextFormatVersion) {
    throw SchemaError(r.child("version"), "unsupported version");
  }
  Model m;
  m.kind = enum_from<PlanKind>(r, "kind", plan_kind_from_name);
  if (r.has("settings")) m.settings = settings_from_json(r.object("settings"), r.child("settings"));
  m.next_id = r.id("next_id");
  m.axis_groups_h = read_list<AxisGroup>(r, "axis_groups_h", [](const json& e, const std::string& p) {
    return axis_group_from_json(e, Orientation::H, p);
  });
  m.axis_groups_v = read_list<AxisGroup>(r, "axis_groups_v", [](const json& e, const std::string& p) {
    return axis_group_from_json(e, Orientation::V, p);
  });
  m.column_groups = read_list<ColumnGroup>(r, "column_groups", column_group_from);
  m.partitions = read_list<Partition>(r, "partitions", partition_from);
  m.openings = read_list<Opening>(r, "openings", opening_from);
  m.beams = read_list<Beam>(r, "beams", beam_from);
  m.slab_groups = read_list<SlabGroup>(r, "slab_groups", slab_from);
  m.strip_foundations = read_list<StripFoundation>(r, "strip_foundations", strip_from);
  m.footing_groups = read_list<FootingGroup>(r, "footing_groups", footing_from);
  m.foundation_beams = read_list<FoundationBeam>(r, "foundation_beams", foundation_beam_from);
  m.texts = read_list<TextNote>(r, "texts", text_from);
  r.finish();
  return m;
}

std::string save_text(const Model& model) { return model_to_json(model).dump(2) + "\n"; }

Model parse_text(std::string_view text) { return model_from_json(parse_json(text)); }

Model load_text(std::string_view text) {
  Model m = parse_text(text);
  const auto issues = check_model(m);
  if (!issues.empty()) {
    const Issue& first = issues.front();
    switch (first.code) {
      case ErrorCode::DanglingReference:
      case ErrorCode::UnknownAxis:
      case ErrorCode::UnknownColumn:
      case ErrorCode::UnknownFooting:
      case ErrorCode::UnknownEntity:
        throw Error(ErrorCode::IntegrityError, first.message, first.entity);
      default:
        throw Error(first.code, first.message, first.entity);
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Section documents

json section_to_json(const SectionSpec& s) {
  json floors = json::array();
  for (const auto& f : s.floors) {
    json jf = {{"plan", f.plan}, {"level_mm", f.level_mm}};
    put_optional(jf, "ceiling_plan", f.ceiling_plan);
    floors.push_back(jf);
  }
  json polyline = json::array();
  for (const auto& p : s.secant.polyline) polyline.push_back(point_to_json(p));
  json j = {{"floors", floors},
            {"secant",
             {{"polyline", polyline},
              {"view", s.secant.view == ViewDirection::LeftOfTravel ? "left_of_travel" : "right_of_travel"}}},
            {"letter", s.letter},
            {"scale", s.scale}};
  if (s.foundation) j["foundation"] = {{"plan", s.foundation->plan}, {"sole_level_mm", s.foundation->sole_level_mm}};
  if (s.roof) j["roof"] = {{"plan", s.roof->plan}, {"underside_level_mm", s.roof->underside_level_mm}};
  put_optional(j, "top_level_mm", s.top_level_mm);
  return j;
}

SectionSpec section_from_json(const json& doc, const std::string& path) {
  JsonReader r(doc, path);
  SectionSpec s;
  const json& floors = r.array("floors");
  for (std::size_t i = 0; i < floors.size(); ++i) {
    JsonReader f(floors[i], r.child("floors") + "/" + std::to_string(i));
    SectionFloor floor;
    floor.plan = f.string("plan");
    floor.level_mm = f.integer("level_mm");
    floor.ceiling_plan = f.optional_string("ceiling_plan");
    f.finish();
    s.floors.push_back(floor);
  }
  if (r.has("foundation")) {
    JsonReader f(r.object("foundation"), r.child("foundation"));
    s.foundation = SectionFoundation{f.string("plan"), f.integer("sole_level_mm")};
    f.finish();
  }
  if (r.has("roof")) {
    JsonReader f(r.object("roof"), r.child("roof"));
    s.roof = SectionRoof{f.string("plan"), f.integer("underside_level_mm")};
    f.finish();
  }
  {
    JsonReader sec(r.object("secant"), r.child("secant"));
    const json& poly = sec.array("polyline");
    for (std::size_t i = 0; i < poly.size(); ++i) {
      s.secant.polyline.push_back(point_from_json(poly[i], sec.child("polyline") + "/" + std::to_string(i)));
    }
    if (sec.has("view")) {
      const std::string view = sec.string("view");
      if (view == "left_of_travel") {
        s.secant.view = ViewDirection::LeftOfTravel;
      } else if (view == "right_of_travel") {
        s.secant.view = ViewDirection::RightOfTravel;
      } else {
        throw SchemaError(sec.child("view"), "unknown value '" + view + "'");
      }
    }
    sec.finish();
  }
  s.letter = r.optional_string("letter").value_or("А");
  s.scale = static_cast<int>(r.integer_or("scale", 100));
  s.top_level_mm = r.optional_integer("top_level_mm");
  r.finish();
  return s;
}

std::string save_section_text(const SectionSpec& spec) {
  return json{{"section", section_to_json(spec)}}.dump(2) + "\n";
}

SectionSpec load_section_text(std::string_view text) {
  const json doc = parse_json(text);
  JsonReader r(doc, "");
  SectionSpec s = section_from_json(r.object("section"), "/section");
  r.finish();
  return s;
}

}  // namespace podo
