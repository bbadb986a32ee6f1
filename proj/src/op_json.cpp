#include "podo/op_json.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "podo/drafting.hpp"
#include "podo/text_format.hpp"

namespace podo {

namespace {

using nlohmann::json;

std::optional<Mm> opt_mm(JsonReader& r, const char* key) { return r.optional_integer(key); }

ColumnRef ref_from(JsonReader& parent, const char* key) {
  JsonReader r(parent.object(key), parent.child(key));
  ColumnRef out;
  out.group = EntityId{r.id("group")};
  out.ix = static_cast<int>(r.integer("ix"));
  out.iy = static_cast<int>(r.integer("iy"));
  r.finish();
  return out;
}

Anchor anchor_of(JsonReader& r, const char* key) { return anchor_from_json(r.raw(key), r.child(key)); }

Point point_of(JsonReader& r, const char* key) { return point_from_json(r.raw(key), r.child(key)); }

std::vector<Point> polyline_of(JsonReader& r, const char* key) {
  const json& arr = r.array(key);
  std::vector<Point> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(point_from_json(arr[i], r.child(key) + "/" + std::to_string(i)));
  }
  return out;
}

template <class E>
E enum_of(JsonReader& r, const char* key, std::optional<E> (*parse)(std::string_view), E fallback) {
  if (!r.has(key)) {
    r.optional_string(key);
    return fallback;
  }
  const std::string s = r.string(key);
  const auto v = parse(s);
  if (!v) throw SchemaError(r.child(key), "unknown value '" + s + "'");
  return *v;
}

EntityId id_param(JsonReader& r) { return EntityId{r.id("id")}; }

using Handler = std::function<Model(const Model&, JsonReader&, const Catalog&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"upsert_axis_group",
       [](const Model& m, JsonReader& r, const Catalog&) {
         const std::string o = r.string("orientation");
         if (o != "h" && o != "v") throw SchemaError(r.child("orientation"), "expected \"h\" or \"v\"");
         json group = r.object("group");
         if (!group.contains("id")) group["id"] = 0;
         return upsert_axis_group(
             m, axis_group_from_json(group, o == "h" ? Orientation::H : Orientation::V, r.child("group")));
       }},
      {"delete_axis_group", [](const Model& m, JsonReader& r, const Catalog&) { return delete_axis_group(m, id_param(r)); }},
      {"place_column_group",
       [](const Model& m, JsonReader& r, const Catalog& c) {
         ColumnGroupSpec s;
         s.mark = r.optional_string("mark");
         if (r.has("unmarked_type")) {
           s.unmarked_type = enum_of<ColumnType>(r, "unmarked_type", column_type_from_name, ColumnType::RcPlain);
         } else {
           r.optional_string("unmarked_type");
         }
         s.console_len_mm = opt_mm(r, "console_len_mm");
         s.width_mm = opt_mm(r, "width_mm");
         s.thickness_mm = opt_mm(r, "thickness_mm");
         s.start = anchor_of(r, "start");
         s.end = anchor_of(r, "end");
         if (r.has("center_offset")) s.center_offset = point_of(r, "center_offset");
         s.along_x = r.boolean_or("along_x", true);
         s.is_new = r.boolean_or("is_new", false);
         s.console_left = r.boolean_or("console_left", false);
         return place_column_group(m, s, c);
       }},
      {"place_partition_chain",
       [](const Model& m, JsonReader& r, const Catalog&) {
         PartitionChainSpec s;
         s.gost_type = enum_of<PartitionType>(r, "gost_type", partition_type_from_name, PartitionType::Ordinary);
         s.thickness_mm = r.integer_or("thickness_mm", 120);
         s.bearing = r.boolean_or("bearing", false);
         s.is_new = r.boolean_or("is_new", false);
         s.polyline = polyline_of(r, "polyline");
         return place_partition_chain(m, s);
       }},
      {"place_opening",
       [](const Model& m, JsonReader& r, const Catalog& c) {
         JsonReader p(r.object("placement"), r.child("placement"));
         OpeningPlacement pl;
         pl.partition = EntityId{p.id("partition")};
         pl.offset_mm = p.integer("offset_mm");
         pl.rot180 = p.boolean_or("rot180", false);
         pl.flip_side = p.boolean_or("flip_side", false);
         p.finish();
         return place_opening(m, pl, opening_proto_from_json(r.raw("proto"), r.child("proto")), c);
       }},
      {"cycle_opening_variant",
       [](const Model& m, JsonReader& r, const Catalog&) { return cycle_opening_variant(m, id_param(r)); }},
      {"place_beam",
       [](const Model& m, JsonReader& r, const Catalog& c) {
         BeamSpec s;
         s.mark = r.optional_string("mark");
         s.length_mm = opt_mm(r, "length_mm");
         s.width_mm = opt_mm(r, "width_mm");
         s.height_mm = opt_mm(r, "height_mm");
         s.end_a = ref_from(r, "end_a");
         s.end_b = ref_from(r, "end_b");
         s.is_new = r.boolean_or("is_new", false);
         return place_beam(m, s, c);
       }},
      {"place_slab_group",
       [](const Model& m, JsonReader& r, const Catalog& c) {
         SlabGroupSpec s;
         s.mark = r.optional_string("mark");
         s.length_mm = opt_mm(r, "length_mm");
         s.width_mm = opt_mm(r, "width_mm");
         s.height_mm = opt_mm(r, "height_mm");
         s.along_x = r.boolean_or("along_x", true);
         s.anchor = anchor_of(r, "anchor");
         s.count = static_cast<int>(r.integer_or("count", 1));
         return place_slab_group(m, s, c);
       }},
      {"place_strip_foundation",
       [](const Model& m, JsonReader& r, const Catalog&) {
         StripFoundationSpec s;
         s.width_mm = r.integer("width_mm");
         s.is_new = r.boolean_or("is_new", false);
         s.polyline = polyline_of(r, "polyline");
         return place_strip_foundation(m, s);
       }},
      {"place_footing_group",
       [](const Model& m, JsonReader& r, const Catalog& c) {
         FootingGroupSpec s;
         s.mark = r.optional_string("mark");
         s.length_mm = opt_mm(r, "length_mm");
         s.width_mm = opt_mm(r, "width_mm");
         s.height_mm = opt_mm(r, "height_mm");
         s.along_x = r.boolean_or("along_x", true);
         s.start = anchor_of(r, "start");
         s.end = anchor_of(r, "end");
         if (r.has("center_offset")) s.center_offset = point_of(r, "center_offset");
         s.is_new = r.boolean_or("is_new", false);
         return place_footing_group(m, s, c);
       }},
      {"place_foundation_beam",
       [](const Model& m, JsonReader& r, const Catalog& c) {
         FoundationBeamSpec s;
         s.mark = r.optional_string("mark");
         s.length_mm = opt_mm(r, "length_mm");
         s.width_mm = opt_mm(r, "width_mm");
         s.height_mm = opt_mm(r, "height_mm");
         s.end_a = ref_from(r, "end_a");
         s.seat = enum_of<BeamSeat>(r, "seat", beam_seat_from_name, BeamSeat::Center);
         s.end_b = ref_from(r, "end_b");
         s.is_new = r.boolean_or("is_new", false);
         return place_foundation_beam(m, s, c);
       }},
      {"place_text",
       [](const Model& m, JsonReader& r, const Catalog&) {
         TextSpec s;
         const json& lines = r.array("lines");
         for (std::size_t i = 0; i < lines.size(); ++i) {
           if (!lines[i].is_string()) throw SchemaError(r.child("lines") + "/" + std::to_string(i), "expected string");
           s.lines.push_back(lines[i].get<std::string>());
         }
         s.font_height_mm = r.integer_or("font_height_mm", 350);
         s.line_step_mm = r.integer_or("line_step_mm", 500);
         s.origin = point_of(r, "origin");
         s.leader_target = point_of(r, "leader_target");
         return place_text(m, s);
       }},
      {"delete_entity", [](const Model& m, JsonReader& r, const Catalog&) { return delete_entity(m, id_param(r)); }},
      {"update_settings",
       [](const Model& m, JsonReader& r, const Catalog&) {
         return update_settings(m, settings_from_json(r.raw("settings"), r.child("settings")));
       }},
  };
  return table;
}

std::pair<std::string, const json*> split_op(const json& op) {
  if (!op.is_object()) throw SchemaError("/", "op must be an object");
  if (!op.contains("op") || !op["op"].is_string()) throw SchemaError("/op", "missing op name");
  for (auto it = op.begin(); it != op.end(); ++it) {
    if (it.key() != "op" && it.key() != "params" && it.key() != "expected_revision") {
      throw SchemaError("/" + it.key(), "unknown key");
    }
  }
  static const json empty = json::object();
  const json* params = op.contains("params") ? &op["params"] : &empty;
  return {op["op"].get<std::string>(), params};
}

void index_entities(const json& doc, std::map<std::uint32_t, json>& out) {
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!it->is_array()) continue;
    for (const auto& e : *it) {
      if (e.is_object() && e.contains("id")) out[e["id"].get<std::uint32_t>()] = e;
    }
  }
}

}  // namespace

const std::vector<std::string>& op_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

OpeningProto opening_proto_from_json(const json& j, const std::string& path) {
  JsonReader r(j, path);
  OpeningProto p;
  p.mark = r.optional_string("mark");
  p.gost_type = static_cast<int>(r.integer_or("gost_type", 1));
  p.width_mm = r.optional_integer("width_mm");
  p.height_mm = r.optional_integer("height_mm");
  p.rot180 = r.boolean_or("rot180", false);
  p.flip_side = r.boolean_or("flip_side", false);
  p.is_new = r.boolean_or("is_new", false);
  if (r.has("section_extra")) {
    p.section_extra = section_extra_from_json(r.raw("section_extra"), r.child("section_extra"));
  } else {
    r.optional_string("section_extra");
  }
  r.finish();
  return p;
}

json placement_to_json(const OpeningPlacement& p) {
  return {{"partition", p.partition.value}, {"offset_mm", p.offset_mm}, {"rot180", p.rot180}, {"flip_side", p.flip_side}};
}

std::vector<EntityId> diff_ids(const Model& before, const Model& after) {
  std::map<std::uint32_t, json> a, b;
  index_entities(model_to_json(before), a);
  index_entities(model_to_json(after), b);
  std::set<std::uint32_t> ids;
  for (const auto& [id, j] : a) {
    auto it = b.find(id);
    if (it == b.end() || it->second != j) ids.insert(id);
  }
  for (const auto& [id, j] : b) {
    if (!a.count(id)) ids.insert(id);
  }
  std::vector<EntityId> out;
  for (auto id : ids) out.push_back(EntityId{id});
  return out;
}

OpOutcome apply_op(const Model& model, const json& op, const Catalog& catalog) {
  const auto [name, params] = split_op(op);
  const auto it = handlers().find(name);
  if (it == handlers().end()) throw SchemaError("/op", "unknown op \"" + name + "\"");
  JsonReader r(*params, "/params");
  Model next = it->second(model, r, catalog);
  r.finish();
  OpOutcome out{std::move(next), {}};
  out.affected = diff_ids(model, out.model);
  return out;
}

namespace {

DisplayList ghost_of(const Model& model, const std::vector<EntityId>& ids) {
  DisplayList all = generate_plan_display(model, PlanOptions{});
  DisplayList out;
  for (const auto& p : all.items) {
    if (std::find(ids.begin(), ids.end(), p.owner) != ids.end()) out.items.push_back(p);
  }
  return out;
}

}  // namespace

PreviewOutcome preview_op(const Model& model, const json& op, const Catalog& catalog) {
  const auto [name, params] = split_op(op);
  PreviewOutcome out;
  if (name != "snap_opening_preview") {
    OpOutcome applied = apply_op(model, json{{"op", name}, {"params", *params}}, catalog);
    out.affected = applied.affected;
    out.ghost = ghost_of(applied.model, applied.affected);
    return out;
  }
  JsonReader r(*params, "/params");
  const Point cursor = point_from_json(r.raw("cursor"), r.child("cursor"));
  const OpeningProto proto = resolve_opening_proto(opening_proto_from_json(r.raw("proto"), r.child("proto")), catalog);
  r.finish();
  out.placement = snap_opening_preview(model, cursor, proto);
  if (!out.placement) return out;
  const Model placed = place_opening(model, *out.placement, proto, catalog);
  out.affected = diff_ids(model, placed);
  out.ghost = ghost_of(placed, out.affected);
  return out;
}

}  // namespace podo
