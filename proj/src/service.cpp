#include "podo/service.hpp"

#include <httplib.h>

#include <fstream>

#include "podo/capsule.hpp"
#include "podo/display_json.hpp"
#include "podo/drafting.hpp"
#include "podo/op_json.hpp"
#include "podo/text_format.hpp"

namespace podo {

namespace {

using nlohmann::json;

HttpResponse json_response(int status, const json& body) {
  HttpResponse r;
  r.status = status;
  r.body = body.dump() + "\n";
  return r;
}

HttpResponse error_response(int status, std::string_view name, const std::string& message, EntityId entity = {}) {
  json body = {{"error", name}, {"message", message}};
  if (entity.value != 0) body["entity"] = entity.value;
  return json_response(status, body);
}

HttpResponse from_error(const Error& e) {
  int status = 422;
  switch (e.code()) {
    case ErrorCode::SchemaError: status = 400; break;
    case ErrorCode::UnknownEntity: status = 404; break;
    default: break;
  }
  const auto* schema = dynamic_cast<const SchemaError*>(&e);
  HttpResponse r = error_response(status, error_name(e.code()), e.what(), e.entity());
  if (schema) {
    json body = json::parse(r.body);
    body["path"] = schema->path();
    r.body = body.dump() + "\n";
  }
  return r;
}

json parse_body(const std::string& body) {
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw SchemaError("/", std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < path.size()) {
    if (path[i] == '/') {
      ++i;
      continue;
    }
    const std::size_t j = path.find('/', i);
    out.push_back(path.substr(i, j == std::string::npos ? std::string::npos : j - i));
    if (j == std::string::npos) break;
    i = j;
  }
  return out;
}

json ids_json(const std::vector<EntityId>& ids) {
  json out = json::array();
  for (auto id : ids) out.push_back(id.value);
  return out;
}

json record_json(const MarkRecord& r) {
  json j = {{"family", family_name(r.family)},
            {"mark", render_mark_string(r)},
            {"name", r.name()},
            {"dims", r.dims()},
            {"series_note", r.series_note},
            {"height_first", r.height_first}};
  if (r.mark.metric) j["metric"] = r.mark.metric->to_string();
  if (r.mark.tag) j["tag"] = *r.mark.tag;
  if (r.bearing) {
    j["bearing"] = {{"+X", r.bearing->pos_x}, {"-X", r.bearing->neg_x}, {"+Y", r.bearing->pos_y}, {"-Y", r.bearing->neg_y}};
  }
  return j;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

Service::Service(const Catalog& catalog, std::optional<std::filesystem::path> capsule_dir)
    : catalog_(catalog), capsule_dir_(std::move(capsule_dir)) {}

std::shared_ptr<Service::Entry> Service::find(const std::string& id) const {
  std::shared_lock lock(store_lock_);
  auto it = store_.find(id);
  return it == store_.end() ? nullptr : it->second;
}

std::optional<std::uint64_t> Service::revision(const std::string& model_id) const {
  auto e = find(model_id);
  if (!e) return std::nullopt;
  std::shared_lock lock(e->read);
  return e->revisions.size() - 1;
}

HttpResponse Service::handle(const HttpRequest& req) {
  try {
    const auto parts = split_path(req.path);
    if (parts.size() == 1 && parts[0] == "models" && req.method == "POST") return create_model(req);
    if (parts.size() == 2 && parts[0] == "models" && req.method == "GET") return get_model(parts[1], req);
    if (parts.size() == 3 && parts[0] == "models") {
      if (parts[2] == "ops" && req.method == "POST") return post_op(parts[1], req);
      if (parts[2] == "display" && req.method == "GET") return get_display(parts[1], req);
      if (parts[2] == "preview" && req.method == "POST") return post_preview(parts[1], req);
    }
    if (parts.size() == 2 && parts[0] == "catalog" && req.method == "GET") return get_catalog(parts[1]);
    return error_response(404, "NotFound", "no route for " + req.method + " " + req.path);
  } catch (const Error& e) {
    return from_error(e);
  } catch (const std::exception& e) {
    return error_response(500, "InternalError", e.what());
  }
}

HttpResponse Service::create_model(const HttpRequest& req) {
  parse_body(req.body);  // malformed JSON is a 400 before any model check
  Model model = load_text(req.body);
  auto entry = std::make_shared<Entry>();
  entry->revisions.push_back(model);
  std::string id;
  {
    std::unique_lock lock(store_lock_);
    id = "m" + std::to_string(next_model_++);
    store_[id] = entry;
  }
  persist(id, model);
  return json_response(201, {{"id", id}, {"revision", 0}});
}

std::optional<Model> Service::snapshot(const Entry& e, const HttpRequest& req, std::uint64_t* rev,
                                       HttpResponse* error) const {
  std::shared_lock lock(e.read);
  std::uint64_t r = e.revisions.size() - 1;
  if (auto it = req.query.find("rev"); it != req.query.end()) {
    try {
      std::size_t used = 0;
      r = std::stoull(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("rev");
    } catch (const std::exception&) {
      *error = error_response(400, "SchemaError", "rev must be a non-negative integer");
      return std::nullopt;
    }
    if (r >= e.revisions.size()) {
      *error = error_response(404, "UnknownRevision", "revision " + it->second + " does not exist");
      return std::nullopt;
    }
  }
  *rev = r;
  return e.revisions[r];
}

HttpResponse Service::get_model(const std::string& id, const HttpRequest& req) {
  auto e = find(id);
  if (!e) return error_response(404, "UnknownModel", "no model " + id);
  HttpResponse err;
  std::uint64_t rev = 0;
  auto model = snapshot(*e, req, &rev, &err);
  if (!model) return err;
  HttpResponse r;
  r.body = save_text(*model);
  r.headers["X-Podo-Revision"] = std::to_string(rev);
  return r;
}

HttpResponse Service::post_op(const std::string& id, const HttpRequest& req) {
  auto e = find(id);
  if (!e) return error_response(404, "UnknownModel", "no model " + id);
  const json op = parse_body(req.body);
  if (!op.is_object() || !op.contains("expected_revision") || !op["expected_revision"].is_number_unsigned()) {
    throw SchemaError("/expected_revision", "required non-negative integer");
  }
  const std::uint64_t expected = op["expected_revision"].get<std::uint64_t>();

  std::lock_guard write(e->write);
  std::uint64_t current = 0;
  Model base;
  {
    std::shared_lock lock(e->read);
    current = e->revisions.size() - 1;
    base = e->revisions.back();
  }
  if (expected != current) {
    json body = {{"error", "RevisionConflict"},
                 {"message", "expected revision " + std::to_string(expected) + ", current is " + std::to_string(current)},
                 {"current_revision", current}};
    return json_response(409, body);
  }
  OpOutcome out = apply_op(base, op, catalog_);
  {
    std::unique_lock lock(e->read);
    e->revisions.push_back(out.model);
  }
  persist(id, out.model);
  return json_response(200, {{"revision", current + 1}, {"affected", ids_json(out.affected)}});
}

HttpResponse Service::get_display(const std::string& id, const HttpRequest& req) {
  auto e = find(id);
  if (!e) return error_response(404, "UnknownModel", "no model " + id);
  HttpResponse err;
  std::uint64_t rev = 0;
  auto model = snapshot(*e, req, &rev, &err);
  if (!model) return err;
  HttpResponse r = json_response(200, display_to_json(generate_plan_display(*model)));
  r.headers["X-Podo-Revision"] = std::to_string(rev);
  return r;
}

HttpResponse Service::post_preview(const std::string& id, const HttpRequest& req) {
  auto e = find(id);
  if (!e) return error_response(404, "UnknownModel", "no model " + id);
  const json op = parse_body(req.body);
  HttpResponse err;
  std::uint64_t rev = 0;
  auto model = snapshot(*e, req, &rev, &err);
  if (!model) return err;
  const PreviewOutcome p = preview_op(*model, op, catalog_);
  json body = {{"revision", rev}, {"affected", ids_json(p.affected)}, {"ghost", display_to_json(p.ghost)}};
  const bool snap = op.is_object() && op.value("op", "") == "snap_opening_preview";
  if (snap) {
    body["status"] = p.placement ? "ok" : "NoTarget";
    body["placement"] = p.placement ? placement_to_json(*p.placement) : json(nullptr);
  } else {
    body["status"] = "ok";
  }
  return json_response(200, body);
}

HttpResponse Service::get_catalog(const std::string& family) {
  for (MarkFamily f : all_families()) {
    if (lower(std::string(family_name(f))) == lower(family)) {
      json out = json::array();
      for (const auto& r : catalog_.records(f)) out.push_back(record_json(r));
      return json_response(200, out);
    }
  }
  return error_response(404, "UnknownFamily", "no catalog family " + family);
}

void Service::persist(const std::string& id, const Model& model) const {
  if (!capsule_dir_) return;
  std::filesystem::create_directories(*capsule_dir_);
  const auto bytes = encode_capsule(model);
  std::ofstream out(*capsule_dir_ / (id + ".podo"), std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void Service::mount(httplib::Server& server) {
  auto bridge = [this](const httplib::Request& in, httplib::Response& out) {
    HttpRequest req;
    req.method = in.method;
    req.path = in.path;
    req.body = in.body;
    for (const auto& [k, v] : in.params) req.query[k] = v;
    const HttpResponse r = handle(req);
    out.status = r.status;
    for (const auto& [k, v] : r.headers) out.set_header(k, v);
    out.set_header("Access-Control-Allow-Origin", "*");
    out.set_content(r.body, r.content_type);
  };
  server.Get(R"(/.*)", bridge);
  server.Post(R"(/.*)", bridge);
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& out) {
    out.set_header("Access-Control-Allow-Origin", "*");
    out.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    out.set_header("Access-Control-Allow-Headers", "Content-Type");
    out.status = 204;
  });
}

int serve(const std::string& host, int port, const std::optional<std::filesystem::path>& capsule_dir) {
  Service service(Catalog::builtin(), capsule_dir);
  httplib::Server server;
  service.mount(server);
  return server.listen(host, port) ? 0 : 1;
}

}  // namespace podo
