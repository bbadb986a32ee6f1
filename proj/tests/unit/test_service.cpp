#include <doctest.h>

#include <filesystem>
#include <thread>

#include <unistd.h>

#include "httplib.h"
#include "json.hpp"

#include "fixtures.hpp"
#include "podo/display_json.hpp"
#include "podo/drafting.hpp"
#include "podo/service.hpp"
#include "podo/text_format.hpp"

using namespace podo;
using nlohmann::json;

namespace {

HttpResponse call(Service& s, const std::string& method, const std::string& path, const std::string& body = {},
                  std::map<std::string, std::string> query = {}) {
  return s.handle(HttpRequest{method, path, std::move(query), body});
}

std::string create(Service& s, const Model& m) {
  const HttpResponse r = call(s, "POST", "/models", save_text(m));
  REQUIRE(r.status == 201);
  const json j = json::parse(r.body);
  CHECK(j["revision"] == 0);
  return j["id"];
}

json op(const std::string& name, json params, std::optional<std::uint64_t> rev) {
  json j{{"op", name}, {"params", std::move(params)}};
  if (rev) j["expected_revision"] = *rev;
  return j;
}

}  // namespace

TEST_CASE("create and fetch a model") {
  Service s;
  const std::string id = create(s, fx::reference_floor());
  const HttpResponse r = call(s, "GET", "/models/" + id);
  CHECK(r.status == 200);
  CHECK(load_text(r.body) == fx::reference_floor());
  CHECK(r.headers.at("X-Podo-Revision") == "0");
  CHECK(call(s, "GET", "/models/nope").status == 404);
  CHECK(call(s, "POST", "/models", "{").status == 400);
  CHECK(call(s, "GET", "/elsewhere").status == 404);
}

TEST_CASE("ops advance the revision and report affected ids") {
  Service s;
  const Model m = fx::reference_floor();
  const std::string id = create(s, m);
  const json body = op("place_text", {{"lines", {"Новый"}}, {"origin", {100, 100}}, {"leader_target", {0, 0}}}, 0);
  const HttpResponse r = call(s, "POST", "/models/" + id + "/ops", body.dump());
  REQUIRE(r.status == 200);
  const json j = json::parse(r.body);
  CHECK(j["revision"] == 1);
  CHECK(j["affected"] == json::array({m.next_id}));
  CHECK(s.revision(id) == 1u);

  // Revision 0 stays readable.
  const HttpResponse old = call(s, "GET", "/models/" + id, {}, {{"rev", "0"}});
  CHECK(load_text(old.body) == m);
  CHECK(call(s, "GET", "/models/" + id, {}, {{"rev", "7"}}).status == 404);
}

TEST_CASE("stale revisions conflict") {
  Service s;
  const std::string id = create(s, fx::reference_floor());
  const json first = op("delete_entity", {{"id", 17}}, 0);
  REQUIRE(call(s, "POST", "/models/" + id + "/ops", first.dump()).status == 200);
  const HttpResponse r = call(s, "POST", "/models/" + id + "/ops", op("delete_entity", {{"id", 16}}, 0).dump());
  CHECK(r.status == 409);
  CHECK(json::parse(r.body)["current_revision"] == 1);
  CHECK(call(s, "POST", "/models/" + id + "/ops", op("delete_entity", {{"id", 16}}, std::nullopt).dump()).status ==
        400);
}

TEST_CASE("kernel errors map to status codes") {
  Service s;
  const Model c = fx::reference_ceiling();
  const std::string id = create(s, c);
  const auto g = c.column_groups.at(0).id.value;
  const json beam = op("place_beam",
                       {{"mark", "ИБ 8-21"},
                        {"end_a", {{"group", g}, {"ix", 1}, {"iy", 1}}},
                        {"end_b", {{"group", g}, {"ix", 3}, {"iy", 1}}}},
                       0);
  const HttpResponse r = call(s, "POST", "/models/" + id + "/ops", beam.dump());
  CHECK(r.status == 422);
  CHECK(json::parse(r.body)["error"] == "SpanMismatch");

  json good = beam;
  good["params"]["mark"] = "2БСО 12-6 АШв";
  CHECK(call(s, "POST", "/models/" + id + "/ops", good.dump()).status == 200);

  const HttpResponse unknown = call(s, "POST", "/models/" + id + "/ops", op("delete_entity", {{"id", 999}}, 1).dump());
  CHECK(unknown.status == 404);
  CHECK(json::parse(unknown.body)["error"] == "UnknownEntity");
  const HttpResponse bad = call(s, "POST", "/models/" + id + "/ops", op("fly", json::object(), 1).dump());
  CHECK(bad.status == 400);
  CHECK(json::parse(bad.body)["error"] == "SchemaError");
  CHECK(s.revision(id) == 1u);
}

TEST_CASE("display at a revision") {
  Service s;
  const Model m = fx::reference_floor();
  const std::string id = create(s, m);
  const HttpResponse r = call(s, "GET", "/models/" + id + "/display");
  REQUIRE(r.status == 200);
  CHECK(display_from_json(json::parse(r.body)) == generate_plan_display(m));
  call(s, "POST", "/models/" + id + "/ops", op("delete_entity", {{"id", 17}}, 0).dump());
  CHECK(call(s, "GET", "/models/" + id + "/display", {}, {{"rev", "0"}}).body == r.body);
  CHECK(call(s, "GET", "/models/" + id + "/display").body != r.body);
}

TEST_CASE("snap preview matches the kernel and never mutates") {
  Service s;
  const Model m = fx::reference_floor();
  const std::string id = create(s, m);
  const std::string before = call(s, "GET", "/models/" + id).body;
  const json proto{{"gost_type", 5}, {"width_mm", 1460}, {"height_mm", 1460}};
  const json body{{"op", "snap_opening_preview"}, {"params", {{"cursor", {3000, 6100}}, {"proto", proto}}}};
  const HttpResponse r = call(s, "POST", "/models/" + id + "/preview", body.dump());
  REQUIRE(r.status == 200);
  const json j = json::parse(r.body);
  OpeningProto p;
  p.gost_type = 5;
  p.width_mm = 1460;
  p.height_mm = 1460;
  const auto expected = snap_opening_preview(m, {3000, 6100}, p);
  if (expected) {
    CHECK(j["status"] == "ok");
    CHECK(j["placement"]["partition"] == expected->partition.value);
    CHECK(j["placement"]["offset_mm"] == expected->offset_mm);
  } else {
    CHECK(j["status"] == "NoTarget");
  }
  const json far{{"op", "snap_opening_preview"}, {"params", {{"cursor", {-50000, -50000}}, {"proto", proto}}}};
  const json none = json::parse(call(s, "POST", "/models/" + id + "/preview", far.dump()).body);
  CHECK(none["status"] == "NoTarget");
  CHECK(none["placement"].is_null());

  const json ghost = op("place_text", {{"lines", {"x"}}, {"origin", {0, 0}}, {"leader_target", {10, 10}}}, 0);
  const json g = json::parse(call(s, "POST", "/models/" + id + "/preview", ghost.dump()).body);
  CHECK_FALSE(g["ghost"].empty());
  CHECK(call(s, "GET", "/models/" + id).body == before);
  CHECK(s.revision(id) == 0u);
}

TEST_CASE("catalog route") {
  Service s;
  const HttpResponse r = call(s, "GET", "/catalog/footing");
  REQUIRE(r.status == 200);
  const json j = json::parse(r.body);
  CHECK(j.size() == Catalog::builtin().records(MarkFamily::Footing).size());
  CHECK(j[0]["family"] == "Footing");
  CHECK(j[0]["dims"] == json::array({1200, 1200, 750}));
  CHECK(call(s, "GET", "/catalog/Beam").status == 200);
  CHECK(call(s, "GET", "/catalog/chairs").status == 404);
}

TEST_CASE("capsule directory persistence") {
  const auto dir = std::filesystem::temp_directory_path() / ("podo_service_test_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  Service s(Catalog::builtin(), dir);
  const std::string id = create(s, fx::reference_floor());
  CHECK(load_model_file(dir / (id + ".podo")) == fx::reference_floor());
  call(s, "POST", "/models/" + id + "/ops", op("delete_entity", {{"id", 17}}, 0).dump());
  CHECK(load_model_file(dir / (id + ".podo")).texts.size() == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("concurrent ops on one model serialize") {
  Service s;
  const std::string id = create(s, fx::reference_floor());
  std::atomic<int> ok{0}, conflict{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 20; ++i) {
        const auto rev = *s.revision(id);
        const json body = op("place_text", {{"lines", {"t"}}, {"origin", {0, 0}}, {"leader_target", {1, 1}}}, rev);
        const int status = call(s, "POST", "/models/" + id + "/ops", body.dump()).status;
        if (status == 200) ++ok;
        if (status == 409) ++conflict;
      }
    });
  }
  for (auto& t : threads) t.join();
  CHECK(ok + conflict == 160);
  CHECK(s.revision(id) == static_cast<std::uint64_t>(ok.load()));
  const Model last = load_text(call(s, "GET", "/models/" + id).body);
  CHECK(last.texts.size() == fx::reference_floor().texts.size() + static_cast<std::size_t>(ok.load()));
}

TEST_CASE("live HTTP round trip") {
  Service s;
  httplib::Server server;
  s.mount(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto created = client.Post("/models", save_text(fx::reference_floor()), "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  const std::string id = json::parse(created->body)["id"];
  auto display = client.Get("/models/" + id + "/display?rev=0");
  REQUIRE(display);
  CHECK(display->status == 200);
  CHECK(display->get_header_value("Access-Control-Allow-Origin") == "*");
  CHECK(display_from_json(json::parse(display->body)) == generate_plan_display(fx::reference_floor()));
  auto options = client.Options("/models");
  REQUIRE(options);
  CHECK(options->status == 204);

  server.stop();
  worker.join();
}
