#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "podo/catalog.hpp"
#include "podo/model.hpp"

namespace httplib {
class Server;
}

namespace podo {

struct HttpRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
  std::map<std::string, std::string> headers;
};

// Model store behind the HTTP routes. Every committed op appends a
// revision; old revisions stay readable. Writes to one model are serialized,
// reads see committed snapshots.
class Service {
 public:
  explicit Service(const Catalog& catalog = Catalog::builtin(),
                   std::optional<std::filesystem::path> capsule_dir = std::nullopt);

  HttpResponse handle(const HttpRequest& request);

  /// Routes every endpoint of `handle` through a live server.
  void mount(httplib::Server& server);

  std::optional<std::uint64_t> revision(const std::string& model_id) const;

 private:
  struct Entry {
    mutable std::mutex write;
    mutable std::shared_mutex read;
    std::vector<Model> revisions;
  };

  HttpResponse create_model(const HttpRequest& req);
  HttpResponse get_model(const std::string& id, const HttpRequest& req);
  HttpResponse post_op(const std::string& id, const HttpRequest& req);
  HttpResponse get_display(const std::string& id, const HttpRequest& req);
  HttpResponse post_preview(const std::string& id, const HttpRequest& req);
  HttpResponse get_catalog(const std::string& family);

  std::shared_ptr<Entry> find(const std::string& id) const;
  std::optional<Model> snapshot(const Entry& e, const HttpRequest& req, std::uint64_t* rev, HttpResponse* error) const;
  void persist(const std::string& id, const Model& model) const;

  const Catalog& catalog_;
  std::optional<std::filesystem::path> capsule_dir_;
  mutable std::shared_mutex store_lock_;
  std::map<std::string, std::shared_ptr<Entry>> store_;
  std::uint64_t next_model_ = 1;
};

/// Blocks serving on host:port until the process is stopped.
int serve(const std::string& host, int port, const std::optional<std::filesystem::path>& capsule_dir = std::nullopt);

}  // namespace podo
