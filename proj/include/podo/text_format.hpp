#pragma once

#include <string>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "podo/model.hpp"
#include "podo/section.hpp"

namespace podo {

// Text documents (.podo.json): canonical JSON, UTF-8, keys sorted, two-space
// indent, trailing newline. Loading is strict: unknown keys and wrong types
// fail with a SchemaError naming the JSON path.

inline constexpr int kTextFormatVersion = 1;

class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : Error(ErrorCode::SchemaError, path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

nlohmann::json model_to_json(const Model& model);

/// Schema checks only; the result may still violate model invariants.
Model model_from_json(const nlohmann::json& doc, const std::string& path = "");

std::string save_text(const Model& model);

/// Parses and validates. Broken references raise IntegrityError carrying the
/// offending entity id; other invariant violations keep their own code.
Model load_text(std::string_view text);

/// Parses without the invariant check, for tools that report every issue.
Model parse_text(std::string_view text);

nlohmann::json section_to_json(const SectionSpec& spec);
SectionSpec section_from_json(const nlohmann::json& doc, const std::string& path = "");

/// A section document: {"section": {...}}.
std::string save_section_text(const SectionSpec& spec);
SectionSpec load_section_text(std::string_view text);

// Pieces shared with the service layer.
nlohmann::json anchor_to_json(const Anchor& a);
Anchor anchor_from_json(const nlohmann::json& j, const std::string& path);
nlohmann::json point_to_json(Point p);
Point point_from_json(const nlohmann::json& j, const std::string& path);
nlohmann::json axis_group_to_json(const AxisGroup& g);
AxisGroup axis_group_from_json(const nlohmann::json& j, Orientation o, const std::string& path);
nlohmann::json settings_to_json(const ModelSettings& s);
ModelSettings settings_from_json(const nlohmann::json& j, const std::string& path);
nlohmann::json section_extra_to_json(const OpeningSectionExtra& e);
OpeningSectionExtra section_extra_from_json(const nlohmann::json& j, const std::string& path);

/// Strict object reader: every key must be consumed before `finish()`.
class JsonReader {
 public:
  JsonReader(const nlohmann::json& j, std::string path);

  const std::string& path() const { return path_; }
  std::string child(const std::string& key) const { return path_ + "/" + key; }
  bool has(const std::string& key) const;

  const nlohmann::json& raw(const std::string& key);
  std::int64_t integer(const std::string& key);
  std::int64_t integer_or(const std::string& key, std::int64_t fallback);
  bool boolean_or(const std::string& key, bool fallback);
  std::string string(const std::string& key);
  std::optional<std::string> optional_string(const std::string& key);
  std::optional<std::int64_t> optional_integer(const std::string& key);
  std::uint32_t id(const std::string& key);
  const nlohmann::json& array(const std::string& key);
  const nlohmann::json* optional_array(const std::string& key);
  const nlohmann::json& object(const std::string& key);

  void finish() const;

 private:
  const nlohmann::json& j_;
  std::string path_;
  std::vector<std::string> used_;
};

}  // namespace podo
