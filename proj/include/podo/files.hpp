#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "podo/model.hpp"
#include "podo/section.hpp"

namespace podo {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

/// A capsule when the file starts with the capsule magic, a text document
/// otherwise. Validates.
Model load_model_file(const std::filesystem::path& path);

/// ".podo" writes a capsule, anything else a text document.
void save_model_file(const std::filesystem::path& path, const Model& model);

/// Loads every plan a section spec names. Plan references are paths
/// relative to `base_dir`.
std::map<std::string, Model> load_section_plans(const SectionSpec& spec, const std::filesystem::path& base_dir);

}  // namespace podo
