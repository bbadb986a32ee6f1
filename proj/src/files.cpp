#include "podo/files.hpp"

#include <fstream>
#include <sstream>

#include "podo/capsule.hpp"
#include "podo/text_format.hpp"

namespace podo {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

Model load_model_file(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  if (bytes.rfind("PODO", 0) == 0) return decode_capsule(std::string_view(bytes)).model;
  return load_text(bytes);
}

void save_model_file(const std::filesystem::path& path, const Model& model) {
  if (path.extension() == ".podo") {
    const auto bytes = encode_capsule(model);
    write_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  } else {
    write_file(path, save_text(model));
  }
}

std::map<std::string, Model> load_section_plans(const SectionSpec& spec, const std::filesystem::path& base_dir) {
  std::map<std::string, Model> plans;
  auto need = [&](const std::string& ref) {
    if (plans.count(ref)) return;
    const std::filesystem::path p = base_dir / ref;
    if (!std::filesystem::exists(p)) return;  // reported as DanglingPlanRef by the section check
    plans.emplace(ref, load_model_file(p));
  };
  for (const auto& f : spec.floors) {
    need(f.plan);
    if (f.ceiling_plan) need(*f.ceiling_plan);
  }
  if (spec.foundation) need(spec.foundation->plan);
  if (spec.roof) need(spec.roof->plan);
  return plans;
}

}  // namespace podo
