#include <pybind11/eval.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "podo/capsule.hpp"
#include "podo/catalog.hpp"
#include "podo/derive.hpp"
#include "podo/display_json.hpp"
#include "podo/drafting.hpp"
#include "podo/emit.hpp"
#include "podo/op_json.hpp"
#include "podo/section.hpp"
#include "podo/text_format.hpp"
#include "podo/validate.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::handle g_error;  // owned by the module; never released

// Kernel errors surface as podosnova.PodoError(code, message, entity).
void translate(std::exception_ptr p) {
  try {
    if (p) std::rethrow_exception(p);
  } catch (const podo::Error& e) {
    py::object err = g_error(std::string(podo::error_name(e.code())), e.what(), e.entity().value);
    PyErr_SetObject(g_error.ptr(), err.ptr());
  }
}

podo::PlanOptions plan_options(bool overall) {
  podo::PlanOptions o;
  o.overall = overall;
  return o;
}

py::bytes to_bytes(const std::vector<std::uint8_t>& v) {
  return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

}  // namespace

PYBIND11_MODULE(_podosnova, m) {
  m.doc() = "Parametric structural base plans";

  py::dict scope;
  scope["__builtins__"] = py::module_::import("builtins");
  scope["__name__"] = "podosnova";
  py::exec(R"(
class PodoError(Exception):
    def __init__(self, code, message, entity=0):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message
        self.entity = entity
)",
           scope);
  g_error = py::object(scope["PodoError"]).release();
  m.attr("PodoError") = g_error;
  py::register_exception_translator(&translate);

  py::class_<podo::Model>(m, "Model")
      .def(py::init<>())
      .def_property_readonly("kind", [](const podo::Model& x) { return std::string(podo::plan_kind_name(x.kind)); })
      .def_property_readonly("entity_count", &podo::Model::entity_count)
      .def_property_readonly("next_id", [](const podo::Model& x) { return x.next_id; })
      .def("to_text", &podo::save_text)
      .def("__eq__", [](const podo::Model& a, const podo::Model& b) { return a == b; })
      .def("__repr__", [](const podo::Model& x) {
        return "<Model " + std::string(podo::plan_kind_name(x.kind)) + " plan, " +
               std::to_string(x.entity_count()) + " entities>";
      });

  m.def("load_text", [](const std::string& text) { return podo::load_text(text); }, py::arg("text"));
  m.def("parse_text", [](const std::string& text) { return podo::parse_text(text); }, py::arg("text"));

  m.def(
      "check",
      [](const podo::Model& model) {
        py::list out;
        for (const auto& i : podo::check_model(model)) {
          out.append(py::make_tuple(std::string(podo::error_name(i.code)), i.entity.value, i.message));
        }
        return out;
      },
      py::arg("model"), "Invariant violations as (code, entity, message) tuples.");

  m.def(
      "apply_op",
      [](const podo::Model& model, const std::string& op) {
        auto out = podo::apply_op(model, json::parse(op));
        std::vector<std::uint32_t> ids;
        for (auto id : out.affected) ids.push_back(id.value);
        return py::make_tuple(std::move(out.model), ids);
      },
      py::arg("model"), py::arg("op_json"));

  m.def(
      "preview_op",
      [](const podo::Model& model, const std::string& op) {
        const auto p = podo::preview_op(model, json::parse(op));
        json body = {{"ghost", podo::display_to_json(p.ghost)}};
        body["placement"] = p.placement ? podo::placement_to_json(*p.placement) : json(nullptr);
        json ids = json::array();
        for (auto id : p.affected) ids.push_back(id.value);
        body["affected"] = ids;
        return body.dump();
      },
      py::arg("model"), py::arg("op_json"));

  m.def(
      "display_json",
      [](const podo::Model& model, bool overall) {
        return podo::display_to_json(podo::generate_plan_display(model, plan_options(overall))).dump();
      },
      py::arg("model"), py::arg("overall") = false);

  m.def(
      "render_svg",
      [](const podo::Model& model, int scale, bool overall) {
        return podo::emit_svg(podo::generate_plan_display(model, plan_options(overall)), scale);
      },
      py::arg("model"), py::arg("scale") = 100, py::arg("overall") = false);

  m.def(
      "render_dxf",
      [](const podo::Model& model, int scale, bool overall, bool transliterate) {
        return podo::emit_dxf(podo::generate_plan_display(model, plan_options(overall)), scale,
                              podo::DxfOptions{transliterate});
      },
      py::arg("model"), py::arg("scale") = 100, py::arg("overall") = false, py::arg("transliterate") = false);

  m.def("encode_capsule", [](const podo::Model& model) { return to_bytes(podo::encode_capsule(model)); });
  m.def("decode_capsule", [](const py::bytes& data) {
    auto d = podo::decode_capsule(std::string_view(data));
    return py::make_tuple(std::move(d.model), podo::display_to_json(d.stub).dump());
  });

  m.def(
      "derive_foundation",
      [](const podo::Model& floor, bool bearing_only) {
        podo::FoundationDeriveOptions o;
        o.bearing_only = bearing_only;
        return podo::derive_foundation_plan(floor, o);
      },
      py::arg("floor"), py::arg("bearing_only") = false);
  m.def("derive_ceiling", &podo::derive_ceiling_plan, py::arg("floor"));

  m.def(
      "parse_mark",
      [](const std::string& text) -> py::dict {
        py::dict out;
        const auto parsed = podo::parse_mark_string(text);
        if (const auto* u = std::get_if<podo::Unmarked>(&parsed)) {
          out["unmarked"] = u->text;
          return out;
        }
        const auto& f = std::get<podo::MarkFragment>(parsed);
        out["name"] = f.name;
        out["dims"] = f.dims;
        out["metric"] = f.metric ? py::object(py::str(f.metric->to_string())) : py::none();
        out["tag"] = f.tag ? py::object(py::str(*f.tag)) : py::none();
        out["rendered"] = podo::render_mark_string(f);
        return out;
      },
      py::arg("text"));

  m.def(
      "catalog_list",
      [](const std::string& family) {
        const auto f = podo::family_from_name(family);
        if (!f) throw py::value_error("unknown family " + family);
        std::vector<std::string> out;
        for (const auto& r : podo::Catalog::builtin().records(*f)) out.push_back(podo::render_mark_string(r));
        return out;
      },
      py::arg("family"));

  m.def(
      "section",
      [](const std::string& spec_text, const std::map<std::string, podo::Model>& plans) {
        const auto spec = podo::load_section_text(spec_text);
        auto result = podo::generate_section(spec, plans);
        return py::make_tuple(podo::emit_svg(result.display, spec.scale), result.level_marks, result.warnings,
                              result.cuts.size());
      },
      py::arg("spec_text"), py::arg("plans"));

  m.def("format_elevation", &podo::format_elevation, py::arg("level_mm"));
}
