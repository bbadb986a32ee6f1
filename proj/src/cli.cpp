#include "podo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>

#include "podo/axes.hpp"
#include "podo/capsule.hpp"
#include "podo/catalog.hpp"
#include "podo/derive.hpp"
#include "podo/drafting.hpp"
#include "podo/emit.hpp"
#include "podo/files.hpp"
#include "podo/section.hpp"
#include "podo/service.hpp"
#include "podo/text_format.hpp"
#include "podo/validate.hpp"

namespace podo::cli {

namespace {

namespace fs = std::filesystem;

// Usage problems discovered after argument parsing (missing input files,
// bad flag values).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_input(const std::string& path) {
  if (!fs::is_regular_file(path)) throw UsageError("no such file: " + path);
}

std::string describe(const Error& e) {
  std::string s(error_name(e.code()));
  if (e.entity().value != 0) s += " (entity " + std::to_string(e.entity().value) + ")";
  return s + ": " + e.what();
}

int parse_scale(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || text.substr(0, colon) != "1") throw UsageError("scale must look like 1:100");
  const std::string n = text.substr(colon + 1);
  if (n.empty() || n.size() > 6 || !std::all_of(n.begin(), n.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw UsageError("scale must look like 1:100");
  }
  const int v = std::stoi(n);
  if (v <= 0) throw UsageError("scale denominator must be positive");
  return v;
}

std::vector<Side> sides_for(const Model& model, const std::string& dims) {
  const auto defaults = effective_sides(model, {});
  Side h_side = Side::Left;
  Side v_side = defaults.size() > 1 ? defaults[1] : Side::Bottom;
  if (dims == "left") h_side = Side::Left;
  else if (dims == "right") h_side = Side::Right;
  else if (dims == "top") v_side = Side::Top;
  else if (dims == "bottom") v_side = Side::Bottom;
  return {h_side, v_side};
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  require_input(path);
  const std::string bytes = read_file(path);
  Model model;
  if (bytes.rfind("PODO", 0) == 0) {
    model = decode_capsule(std::string_view(bytes)).model;
  } else {
    model = parse_text(bytes);
  }
  const auto issues = check_model(model);
  for (const auto& i : issues) {
    out << "error " << error_name(i.code);
    if (i.entity.value != 0) out << " entity " << i.entity.value;
    out << ": " << i.message << "\n";
  }
  if (!issues.empty()) return kExitInvalid;
  out << "ok: " << plan_kind_name(model.kind) << " plan, " << model.entity_count() << " entities\n";
  return kExitOk;
}

struct RenderArgs {
  std::string model;
  std::string svg;
  std::string dxf;
  std::string scale = "1:100";
  std::string dims = "both";
  bool overall = false;
  bool ascii = false;
};

int cmd_render(const RenderArgs& a, std::ostream& out) {
  require_input(a.model);
  if (a.svg.empty() == a.dxf.empty()) throw UsageError("give exactly one of --svg or --dxf");
  const int scale = parse_scale(a.scale);
  const Model model = load_model_file(a.model);
  PlanOptions opts;
  opts.sides = sides_for(model, a.dims);
  opts.overall = a.overall;
  const DisplayList list = generate_plan_display(model, opts);
  if (!a.svg.empty()) {
    write_file(a.svg, emit_svg(list, scale));
    out << "wrote " << a.svg << " (" << list.items.size() << " primitives)\n";
  } else {
    write_file(a.dxf, emit_dxf(list, scale, DxfOptions{a.ascii}));
    out << "wrote " << a.dxf << " (" << list.items.size() << " primitives)\n";
  }
  return kExitOk;
}

int cmd_derive(const std::string& what, const std::string& path, const std::string& output, bool bearing_only,
               std::ostream& out) {
  require_input(path);
  const Model floor = load_model_file(path);
  Model derived;
  if (what == "foundation") {
    FoundationDeriveOptions o;
    o.bearing_only = bearing_only;
    derived = derive_foundation_plan(floor, o);
  } else {
    derived = derive_ceiling_plan(floor);
  }
  save_model_file(output, derived);
  out << "wrote " << output << ": " << plan_kind_name(derived.kind) << " plan, " << derived.entity_count()
      << " entities\n";
  return kExitOk;
}

int cmd_section(const std::string& path, const std::string& output, bool ascii, std::ostream& out) {
  require_input(path);
  const SectionSpec spec = load_section_text(read_file(path));
  const auto plans = load_section_plans(spec, fs::path(path).parent_path());
  const SectionResult result = generate_section(spec, plans);
  if (fs::path(output).extension() == ".dxf") {
    write_file(output, emit_dxf(result.display, spec.scale, DxfOptions{ascii}));
  } else {
    write_file(output, emit_svg(result.display, spec.scale));
  }
  out << "wrote " << output << ": " << result.cuts.size() << " cuts, levels";
  for (const auto& l : result.level_marks) out << ' ' << l;
  out << "\n";
  for (const auto& w : result.warnings) out << "warning: " << w << "\n";
  return kExitOk;
}

int cmd_catalog_parse(const std::string& text, std::ostream& out) {
  const auto parsed = parse_mark_string(text);
  if (const auto* u = std::get_if<Unmarked>(&parsed)) {
    out << "unmarked: " << u->text << "\n";
    return kExitOk;
  }
  const auto& m = std::get<MarkFragment>(parsed);
  out << "name: " << m.name << "\n";
  out << "dims:";
  for (Mm d : m.dims) out << ' ' << d;
  out << "\n";
  if (m.metric) out << "metric: " << m.metric->to_string() << "\n";
  if (m.tag) out << "tag: " << *m.tag << "\n";
  for (MarkFamily f : all_families()) {
    if (Catalog::builtin().lookup(f, m.name)) out << "family: " << family_name(f) << "\n";
  }
  return kExitOk;
}

int cmd_catalog_list(const std::string& family, std::ostream& out) {
  for (MarkFamily f : all_families()) {
    if (lower(std::string(family_name(f))) == lower(family)) {
      for (const auto& r : Catalog::builtin().records(f)) out << render_mark_string(r) << "\n";
      return kExitOk;
    }
  }
  std::string known;
  for (MarkFamily f : all_families()) known += " " + std::string(family_name(f));
  throw UsageError("unknown family '" + family + "'; known:" + known);
}

std::string stub_summary(const DisplayList& stub) {
  std::vector<std::string> labels, dims;
  for (const auto& p : stub.items) {
    if (const auto* b = std::get_if<AxisBubble>(&p.shape)) labels.push_back(b->label);
    if (const auto* d = std::get_if<DimLinear>(&p.shape)) dims.push_back(d->text);
  }
  std::string s = "axes";
  for (const auto& l : labels) s += " " + l;
  if (labels.empty()) s += " -";
  s += ", dims";
  for (const auto& d : dims) s += " " + d;
  if (dims.empty()) s += " -";
  return s;
}

int cmd_protos(const std::string& dir, std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(dir)) throw UsageError("no such directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".podo") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  int rc = kExitOk;
  for (const auto& f : files) {
    const std::string bytes = read_file(f);
    try {
      const auto d = decode_capsule(std::string_view(bytes));
      out << f.filename().string() << "\t" << plan_kind_name(d.model.kind) << "\t" << bytes.size() << " B\t"
          << d.model.entity_count() << " entities\t" << stub_summary(d.stub) << "\n";
    } catch (const Error& e) {
      err << f.filename().string() << ": " << describe(e) << "\n";
      rc = kExitInvalid;
    }
  }
  if (files.empty()) out << "no capsules in " << dir << "\n";
  return rc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parametric structural base plans", "podo"};
  app.require_subcommand(1);
  int result = kExitOk;
  std::function<int()> action;

  std::string model_path;
  auto* validate = app.add_subcommand("validate", "Check a model document or capsule");
  validate->add_option("model", model_path, "Model file")->required();
  validate->callback([&] { action = [&] { return cmd_validate(model_path, out); }; });

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "Draw a plan to SVG or DXF");
  render->add_option("model", render_args.model, "Model file")->required();
  render->add_option("--svg", render_args.svg, "SVG output path");
  render->add_option("--dxf", render_args.dxf, "DXF output path");
  render->add_option("--scale", render_args.scale, "Drawing scale, 1:N")->capture_default_str();
  render->add_option("--dims", render_args.dims, "Side for axis labels and span dimensions")
      ->check(CLI::IsMember({"both", "left", "right", "top", "bottom"}))
      ->capture_default_str();
  render->add_flag("--overall", render_args.overall, "Add overall dimensions");
  render->add_flag("--ascii", render_args.ascii, "DXF: transliterate text to 7-bit ASCII");
  render->callback([&] { action = [&] { return cmd_render(render_args, out); }; });

  std::string derive_what, derive_in, derive_out;
  bool bearing_only = false;
  auto* derive = app.add_subcommand("derive", "Derive a foundation or ceiling plan from a floor plan");
  derive->add_option("kind", derive_what, "foundation or ceiling")
      ->required()
      ->check(CLI::IsMember({"foundation", "ceiling"}));
  derive->add_option("model", derive_in, "Floor plan")->required();
  derive->add_option("-o,--output", derive_out, "Output model (.podo.json or .podo)")->required();
  derive->add_flag("--bearing-only", bearing_only, "Strips under bearing partitions only");
  derive->callback([&] { action = [&] { return cmd_derive(derive_what, derive_in, derive_out, bearing_only, out); }; });

  std::string section_in, section_out;
  bool section_ascii = false;
  auto* section = app.add_subcommand("section", "Generate a building section");
  section->add_option("spec", section_in, "Section document")->required();
  section->add_option("-o,--output", section_out, "Output drawing (.svg or .dxf)")->required();
  section->add_flag("--ascii", section_ascii, "DXF: transliterate text to 7-bit ASCII");
  section->callback([&] { action = [&] { return cmd_section(section_in, section_out, section_ascii, out); }; });

  auto* catalog = app.add_subcommand("catalog", "Query the mark catalog");
  catalog->require_subcommand(1);
  std::string mark_text, family;
  auto* parse = catalog->add_subcommand("parse", "Parse one mark string");
  parse->add_option("mark", mark_text, "Mark string")->required();
  parse->callback([&] { action = [&] { return cmd_catalog_parse(mark_text, out); }; });
  auto* list = catalog->add_subcommand("list", "List the marks of a family");
  list->add_option("family", family, "Column, Opening, Lintel, Transom, Beam, Slab, Footing, FoundationBeam")
      ->required();
  list->callback([&] { action = [&] { return cmd_catalog_list(family, out); }; });

  std::string protos_dir;
  auto* protos = app.add_subcommand("protos", "List the capsules of a prototype library");
  protos->add_option("dir", protos_dir, "Directory with .podo files")->required();
  protos->callback([&] { action = [&] { return cmd_protos(protos_dir, out, err); }; });

  std::string pack_in, pack_out;
  auto* pack = app.add_subcommand("pack", "Convert a model between text and capsule form");
  pack->add_option("model", pack_in, "Input model")->required();
  pack->add_option("-o,--output", pack_out, "Output (.podo or .podo.json)")->required();
  pack->callback([&] {
    action = [&] {
      require_input(pack_in);
      save_model_file(pack_out, load_model_file(pack_in));
      out << "wrote " << pack_out << " (" << fs::file_size(pack_out) << " B)\n";
      return kExitOk;
    };
  });

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string store;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--host", host, "Listen address")->capture_default_str();
  serve_cmd->add_option("--port", port, "Listen port")->capture_default_str();
  serve_cmd->add_option("--store", store, "Directory for capsule snapshots");
  serve_cmd->callback([&] {
    action = [&] {
      out << "listening on " << host << ":" << port << "\n" << std::flush;
      return serve(host, port, store.empty() ? std::nullopt : std::optional<fs::path>(store));
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'podo --help' for usage\n";
    return kExitUsage;
  }

  try {
    result = action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << describe(e) << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return result;
}

}  // namespace podo::cli
