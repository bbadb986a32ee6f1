#include "podo/axes.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace podo {

namespace {

// Letters past the end of the alphabet repeat: А..Я, then АА..ЯЯ, ...
std::string letter_label(const std::vector<std::string>& alphabet, int index) {
  if (alphabet.empty()) throw Error(ErrorCode::InvalidValue, "letter alphabet is empty");
  const int n = static_cast<int>(alphabet.size());
  const int repeat = index / n + 1;
  std::string out;
  for (int i = 0; i < repeat; ++i) out += alphabet[static_cast<std::size_t>(index % n)];
  return out;
}

int parse_label_start(const std::string& start, bool lettered, const std::vector<std::string>& alphabet,
                      EntityId group) {
  if (lettered) {
    const int limit = static_cast<int>(alphabet.size()) * 4;
    for (int i = 0; i < limit; ++i) {
      if (letter_label(alphabet, i) == start) return i;
    }
    throw Error(ErrorCode::InvalidValue, "label start '" + start + "' is not in the letter series", group);
  }
  int value = 0;
  const auto [ptr, ec] = std::from_chars(start.data(), start.data() + start.size(), value);
  if (ec != std::errc{} || ptr != start.data() + start.size() || value < 0) {
    throw Error(ErrorCode::InvalidValue, "label start '" + start + "' is not a number", group);
  }
  return value;
}

struct Pending {
  ResolvedAxis axis;
  std::size_t group_pos = 0;
  int base_main = 0;  // Additional only
};

}  // namespace

std::vector<ResolvedAxis> resolve_axes(const Model& model, Orientation orientation) {
  const auto& groups = model.axis_groups(orientation);
  const bool lettered = (orientation == Orientation::H) == model.settings.horiz_axes_lettered;
  const auto& alphabet = model.settings.letter_alphabet;

  std::vector<Pending> pending;
  std::vector<const Pending*> mains;
  int seq = lettered ? 0 : 1;
  Mm cursor = 0;
  int main_ordinal = 0;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& g = groups[gi];
    const auto* main = std::get_if<MainAxes>(&g.kind);
    if (!main) continue;
    if (!g.label_start.empty()) seq = parse_label_start(g.label_start, lettered, alphabet, g.id);
    for (int j = 0; j < g.count; ++j) {
      Pending p;
      p.axis.coord = cursor;
      p.axis.label = lettered ? letter_label(alphabet, seq) : std::to_string(seq);
      p.axis.main = true;
      p.axis.group = g.id;
      p.axis.ordinal = j + 1;
      p.axis.main_ordinal = ++main_ordinal;
      p.group_pos = gi;
      pending.push_back(std::move(p));
      ++seq;
      cursor += main->step_mm;
    }
  }
  const std::vector<Pending> main_axes = pending;

  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& g = groups[gi];
    const auto* extra = std::get_if<AdditionalAxes>(&g.kind);
    if (!extra) continue;
    if (extra->base_axis < 1 || extra->base_axis > static_cast<int>(main_axes.size())) {
      throw Error(ErrorCode::DanglingReference,
                  "additional axis group " + std::to_string(g.id.value) + " refers to missing main axis " +
                      std::to_string(extra->base_axis),
                  g.id);
    }
    const auto& base = main_axes[static_cast<std::size_t>(extra->base_axis - 1)].axis;
    for (int k = 1; k <= g.count; ++k) {
      Pending p;
      p.axis.coord = base.coord + extra->offset_mm * k;
      p.axis.main = false;
      p.axis.group = g.id;
      p.axis.ordinal = k;
      p.group_pos = gi;
      p.base_main = extra->base_axis;
      pending.push_back(std::move(p));
    }
  }

  std::stable_sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    if (a.axis.coord != b.axis.coord) return a.axis.coord < b.axis.coord;
    if (a.axis.main != b.axis.main) return a.axis.main;
    if (a.group_pos != b.group_pos) return a.group_pos < b.group_pos;
    return a.axis.ordinal < b.axis.ordinal;
  });

  std::map<int, int> per_base;
  std::vector<ResolvedAxis> out;
  out.reserve(pending.size());
  for (auto& p : pending) {
    if (!p.axis.main) {
      const int k = ++per_base[p.base_main];
      p.axis.label = main_axes[static_cast<std::size_t>(p.base_main - 1)].axis.label + "/" + std::to_string(k);
    }
    p.axis.index = static_cast<int>(out.size()) + 1;
    out.push_back(std::move(p.axis));
  }
  return out;
}

bool AxisGrid::has(Orientation o, int index) const {
  return index >= 1 && index <= static_cast<int>(axes(o).size());
}

Mm AxisGrid::coord(Orientation o, int index) const {
  if (!has(o, index)) {
    throw Error(ErrorCode::UnknownAxis, std::string(o == Orientation::H ? "horizontal" : "vertical") +
                                            " axis " + std::to_string(index) + " does not exist");
  }
  return axes(o)[static_cast<std::size_t>(index - 1)].coord;
}

Point AxisGrid::node(int h_axis, int v_axis) const {
  return {coord(Orientation::V, v_axis), coord(Orientation::H, h_axis)};
}

std::vector<Mm> AxisGrid::main_coords(Orientation o) const {
  std::vector<Mm> out;
  for (const auto& a : axes(o)) {
    if (a.main) out.push_back(a.coord);
  }
  return out;
}

AxisGrid resolve_grid(const Model& model) {
  return {resolve_axes(model, Orientation::H), resolve_axes(model, Orientation::V)};
}

Point node_position(const Model& model, int h_axis, int v_axis) {
  return resolve_grid(model).node(h_axis, v_axis);
}

}  // namespace podo
