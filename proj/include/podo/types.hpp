#pragma once

#include <cstdint>
#include <string_view>

#include "podo/error.hpp"

namespace podo {

// All model lengths are integer millimeters at natural scale.
using Mm = std::int64_t;

struct Point {
  Mm x = 0;
  Mm y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

// H axes run parallel to world X, V axes parallel to world Y.
enum class Orientation { H, V };

enum class PlanKind { Floor, Ceiling, Foundation };

std::string_view plan_kind_name(PlanKind kind);

}  // namespace podo
