#pragma once

#include <string>

#include "podo/display.hpp"

namespace podo {

// Both emitters work in paper millimeters: world mm divided by `scale`
// (100 for 1:100). Output depends only on the arguments.

inline constexpr double kThinStrokeMm = 0.2;
inline constexpr double kThickStrokeMm = 0.6;

/// SVG 1.1, Y up in world becomes Y down in the document. A non-positive
/// scale is treated as 1.
std::string emit_svg(const DisplayList& list, int scale = 100);

struct DxfOptions {
  // Replace non-ASCII text with a Latin transliteration instead of \U+XXXX
  // escapes, for readers that only take 7-bit text.
  bool transliterate = false;
};

/// ASCII DXF R12 with LINE, CIRCLE, ARC and TEXT only. Dimensions, bubbles
/// and leaders are exploded. Layers THIN and THICK carry the weight.
std::string emit_dxf(const DisplayList& list, int scale = 100, const DxfOptions& options = {});

/// 7-bit text for DXF: Cyrillic to Latin, a few signs to their DXF control
/// codes or ASCII, anything else to "?".
std::string transliterate_ascii(const std::string& utf8);

}  // namespace podo
