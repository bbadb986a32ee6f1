#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "podo/display.hpp"
#include "podo/model.hpp"

namespace podo {

// Binary capsule (.podo): "PODO", u16 version, u32 body length, u32 CRC32 of
// the body, then the raw-deflated record stream. All integers little-endian.

inline constexpr std::uint16_t kCapsuleVersion = 1;
inline constexpr std::size_t kCapsuleHeaderSize = 14;

std::vector<std::uint8_t> encode_capsule(const Model& model);

struct DecodedCapsule {
  Model model;
  DisplayList stub;
};

/// Throws BadMagic, VersionUnsupported or CorruptBody.
DecodedCapsule decode_capsule(std::string_view bytes);
DecodedCapsule decode_capsule(const std::vector<std::uint8_t>& bytes);

/// The visible part of an embedded module: the first axis of each
/// orientation with its label, plus the first span dimension of each
/// orientation when there is one.
DisplayList capsule_stub(const Model& model);

}  // namespace podo
