#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace podo {

struct EntityId {
  std::uint32_t value = 0;

  explicit operator bool() const { return value != 0; }
  friend auto operator<=>(const EntityId&, const EntityId&) = default;
};

enum class ErrorCode {
  InvalidValue,
  UnknownAxis,
  DanglingReference,
  PlanKindLocked,
  PlanKindForbidden,
  CountOutOfRange,
  LastAxisGroup,
  UnknownMark,
  NonRectangularRun,
  NonAxisAlignedSegment,
  EmptyPolyline,
  OutOfPartition,
  OverlapsOpening,
  UnknownEntity,
  SpanMismatch,
  NotCollinear,
  UnknownColumn,
  UnknownFooting,
  UnbearableDirection,
  TooFewAxes,
  WrongKind,
  DanglingPlanRef,
  RotateOnPolyline,
  SchemaError,
  IntegrityError,
  BadMagic,
  VersionUnsupported,
  CorruptBody,
  ParseError,
};

// Stable name of a code; this is what the CLI and HTTP layers print.
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, EntityId entity = {})
      : std::runtime_error(message), code_(code), entity_(entity) {}

  ErrorCode code() const { return code_; }
  EntityId entity() const { return entity_; }

 private:
  ErrorCode code_;
  EntityId entity_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(ErrorCode::ParseError, message + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace podo
