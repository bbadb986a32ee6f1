#include "podo/error.hpp"

namespace podo {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::UnknownAxis: return "UnknownAxis";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::PlanKindLocked: return "PlanKindLocked";
    case ErrorCode::PlanKindForbidden: return "PlanKindForbidden";
    case ErrorCode::CountOutOfRange: return "CountOutOfRange";
    case ErrorCode::LastAxisGroup: return "LastAxisGroup";
    case ErrorCode::UnknownMark: return "UnknownMark";
    case ErrorCode::NonRectangularRun: return "NonRectangularRun";
    case ErrorCode::NonAxisAlignedSegment: return "NonAxisAlignedSegment";
    case ErrorCode::EmptyPolyline: return "EmptyPolyline";
    case ErrorCode::OutOfPartition: return "OutOfPartition";
    case ErrorCode::OverlapsOpening: return "OverlapsOpening";
    case ErrorCode::UnknownEntity: return "UnknownEntity";
    case ErrorCode::SpanMismatch: return "SpanMismatch";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::UnknownColumn: return "UnknownColumn";
    case ErrorCode::UnknownFooting: return "UnknownFooting";
    case ErrorCode::UnbearableDirection: return "UnbearableDirection";
    case ErrorCode::TooFewAxes: return "TooFewAxes";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::DanglingPlanRef: return "DanglingPlanRef";
    case ErrorCode::RotateOnPolyline: return "RotateOnPolyline";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IntegrityError: return "IntegrityError";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::VersionUnsupported: return "VersionUnsupported";
    case ErrorCode::CorruptBody: return "CorruptBody";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace podo
