#pragma once

#include <stdexcept>
#include <string>

namespace hforge {

enum class ErrorCode {
  InvalidParams,
  ParseError,
  IoFailure,
  ZeroPolynomial,
  LengthMismatch,
  IdenticalCurves,
  EdgeThroughVertex,
  PointOnCurve,
  DegenerateGeometry,
  GeometryConflict,
  MissingEntry,
  ResourceLimit,
  Internal,
};

// All library failures surface as this exception; code() is stable across
// versions, what() is advisory text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams:      return "InvalidParams";
    case ErrorCode::ParseError:         return "ParseError";
    case ErrorCode::IoFailure:          return "IoFailure";
    case ErrorCode::ZeroPolynomial:     return "ZeroPolynomial";
    case ErrorCode::LengthMismatch:     return "LengthMismatch";
    case ErrorCode::IdenticalCurves:    return "IdenticalCurves";
    case ErrorCode::EdgeThroughVertex:  return "EdgeThroughVertex";
    case ErrorCode::PointOnCurve:       return "PointOnCurve";
    case ErrorCode::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorCode::GeometryConflict:   return "GeometryConflict";
    case ErrorCode::MissingEntry:       return "MissingEntry";
    case ErrorCode::ResourceLimit:      return "ResourceLimit";
    case ErrorCode::Internal:           return "Internal";
  }
  return "Unknown";
}

}  // namespace hforge
