#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace porism {

enum class ErrorCode {
  DegenerateTriangle,
  DegenerateConic,
  NotCentral,
  PointAtInfinity,
  UnsupportedCenter,
  IsoscelesDegeneracy,
  ParallelTangents,
  PerspectorAtInfinity,
  NotAHyperbola,
  InvalidRatio,
  AxisAtInfinity,
  CircularBilliard,
  UnknownQuantity,
  UnknownFigure,
  InvalidConfig,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::DegenerateConic: return "DegenerateConic";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::PointAtInfinity: return "PointAtInfinity";
    case ErrorCode::UnsupportedCenter: return "UnsupportedCenter";
    case ErrorCode::IsoscelesDegeneracy: return "IsoscelesDegeneracy";
    case ErrorCode::ParallelTangents: return "ParallelTangents";
    case ErrorCode::PerspectorAtInfinity: return "PerspectorAtInfinity";
    case ErrorCode::NotAHyperbola: return "NotAHyperbola";
    case ErrorCode::InvalidRatio: return "InvalidRatio";
    case ErrorCode::AxisAtInfinity: return "AxisAtInfinity";
    case ErrorCode::CircularBilliard: return "CircularBilliard";
    case ErrorCode::UnknownQuantity: return "UnknownQuantity";
    case ErrorCode::UnknownFigure: return "UnknownFigure";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

/// Every failure raised by the library. The code is stable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace porism
