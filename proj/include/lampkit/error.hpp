#pragma once

#include <stdexcept>
#include <string>

namespace lampkit {

enum class ErrorCode {
  NotALattice,
  NoBounds,
  CycleDetected,
  NotRectangular,
  SingletonChain,
  CellNotDistributive,
  RankNonPositive,
  BadCellAddress,
  NotACover,
  BetaViolation,
  CovOfTop,
  CircOfBoundaryLamp,
  DegeneratePolygon,
  NotAntisymmetric,
  ParseError,
  UnknownLamp,
  BoundTooLarge,
  InternalError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NoBounds: return "NoBounds";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotRectangular: return "NotRectangular";
    case ErrorCode::SingletonChain: return "SingletonChain";
    case ErrorCode::CellNotDistributive: return "CellNotDistributive";
    case ErrorCode::RankNonPositive: return "RankNonPositive";
    case ErrorCode::BadCellAddress: return "BadCellAddress";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::BetaViolation: return "BetaViolation";
    case ErrorCode::CovOfTop: return "CovOfTop";
    case ErrorCode::CircOfBoundaryLamp: return "CircOfBoundaryLamp";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownLamp: return "UnknownLamp";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace lampkit
