#pragma once

#include <stdexcept>
#include <string>

namespace ultralip {

enum class Err {
  AsymmetricMatrix,
  NegativeDistance,
  ZeroOffDiagonal,
  TriangleViolation,
  NotUltrametric,
  QOutOfRange,
  LevelOutOfRange,
  IndexOutOfRange,
  SamePoint,
  SinglePoint,
  SpaceMismatch,
  ZeroFunction,
  BaseValueNonzero,
  UnknownBuiltin,
  OracleViolation,
  SupportOutsideTruncation,
  WitnessConditionsFail,
  NotIdempotent,
  DegenerateBasis,
  FlatnessViolation,
  NotUnitNorm,
  UnknownSuite,
  ParseError,
  BadArgument,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what);
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] void fail(Err code, const std::string& what);

}  // namespace ultralip
