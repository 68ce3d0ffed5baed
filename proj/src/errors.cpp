#include "ultralip/errors.hpp"

namespace ultralip {

const char* err_name(Err e) {
  switch (e) {
    case Err::AsymmetricMatrix: return "AsymmetricMatrix";
    case Err::NegativeDistance: return "NegativeDistance";
    case Err::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case Err::TriangleViolation: return "TriangleViolation";
    case Err::NotUltrametric: return "NotUltrametric";
    case Err::QOutOfRange: return "QOutOfRange";
    case Err::LevelOutOfRange: return "LevelOutOfRange";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::SamePoint: return "SamePoint";
    case Err::SinglePoint: return "SinglePoint";
    case Err::SpaceMismatch: return "SpaceMismatch";
    case Err::ZeroFunction: return "ZeroFunction";
    case Err::BaseValueNonzero: return "BaseValueNonzero";
    case Err::UnknownBuiltin: return "UnknownBuiltin";
    case Err::OracleViolation: return "OracleViolation";
    case Err::SupportOutsideTruncation: return "SupportOutsideTruncation";
    case Err::WitnessConditionsFail: return "WitnessConditionsFail";
    case Err::NotIdempotent: return "NotIdempotent";
    case Err::DegenerateBasis: return "DegenerateBasis";
    case Err::FlatnessViolation: return "FlatnessViolation";
    case Err::NotUnitNorm: return "NotUnitNorm";
    case Err::UnknownSuite: return "UnknownSuite";
    case Err::ParseError: return "ParseError";
    case Err::BadArgument: return "BadArgument";
  }
  return "UnknownError";
}

Error::Error(Err code, const std::string& what)
    : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace ultralip
