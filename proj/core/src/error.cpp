// SPDX-License-Identifier: MIT
#include "skewroots/error.hpp"

namespace skewroots {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::BadSigma: return "BadSigma";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::SizeBoundExceeded: return "SizeBoundExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::BadRange: return "BadRange";
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::ZeroAlpha: return "ZeroAlpha";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::ZeroLeading: return "ZeroLeading";
    case Errc::ZeroConstant: return "ZeroConstant";
    case Errc::DimTooLarge: return "DimTooLarge";
    case Errc::WrongDegree: return "WrongDegree";
    case Errc::ZeroMiddleCoefficient: return "ZeroMiddleCoefficient";
    case Errc::ZeroOuterCoefficient: return "ZeroOuterCoefficient";
    case Errc::ZeroInnerCoefficient: return "ZeroInnerCoefficient";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::UnsupportedN: return "UnsupportedN";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::InternalCheck: return "InternalCheck";
  }
  return "UnknownError";
}

}  // namespace skewroots
