// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace skewroots {

// Reasons a library call can refuse its input.  Every throw site picks the
// most specific code; callers that need to distinguish parse problems from
// domain problems (the CLI does) branch on code() rather than on messages.
enum class Errc {
  // field construction
  NonPrime,
  BadSigma,
  ReducibleModulus,
  SizeBoundExceeded,
  // element arithmetic
  DivisionByZero,
  MixedFields,
  // sigma / norm helpers
  ZeroDivisor,
  BadRange,
  // skew polynomial operations
  BothZero,
  ZeroInput,
  ZeroAlpha,
  DegreeTooLarge,
  ZeroPolynomial,
  // matrix products
  DegreeZero,
  ZeroLeading,
  ZeroConstant,
  DimTooLarge,
  // low-degree closed forms
  WrongDegree,
  ZeroMiddleCoefficient,
  ZeroOuterCoefficient,
  ZeroInnerCoefficient,
  ZeroCoefficient,
  UnsupportedN,
  // oracle / search
  FieldTooLarge,
  BudgetExceeded,
  // text codecs and CLI input
  ParseError,
  // an internal cross-assertion failed; indicates a defect, not bad input
  InternalCheck,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace skewroots
