#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mk {

// Numeric values are part of the C API (see mathieu_kit.h); append only.
enum class ErrorCode : int {
  DivisionByZero = 1,
  FieldMismatch = 2,
  BothZero = 3,
  ZeroPolynomial = 4,
  NotAssociative = 5,
  BadUnit = 6,
  NotMonic = 7,
  AlgebraMismatch = 8,
  NilpotentInput = 9,
  InvertibleInput = 10,
  InfiniteField = 11,
  NotAnIdeal = 12,
  NotAHomomorphism = 13,
  TooLarge = 14,
  InfiniteFieldNoDecision = 15,
  NotInRadical = 16,
  NotMathieu = 17,
  NotCommutative = 18,
  ZeroElement = 19,
  OnlyTrivial = 20,
  ZeroDual = 21,
  NotMatrixAlgebra = 22,
  WrongCodimension = 23,
  ScalarDual = 24,
  TooSmall = 25,
  NotProper = 26,
  InvalidArgument = 27,
  ParseError = 28,
  Internal = 29,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace mk
