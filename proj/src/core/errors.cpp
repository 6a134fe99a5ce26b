#include "errors.hpp"

namespace mk {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::BadUnit: return "BadUnit";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NilpotentInput: return "NilpotentInput";
    case ErrorCode::InvertibleInput: return "InvertibleInput";
    case ErrorCode::InfiniteField: return "InfiniteField";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InfiniteFieldNoDecision: return "InfiniteFieldNoDecision";
    case ErrorCode::NotInRadical: return "NotInRadical";
    case ErrorCode::NotMathieu: return "NotMathieu";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::OnlyTrivial: return "OnlyTrivial";
    case ErrorCode::ZeroDual: return "ZeroDual";
    case ErrorCode::NotMatrixAlgebra: return "NotMatrixAlgebra";
    case ErrorCode::WrongCodimension: return "WrongCodimension";
    case ErrorCode::ScalarDual: return "ScalarDual";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace mk
