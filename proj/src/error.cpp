#include "incgauss/error.hpp"

namespace incgauss {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::EvenModulus: return "EvenModulus";
    case ErrorCode::EvenArgument: return "EvenArgument";
    case ErrorCode::IsSquare: return "IsSquare";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::IndicatorKind: return "IndicatorKind";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace incgauss
