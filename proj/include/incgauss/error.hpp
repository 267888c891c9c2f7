#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace incgauss {

enum class ErrorCode {
  NotCoprime,
  EvenModulus,
  EvenArgument,
  IsSquare,
  SearchExhausted,
  BadInterval,
  IndicatorKind,
  BadModulus,
  EmptyInput,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Raised for every domain violation in the library. Derives from
// std::invalid_argument so callers that do not care about the code can
// catch the standard type.
class DomainError : public std::invalid_argument {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::invalid_argument(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace incgauss
