#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace depval {

enum class ErrorCode {
  invalid_input,
  zero_rate_divergence,
  age_out_of_range,
  age_order_violation,
  non_integer_period,
  missing_rate,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Raised by every operation in the library when a precondition fails.
/// The code identifies which contract was violated; what() carries a
/// human-readable diagnostic.
class ValuationError : public std::invalid_argument {
 public:
  ValuationError(ErrorCode code, const std::string& message)
      : std::invalid_argument(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace depval
