#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "depval/types.hpp"

namespace depval {

enum class Method { intrinsic, straight_line, double_declining, sum_of_years };

/// Short token used on the command line and in report headers
/// (intrinsic, sl, ddb, syd).
std::string_view to_token(Method method) noexcept;
/// Accepts the short tokens and the long snake_case names.
std::optional<Method> parse_method(std::string_view token) noexcept;

/// cost * (1 - age / lifetime). Real ages allowed.
double straight_line_book_value(const AssetSpec& asset, Age age);

/// cost * (1 - 2/l)^age with no switch to straight line and no final
/// write-off, so a residual remains at end of life for l > 2. The
/// per-period rate is capped at 100% so l <= 2 never goes negative.
double double_declining_book_value(const AssetSpec& asset, std::int64_t age);

/// cost * (1 - sum_{j=1}^{age} (l - j + 1) / S), S = l(l+1)/2.
double sum_of_years_book_value(const AssetSpec& asset, std::int64_t age);

}  // namespace depval
