#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace depval::io {

inline constexpr int kMoneyDecimals = 4;

/// Fixed-point rendering with round-half-even applied to the shortest
/// decimal form of `value`. Never emits "-0.0000".
std::string format_fixed(double value, int decimals = kMoneyDecimals);

/// The number format_fixed() would print, as a double.
double round_half_even(double value, int decimals = kMoneyDecimals);

/// Shortest round-trip decimal form (e.g. 0.2, 1e-09).
std::string format_shortest(double value);

/// Strict parse: the whole token must be a finite decimal number.
std::optional<double> parse_number(std::string_view token);

/// Like parse_number, but a trailing '%' divides by 100.
std::optional<double> parse_rate(std::string_view token);

}  // namespace depval::io
