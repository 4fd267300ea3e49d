#include "depval/io/money.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace depval::io {
namespace {

// Decimal digits of |value| split at the decimal point, taken from the
// shortest representation that round-trips.
struct DecimalDigits {
  bool negative = false;
  std::string integer;   // no leading zeros except a lone "0"
  std::string fraction;  // may be empty
};

DecimalDigits shortest_digits(double value) {
  std::array<char, 512> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(),
                                       buffer.data() + buffer.size(),
                                       std::abs(value),
                                       std::chars_format::fixed);
  if (ec != std::errc{}) throw std::runtime_error("to_chars failed");
  const std::string_view text(buffer.data(),
                              static_cast<std::size_t>(end - buffer.data()));
  DecimalDigits digits;
  digits.negative = std::signbit(value);
  const auto dot = text.find('.');
  digits.integer = std::string(text.substr(0, dot));
  if (dot != std::string_view::npos) {
    digits.fraction = std::string(text.substr(dot + 1));
  }
  return digits;
}

// Adds one unit in the last place of a digit string, returning true on
// carry out of the most significant digit.
bool increment(std::string& digits) {
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it == '9') {
      *it = '0';
    } else {
      ++*it;
      return false;
    }
  }
  return true;
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("cannot format a non-finite amount");
  }
  const auto places = static_cast<std::size_t>(decimals < 0 ? 0 : decimals);
  DecimalDigits d = shortest_digits(value);

  std::string kept = d.integer + d.fraction.substr(0, places);
  kept.append(places - std::min(places, d.fraction.size()), '0');

  if (d.fraction.size() > places) {
    const std::string_view rest = std::string_view(d.fraction).substr(places);
    const char first = rest.front();
    const bool beyond_half =
        first > '5' ||
        (first == '5' && rest.find_first_not_of('0', 1) != std::string_view::npos);
    const bool tie = first == '5' && !beyond_half;
    const bool odd = ((kept.back() - '0') % 2) != 0;
    if (beyond_half || (tie && odd)) {
      if (increment(kept)) kept.insert(kept.begin(), '1');
    }
  }

  const std::size_t int_len = kept.size() - places;
  std::string out;
  if (d.negative && kept.find_first_not_of('0') != std::string::npos) {
    out.push_back('-');
  }
  out.append(kept, 0, int_len);
  if (places > 0) {
    out.push_back('.');
    out.append(kept, int_len, places);
  }
  return out;
}

double round_half_even(double value, int decimals) {
  return *parse_number(format_fixed(value, decimals));
}

std::string format_shortest(double value) {
  std::array<char, 64> buffer{};
  const auto [end, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("to_chars failed");
  return {buffer.data(), end};
}

std::optional<double> parse_number(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  if (token.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() ||
      !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::optional<double> parse_rate(std::string_view token) {
  if (!token.empty() && token.back() == '%') {
    token.remove_suffix(1);
    const auto percent = parse_number(token);
    if (!percent) return std::nullopt;
    return *percent / 100.0;
  }
  return parse_number(token);
}

}  // namespace depval::io
