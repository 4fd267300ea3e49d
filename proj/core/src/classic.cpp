#include "depval/classic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "depval/error.hpp"

namespace depval {
namespace {

void require_period_within(const AssetSpec& asset, std::int64_t age) {
  const std::int64_t life = asset.periods();
  if (age < 0 || age > life) {
    throw ValuationError(ErrorCode::age_out_of_range,
                         "period " + std::to_string(age) +
                             " outside [0, " + std::to_string(life) + "]");
  }
}

}  // namespace

std::string_view to_token(Method method) noexcept {
  switch (method) {
    case Method::intrinsic: return "intrinsic";
    case Method::straight_line: return "sl";
    case Method::double_declining: return "ddb";
    case Method::sum_of_years: return "syd";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view token) noexcept {
  if (token == "intrinsic") return Method::intrinsic;
  if (token == "sl" || token == "straight_line") return Method::straight_line;
  if (token == "ddb" || token == "double_declining") {
    return Method::double_declining;
  }
  if (token == "syd" || token == "sum_of_years") return Method::sum_of_years;
  return std::nullopt;
}

double straight_line_book_value(const AssetSpec& asset, Age age) {
  require_age_within(asset, age);
  return asset.cost() * ((asset.lifetime() - age.value()) / asset.lifetime());
}

double double_declining_book_value(const AssetSpec& asset, std::int64_t age) {
  require_period_within(asset, age);
  const double rate = std::min(1.0, 2.0 / asset.lifetime());
  if (age == 0) return asset.cost();
  return asset.cost() * std::pow(1.0 - rate, static_cast<double>(age));
}

double sum_of_years_book_value(const AssetSpec& asset, std::int64_t age) {
  require_period_within(asset, age);
  // Digits remaining after `age` years: sum_{j=age+1}^{l} (l-j+1) = m(m+1)/2
  // with m = l - age, so the book value is cost * m(m+1) / (l(l+1)).
  const double l = asset.lifetime();
  const double m = l - static_cast<double>(age);
  return asset.cost() * (m * (m + 1.0)) / (l * (l + 1.0));
}

}  // namespace depval
