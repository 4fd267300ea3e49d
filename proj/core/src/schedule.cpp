#include "depval/schedule.hpp"

#include <algorithm>
#include <string>

#include "depval/error.hpp"
#include "depval/valuation.hpp"

namespace depval {
namespace {

double book_value_at(const AssetSpec& asset, Method method,
                     const std::optional<DiscountRate>& rate,
                     std::int64_t age) {
  switch (method) {
    case Method::intrinsic:
      return intrinsic_value(asset, *rate, Age(static_cast<double>(age)))
          .amount;
    case Method::straight_line:
      return straight_line_book_value(asset, Age(static_cast<double>(age)));
    case Method::double_declining:
      return double_declining_book_value(asset, age);
    case Method::sum_of_years:
      return sum_of_years_book_value(asset, age);
  }
  throw ValuationError(ErrorCode::invalid_input, "unknown method");
}

}  // namespace

Schedule build_schedule(const AssetSpec& asset, Method method,
                        std::optional<DiscountRate> rate) {
  if (method == Method::intrinsic && !rate) {
    throw ValuationError(ErrorCode::missing_rate,
                         "intrinsic schedule requires a cost of capital");
  }
  if (method != Method::intrinsic) rate.reset();

  const std::int64_t life = asset.periods();
  Schedule schedule{method, rate, asset, {}};
  schedule.rows.reserve(static_cast<std::size_t>(life));

  double previous = asset.cost();
  for (std::int64_t n = 1; n <= life; ++n) {
    const double book = book_value_at(asset, method, rate, n);
    double expense = book - previous;
    if (method == Method::intrinsic) {
      expense = intrinsic_depreciation(asset, *rate,
                                       Age(static_cast<double>(n - 1)),
                                       Age(static_cast<double>(n)));
    }
    schedule.rows.push_back({n, static_cast<double>(n), expense, book});
    previous = book;
  }
  return schedule;
}

ComparisonReport compare_methods(const AssetSpec& asset,
                                 std::span<const Method> methods,
                                 DiscountRate rate) {
  if (methods.empty()) {
    throw ValuationError(ErrorCode::invalid_input,
                         "comparison needs at least one method");
  }
  ComparisonReport report{asset, {}};
  report.schedules.reserve(methods.size());
  for (Method method : methods) {
    report.schedules.push_back(build_schedule(asset, method, rate));
  }
  return report;
}

SweepReport rate_sweep(const AssetSpec& asset,
                       std::span<const DiscountRate> rates) {
  if (rates.empty()) {
    throw ValuationError(ErrorCode::invalid_input,
                         "rate sweep needs at least one rate");
  }
  const std::int64_t life = asset.periods();
  SweepReport report{asset, {rates.begin(), rates.end()}, {}};
  report.values.reserve(rates.size());
  for (DiscountRate rate : rates) {
    std::vector<double> column;
    column.reserve(static_cast<std::size_t>(life + 1));
    for (std::int64_t a = 0; a <= life; ++a) {
      column.push_back(
          intrinsic_value(asset, rate, Age(static_cast<double>(a))).amount);
    }
    report.values.push_back(std::move(column));
  }
  return report;
}

double chord_gap(const AssetSpec& asset, DiscountRate rate) {
  const std::int64_t life = asset.periods();
  double gap = 0.0;
  for (std::int64_t a = 0; a <= life; ++a) {
    const Age age(static_cast<double>(a));
    gap = std::max(gap, intrinsic_value(asset, rate, age).amount -
                            straight_line_book_value(asset, age));
  }
  return gap;
}

double trade_surplus(const AssetSpec& asset, Age age, DiscountRate seller_rate,
                     DiscountRate buyer_rate) {
  return intrinsic_value(asset, buyer_rate, age).amount -
         intrinsic_value(asset, seller_rate, age).amount;
}

}  // namespace depval
