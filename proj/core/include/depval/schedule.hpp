#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "depval/classic.hpp"
#include "depval/types.hpp"

namespace depval {

/// One period of a depreciation schedule. Period n runs from age n-1 to n;
/// the expense is booked at period end.
struct ScheduleRow {
  std::int64_t period;
  double age_end;
  double expense;
  double book_value;
};

struct Schedule {
  Method method;
  std::optional<DiscountRate> rate;  // set for intrinsic only
  AssetSpec asset;
  std::vector<ScheduleRow> rows;  // periods 1..lifetime
};

struct ComparisonReport {
  AssetSpec asset;
  std::vector<Schedule> schedules;
};

struct SweepReport {
  AssetSpec asset;
  std::vector<DiscountRate> rates;
  // values[i][a] = intrinsic value at integer age a under rates[i].
  std::vector<std::vector<double>> values;
};

/// Throws MissingRate when an intrinsic schedule is requested without a
/// rate, NonIntegerPeriod when the lifetime is fractional.
Schedule build_schedule(const AssetSpec& asset, Method method,
                        std::optional<DiscountRate> rate);

ComparisonReport compare_methods(const AssetSpec& asset,
                                 std::span<const Method> methods,
                                 DiscountRate rate);

SweepReport rate_sweep(const AssetSpec& asset,
                       std::span<const DiscountRate> rates);

/// Largest vertical distance, over integer ages, between the intrinsic value
/// curve and the straight line from (0, cost) to (l, 0).
double chord_gap(const AssetSpec& asset, DiscountRate rate);

/// Buyer's intrinsic value less seller's at the same age.
double trade_surplus(const AssetSpec& asset, Age age, DiscountRate seller_rate,
                     DiscountRate buyer_rate);

}  // namespace depval
