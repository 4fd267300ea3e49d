#include "depval/types.hpp"

#include <cmath>
#include <string>

#include "depval/error.hpp"
#include "describe.hpp"

namespace depval {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_input: return "InvalidInput";
    case ErrorCode::zero_rate_divergence: return "ZeroRateDivergence";
    case ErrorCode::age_out_of_range: return "AgeOutOfRange";
    case ErrorCode::age_order_violation: return "AgeOrderViolation";
    case ErrorCode::non_integer_period: return "NonIntegerPeriod";
    case ErrorCode::missing_rate: return "MissingRate";
  }
  return "Unknown";
}

std::string_view to_string(ValuationKind kind) noexcept {
  switch (kind) {
    case ValuationKind::present_cost: return "present_cost";
    case ValuationKind::delayed_cost: return "delayed_cost";
    case ValuationKind::intrinsic_value: return "intrinsic_value";
  }
  return "unknown";
}

AssetSpec::AssetSpec(double cost, double lifetime)
    : cost_(cost), lifetime_(lifetime) {
  if (!std::isfinite(cost) || cost <= 0.0) {
    throw ValuationError(ErrorCode::invalid_input,
                         "cost must be a finite positive magnitude, got " +
                             detail::describe(cost));
  }
  if (!std::isfinite(lifetime) || lifetime <= 0.0) {
    throw ValuationError(ErrorCode::invalid_input,
                         "lifetime must be finite and positive, got " +
                             detail::describe(lifetime));
  }
}

bool AssetSpec::has_integer_lifetime() const noexcept {
  return std::floor(lifetime_) == lifetime_ && lifetime_ < 9.0e15;
}

std::int64_t AssetSpec::periods() const {
  if (!has_integer_lifetime()) {
    throw ValuationError(ErrorCode::non_integer_period,
                         "lifetime must be a whole number of periods, got " +
                             detail::describe(lifetime_));
  }
  return static_cast<std::int64_t>(lifetime_);
}

DiscountRate::DiscountRate(double rate) : rate_(rate) {
  if (!std::isfinite(rate) || rate < 0.0) {
    throw ValuationError(ErrorCode::invalid_input,
                         "rate must be finite and non-negative, got " +
                             detail::describe(rate));
  }
}

Age::Age(double periods) : periods_(periods) {
  if (!std::isfinite(periods) || periods < 0.0) {
    throw ValuationError(ErrorCode::age_out_of_range,
                         "age must be finite and non-negative, got " +
                             detail::describe(periods));
  }
}

void require_age_within(const AssetSpec& asset, Age age) {
  if (age.value() > asset.lifetime()) {
    throw ValuationError(ErrorCode::age_out_of_range,
                         "age " + detail::describe(age.value()) +
                             " exceeds lifetime " +
                             detail::describe(asset.lifetime()));
  }
}

}  // namespace depval
