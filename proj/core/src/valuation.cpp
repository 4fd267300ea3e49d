#include "depval/valuation.hpp"

#include <cmath>
#include <string>

#include "depval/error.hpp"
#include "describe.hpp"

namespace depval {
namespace {

// Every closed form is rewritten over (1+r)^-x so nothing overflows for
// large r*l, and expm1/log1p keep full precision as r -> 0. With
// L = log1p(r):
//   (1+r)^l - 1           = -e^{lL} * expm1(-lL)
//   P = -C / (1 - (1+r)^-l) = C / expm1(-lL)
//   V = C * expm1(-(l-a)L) / expm1(-lL)

double log_growth(DiscountRate rate) { return std::log1p(rate.value()); }

void require_positive_rate(DiscountRate rate) {
  if (rate.is_zero()) {
    throw ValuationError(ErrorCode::zero_rate_divergence,
                         "replacement perpetuity diverges at a zero rate");
  }
}

double checked(double amount, const char* what) {
  if (!std::isfinite(amount)) {
    throw ValuationError(ErrorCode::invalid_input,
                         std::string(what) + " is not finite for these inputs");
  }
  return amount;
}

}  // namespace

Valuation present_cost(const AssetSpec& asset, DiscountRate rate) {
  require_positive_rate(rate);
  const double l = asset.lifetime();
  const double amount = asset.cost() / std::expm1(-l * log_growth(rate));
  return {checked(amount, "present cost"), Age(0.0),
          ValuationKind::present_cost};
}

Valuation delayed_present_cost(const AssetSpec& asset, DiscountRate rate,
                               Age age) {
  require_age_within(asset, age);
  require_positive_rate(rate);
  const double growth = log_growth(rate);
  const double l = asset.lifetime();
  const double amount = asset.cost() * std::exp(-(l - age.value()) * growth) /
                        std::expm1(-l * growth);
  return {checked(amount, "delayed present cost"), age,
          ValuationKind::delayed_cost};
}

Valuation intrinsic_value(const AssetSpec& asset, DiscountRate rate, Age age) {
  require_age_within(asset, age);
  const double l = asset.lifetime();
  const double remaining = l - age.value();
  double amount = 0.0;
  if (rate.is_zero()) {
    amount = asset.cost() * (remaining / l);
  } else {
    const double growth = log_growth(rate);
    amount = asset.cost() *
             (std::expm1(-remaining * growth) / std::expm1(-l * growth));
  }
  return {checked(amount, "intrinsic value"), age,
          ValuationKind::intrinsic_value};
}

double intrinsic_depreciation(const AssetSpec& asset, DiscountRate rate,
                              Age age_start, Age age_end) {
  require_age_within(asset, age_start);
  require_age_within(asset, age_end);
  if (age_end < age_start) {
    throw ValuationError(ErrorCode::age_order_violation,
                         "period end age " + detail::describe(age_end.value()) +
                             " precedes start age " +
                             detail::describe(age_start.value()));
  }
  const double l = asset.lifetime();
  const double span = age_end.value() - age_start.value();
  if (rate.is_zero()) {
    return checked(-asset.cost() * (span / l), "intrinsic depreciation");
  }
  // C((1+r)^end - (1+r)^start)/((1+r)^l - 1), scaled by (1+r)^-l.
  const double growth = log_growth(rate);
  const double expense = asset.cost() *
                         std::exp(-(l - age_end.value()) * growth) *
                         (std::expm1(-span * growth) / std::expm1(-l * growth));
  return checked(-expense, "intrinsic depreciation");
}

double perpetuity_oracle(const AssetSpec& asset, DiscountRate rate,
                         std::int64_t terms) {
  require_positive_rate(rate);
  if (terms < 1) {
    throw ValuationError(ErrorCode::invalid_input,
                         "perpetuity oracle needs at least one term, got " +
                             std::to_string(terms));
  }
  const double base = 1.0 + rate.value();
  double total = -asset.cost();
  for (std::int64_t k = 1; k <= terms; ++k) {
    total -= asset.cost() /
             std::pow(base, asset.lifetime() * static_cast<double>(k));
  }
  return checked(total, "perpetuity sum");
}

}  // namespace depval
