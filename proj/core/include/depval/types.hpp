#pragma once

#include <cstdint>
#include <string_view>

namespace depval {

/// A depreciable asset: the cost of each replacement (a positive magnitude)
/// and the number of periods each unit lasts before it must be replaced.
class AssetSpec {
 public:
  AssetSpec(double cost, double lifetime);

  double cost() const noexcept { return cost_; }
  double lifetime() const noexcept { return lifetime_; }

  /// True when the lifetime is a whole number of periods.
  bool has_integer_lifetime() const noexcept;
  /// Lifetime as a period count. Throws NonIntegerPeriod otherwise.
  std::int64_t periods() const;

  friend bool operator==(const AssetSpec&, const AssetSpec&) = default;

 private:
  double cost_;
  double lifetime_;
};

/// Per-period cost of capital as a fraction (0.2 means 20%).
class DiscountRate {
 public:
  explicit DiscountRate(double rate);

  double value() const noexcept { return rate_; }
  bool is_zero() const noexcept { return rate_ == 0.0; }

  friend auto operator<=>(const DiscountRate&, const DiscountRate&) = default;

 private:
  double rate_;
};

/// Periods elapsed since purchase. Range against a lifetime is checked by
/// the operation that pairs it with an asset.
class Age {
 public:
  explicit Age(double periods);

  double value() const noexcept { return periods_; }

  friend auto operator<=>(const Age&, const Age&) = default;

 private:
  double periods_;
};

enum class ValuationKind { present_cost, delayed_cost, intrinsic_value };

std::string_view to_string(ValuationKind kind) noexcept;

/// A money amount observed at a given asset age. Costs are negative,
/// intrinsic values lie in [0, cost].
struct Valuation {
  double amount;
  Age age;
  ValuationKind kind;
};

/// Throws AgeOutOfRange unless 0 <= age <= asset.lifetime().
void require_age_within(const AssetSpec& asset, Age age);

}  // namespace depval
