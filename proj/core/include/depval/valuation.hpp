#pragma once

#include <cstdint>

#include "depval/types.hpp"

// Intrinsic valuation of a depreciable asset that is replaced forever at
// the end of each lifetime, with replacements discounted at the owner's
// cost of capital. Costs are returned as negative amounts; values as
// non-negative amounts.
//
// All functions are pure and may be called concurrently.

namespace depval {

/// Present cost of buying the asset now and replacing it every lifetime
/// forever: -C(1+r)^l / ((1+r)^l - 1). Throws ZeroRateDivergence at r = 0.
Valuation present_cost(const AssetSpec& asset, DiscountRate rate);

/// The same perpetual cost stream deferred by the remaining life l - a:
/// -C(1+r)^a / ((1+r)^l - 1).
Valuation delayed_present_cost(const AssetSpec& asset, DiscountRate rate,
                               Age age);

/// Saving from owning an asset of the given age, i.e. the delayed cost less
/// the immediate cost. At r = 0 the two perpetuities diverge but their
/// difference has the straight-line limit C(1 - a/l), which is returned.
Valuation intrinsic_value(const AssetSpec& asset, DiscountRate rate, Age age);

/// Change in intrinsic value between two ages (non-positive).
double intrinsic_depreciation(const AssetSpec& asset, DiscountRate rate,
                              Age age_start, Age age_end);

/// Truncated perpetuity -C - sum_{k=1}^{terms} C/(1+r)^(l k), summed term by
/// term. Used to check present_cost independently of its closed form.
double perpetuity_oracle(const AssetSpec& asset, DiscountRate rate,
                         std::int64_t terms);

}  // namespace depval
