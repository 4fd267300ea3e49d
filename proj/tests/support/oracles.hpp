#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// touches the closed forms in the library: perpetuities are summed term by
// term in long double, and the classical methods are run year by year.

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace depval::oracle {

// Sum of C/(1+r)^(offset + l*k) for k = 0, 1, ... until the terms stop
// changing the total.
inline long double discounted_replacements(long double cost,
                                           long double lifetime,
                                           long double rate,
                                           long double offset) {
  const long double step = std::pow(1.0L + rate, -lifetime);
  long double term = cost * std::pow(1.0L + rate, -offset);
  long double total = 0.0L;
  for (std::int64_t k = 0; k < 50'000'000; ++k) {
    const long double next = total + term;
    if (next == total) break;
    total = next;
    term *= step;
  }
  return total;
}

// Immediate purchase plus every replacement (negative: it is a cost).
inline long double present_cost(long double cost, long double lifetime,
                                long double rate) {
  return -discounted_replacements(cost, lifetime, rate, 0.0L);
}

// The same stream with the first purchase deferred by lifetime - age.
inline long double delayed_cost(long double cost, long double lifetime,
                                long double rate, long double age) {
  return -discounted_replacements(cost, lifetime, rate, lifetime - age);
}

inline long double intrinsic_value(long double cost, long double lifetime,
                                   long double rate, long double age) {
  return delayed_cost(cost, lifetime, rate, age) -
         present_cost(cost, lifetime, rate);
}

// Truncated sum with an explicit term count, as the library oracle defines it.
inline long double truncated_perpetuity(long double cost, long double lifetime,
                                        long double rate, std::int64_t terms) {
  long double total = -cost;
  long double discount = 1.0L;
  const long double step = std::pow(1.0L + rate, -lifetime);
  for (std::int64_t k = 1; k <= terms; ++k) {
    discount *= step;
    total -= cost * discount;
  }
  return total;
}

inline long double straight_line(long double cost, long double lifetime,
                                 long double age) {
  return cost - age * (cost / lifetime);
}

// Year-by-year declining balance at rate 2/l (capped at 100%).
inline long double double_declining(long double cost, std::int64_t lifetime,
                                    std::int64_t age) {
  const long double rate =
      std::min(1.0L, 2.0L / static_cast<long double>(lifetime));
  long double book = cost;
  for (std::int64_t year = 1; year <= age; ++year) book -= book * rate;
  return book;
}

// Year-by-year sum-of-years-digits expenses.
inline long double sum_of_years(long double cost, std::int64_t lifetime,
                                std::int64_t age) {
  long double digits = 0.0L;
  for (std::int64_t j = 1; j <= lifetime; ++j) digits += j;
  long double book = cost;
  for (std::int64_t year = 1; year <= age; ++year) {
    book -= cost * static_cast<long double>(lifetime - year + 1) / digits;
  }
  return book;
}

struct GapPoint {
  long double gap;
  std::int64_t age;
};

// Largest intrinsic-minus-straight-line distance on the integer age grid.
inline GapPoint chord_gap(long double cost, std::int64_t lifetime,
                          long double rate) {
  GapPoint best{0.0L, 0};
  for (std::int64_t a = 0; a <= lifetime; ++a) {
    const auto l = static_cast<long double>(lifetime);
    const auto age = static_cast<long double>(a);
    const long double gap = intrinsic_value(cost, l, rate, age) -
                            straight_line(cost, l, age);
    if (gap > best.gap) best = {gap, a};
  }
  return best;
}

}  // namespace depval::oracle
