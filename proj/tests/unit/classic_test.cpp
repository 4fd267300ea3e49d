#include "depval/classic.hpp"

#include <gtest/gtest.h>

#include "depval/error.hpp"
#include "oracles.hpp"

namespace depval {
namespace {

const AssetSpec kAsset(100.0, 10.0);

TEST(StraightLineTest, Values) {
  EXPECT_DOUBLE_EQ(straight_line_book_value(kAsset, Age(5)), 50.0);
  EXPECT_DOUBLE_EQ(straight_line_book_value(kAsset, Age(0)), 100.0);
  EXPECT_DOUBLE_EQ(straight_line_book_value(kAsset, Age(10)), 0.0);
  EXPECT_DOUBLE_EQ(straight_line_book_value(kAsset, Age(2.5)), 75.0);
  EXPECT_THROW(straight_line_book_value(kAsset, Age(10.01)), ValuationError);
}

TEST(DoubleDecliningTest, Values) {
  EXPECT_DOUBLE_EQ(double_declining_book_value(kAsset, 0), 100.0);
  EXPECT_NEAR(double_declining_book_value(kAsset, 1), 80.0, 1e-12);
  // 100 * 0.8^10: the residual left at end of life.
  EXPECT_NEAR(double_declining_book_value(kAsset, 10), 10.73741824, 1e-9);
}

TEST(DoubleDecliningTest, ShortLivesFullyDepreciateWithoutGoingNegative) {
  EXPECT_DOUBLE_EQ(double_declining_book_value(AssetSpec(100, 1), 1), 0.0);
  EXPECT_DOUBLE_EQ(double_declining_book_value(AssetSpec(100, 2), 1), 0.0);
  EXPECT_DOUBLE_EQ(double_declining_book_value(AssetSpec(100, 2), 2), 0.0);
  EXPECT_GT(double_declining_book_value(AssetSpec(100, 3), 3), 0.0);
}

TEST(SumOfYearsTest, Values) {
  EXPECT_DOUBLE_EQ(sum_of_years_book_value(kAsset, 0), 100.0);
  EXPECT_NEAR(sum_of_years_book_value(kAsset, 1), 100.0 - 100.0 * 10.0 / 55.0,
              1e-12);
  EXPECT_DOUBLE_EQ(sum_of_years_book_value(kAsset, 10), 0.0);
}

TEST(ClassicMethodsTest, PeriodErrors) {
  const auto code = [](auto fn) {
    try {
      fn();
    } catch (const ValuationError& e) {
      return e.code();
    }
    return ErrorCode::invalid_input;
  };
  EXPECT_EQ(code([] { double_declining_book_value(kAsset, 11); }),
            ErrorCode::age_out_of_range);
  EXPECT_EQ(code([] { sum_of_years_book_value(kAsset, -1); }),
            ErrorCode::age_out_of_range);
  EXPECT_EQ(code([] { double_declining_book_value(AssetSpec(100, 9.5), 1); }),
            ErrorCode::non_integer_period);
  EXPECT_EQ(code([] { sum_of_years_book_value(AssetSpec(100, 9.5), 1); }),
            ErrorCode::non_integer_period);
}

TEST(ClassicMethodsTest, AgreeWithYearByYearOraclesAndAreNonIncreasing) {
  for (std::int64_t life : {1, 2, 3, 5, 10, 17, 40}) {
    const AssetSpec asset(1234.5, static_cast<double>(life));
    double prev_ddb = asset.cost();
    double prev_syd = asset.cost();
    for (std::int64_t a = 0; a <= life; ++a) {
      const double ddb = double_declining_book_value(asset, a);
      const double syd = sum_of_years_book_value(asset, a);
      EXPECT_NEAR(ddb,
                  static_cast<double>(oracle::double_declining(1234.5, life, a)),
                  1e-9);
      EXPECT_NEAR(syd,
                  static_cast<double>(oracle::sum_of_years(1234.5, life, a)),
                  1e-9);
      EXPECT_LE(ddb, prev_ddb);
      EXPECT_LE(syd, prev_syd);
      EXPECT_GE(ddb, 0.0);
      EXPECT_GE(syd, 0.0);
      prev_ddb = ddb;
      prev_syd = syd;
    }
    EXPECT_DOUBLE_EQ(sum_of_years_book_value(asset, life), 0.0);
  }
}

TEST(MethodTokenTest, ParseAndPrint) {
  for (Method m : {Method::intrinsic, Method::straight_line,
                   Method::double_declining, Method::sum_of_years}) {
    EXPECT_EQ(parse_method(to_token(m)), m);
  }
  EXPECT_EQ(parse_method("straight_line"), Method::straight_line);
  EXPECT_FALSE(parse_method("bogus").has_value());
  EXPECT_FALSE(parse_method("").has_value());
}

}  // namespace
}  // namespace depval
