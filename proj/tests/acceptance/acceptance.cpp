// Acceptance suite: one line per criterion, non-zero exit if any fails.
//
//   depval_acceptance [path/to/depval]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "depval/classic.hpp"
#include "depval/io/money.hpp"
#include "depval/schedule.hpp"
#include "depval/valuation.hpp"
#include "oracles.hpp"

namespace {

using namespace depval;

struct Outcome {
  bool pass;
  std::string detail;
};

const AssetSpec kPaperAsset(100.0, 10.0);
const DiscountRate kPaperRate(0.2);

const std::array kCosts{1.0, 100.0, 1e6};
const std::array kLifetimes{1.0, 5.0, 10.0, 40.0};
const std::array kRates{0.01, 0.05, 0.2, 0.5};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

Outcome oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  double worst = 0.0;
  std::string cells;
  for (double c : kCosts) {
    for (double l : kLifetimes) {
      for (double r : kRates) {
        const AssetSpec asset(c, l);
        const double p = present_cost(asset, DiscountRate(r)).amount;
        const double sum = perpetuity_oracle(asset, DiscountRate(r), 500);
        const double rel = std::abs((sum - p) / p);
        worst = std::max(worst, rel);
        if (!(rel < 1e-9)) {
          ++failures;
          cells += " (C=" + fmt(c) + ",l=" + fmt(l) + ",r=" + fmt(r) +
                   ": " + fmt(rel) + ")";
        }
      }
    }
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  const bool fast = seconds < 1.0;
  std::string detail = "48 cells, " + std::to_string(failures) +
                       " above 1e-9, worst " + fmt(worst) + ", " +
                       fmt(seconds) + " s";
  if (!cells.empty()) detail += ";" + cells;
  return {failures == 0 && fast, detail};
}

Outcome boundary_identities() {
  double worst = 0.0;
  for (double c : kCosts) {
    for (double l : kLifetimes) {
      for (double r : kRates) {
        const AssetSpec asset(c, l);
        const double v0 = intrinsic_value(asset, DiscountRate(r), Age(0)).amount;
        const double vl = intrinsic_value(asset, DiscountRate(r), Age(l)).amount;
        worst = std::max({worst, std::abs(v0 - c) / c, std::abs(vl) / c});
      }
    }
  }
  return {worst <= 1e-12, "worst relative deviation " + fmt(worst)};
}

Outcome telescoping() {
  const Schedule s = build_schedule(kPaperAsset, Method::intrinsic, kPaperRate);
  double total = 0.0;
  for (const auto& row : s.rows) total += row.expense;
  return {s.rows.size() == 10 && std::abs(total + 100.0) <= 1e-9,
          "sum of 10 expenses = " + io::format_fixed(total, 12)};
}

Outcome point_check() {
  constexpr double kReference = 71.3329;
  // Independent route: D - P from term-by-term perpetuity sums.
  const double series = static_cast<double>(
      oracle::delayed_cost(100, 10, 0.2L, 5) - oracle::present_cost(100, 10, 0.2L));
  // Second route through the library's truncated oracle, delayed by l - a.
  const double truncated = perpetuity_oracle(kPaperAsset, kPaperRate, 500);
  const double via_oracle = truncated / std::pow(1.2, 5.0) - truncated;
  const double closed = intrinsic_value(kPaperAsset, kPaperRate, Age(5)).amount;
  const bool pass = std::abs(series - kReference) <= 1e-3 &&
                    std::abs(via_oracle - kReference) <= 1e-3 &&
                    std::abs(closed - kReference) <= 1e-3;
  return {pass, "series D-P " + io::format_fixed(series, 6) +
                    ", truncated D-P " + io::format_fixed(via_oracle, 6) +
                    ", closed form " + io::format_fixed(closed, 6)};
}

Outcome vanishing_rate() {
  double worst = 0.0;
  for (double a : {0.0, 2.5, 5.0, 7.5, 10.0}) {
    const double v = intrinsic_value(kPaperAsset, DiscountRate(1e-9), Age(a)).amount;
    const double sl = straight_line_book_value(kPaperAsset, Age(a));
    // At a = l both are zero; scale by cost there.
    const double scale = sl > 0.0 ? sl : kPaperAsset.cost();
    worst = std::max(worst, std::abs(v - sl) / scale);
  }
  return {worst <= 1e-6, "worst relative gap to straight line " + fmt(worst)};
}

Outcome rate_monotonicity() {
  const std::array rates{DiscountRate(0.01), DiscountRate(0.05),
                         DiscountRate(0.2), DiscountRate(0.5)};
  const SweepReport sweep = rate_sweep(kPaperAsset, rates);
  int violations = 0;
  for (int a = 1; a <= 9; ++a) {
    for (std::size_t i = 1; i < rates.size(); ++i) {
      if (!(sweep.values[i][a] > sweep.values[i - 1][a])) ++violations;
    }
  }
  return {violations == 0,
          std::to_string(violations) + " ordering violations over ages 1..9"};
}

Outcome dominance() {
  int violations = 0;
  double margin = INFINITY;
  for (std::int64_t a = 1; a <= 9; ++a) {
    const double v =
        intrinsic_value(kPaperAsset, kPaperRate, Age(static_cast<double>(a)))
            .amount;
    const double sl =
        straight_line_book_value(kPaperAsset, Age(static_cast<double>(a)));
    const double syd = sum_of_years_book_value(kPaperAsset, a);
    if (!(v > sl) || !(v > syd)) ++violations;
    margin = std::min(margin, v - std::max(sl, syd));
  }
  return {violations == 0, std::to_string(violations) +
                               " violations, smallest margin " +
                               io::format_fixed(margin)};
}

Outcome ddb_footnote() {
  const double book = double_declining_book_value(kPaperAsset, 10);
  return {std::abs(book - 10.7374) <= 1e-4 && book > 0.0,
          "final DDB book value " + io::format_fixed(book, 6)};
}

Outcome convexity_proxy() {
  double previous = -INFINITY;
  bool increasing = true;
  std::string values;
  for (double r : {0.01, 0.05, 0.1, 0.2, 0.5}) {
    const double gap = chord_gap(kPaperAsset, DiscountRate(r));
    increasing = increasing && gap > previous;
    previous = gap;
    values += (values.empty() ? "" : ", ") + io::format_fixed(gap);
  }
  return {increasing, "chord gaps " + values};
}

Outcome surplus_sign() {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double l = kPaperAsset.lifetime();
  int bad = 0;
  int zeros = 0;
  for (int i = 0; i < 100; ++i) {
    double age = l * unit(rng);
    double seller = unit(rng);
    double buyer = seller + (1.0 - seller) * unit(rng);
    // Every tenth sample is pinned to an endpoint or to equal rates.
    if (i % 10 == 0) age = 0.0;
    if (i % 10 == 1) age = l;
    if (i % 10 == 2) buyer = seller;
    const double s =
        trade_surplus(kPaperAsset, Age(age), DiscountRate(seller),
                      DiscountRate(buyer));
    const bool expect_zero = age == 0.0 || age == l || seller == buyer;
    if (s < 0.0 || (expect_zero != (s == 0.0))) ++bad;
    if (s == 0.0) ++zeros;
  }
  return {bad == 0, "100 samples, " + std::to_string(bad) + " violations, " +
                        std::to_string(zeros) + " exact zeros"};
}

std::string run_command(const std::string& command, int& status) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"),
                                             pclose);
  std::string out;
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) {
    out.append(buf.data(), n);
  }
  status = pclose(pipe.release());
  return out;
}

Outcome cli_determinism(const std::string& cli) {
  const std::string command =
      "'" + cli +
      "' compare --cost 100 --life 10 --rate 0.2 --methods intrinsic,sl,ddb,syd"
      " --format csv --deterministic";
  int first_status = 0;
  int second_status = 0;
  const std::string first = run_command(command, first_status);
  const std::string second = run_command(command, second_status);
  if (first_status != 0 || second_status != 0) {
    return {false, "CLI exited abnormally"};
  }
  if (first != second) return {false, "outputs differ"};

  std::istringstream in(first);
  std::string line;
  std::getline(in, line);
  if (line != "period,intrinsic,sl,ddb,syd") {
    return {false, "unexpected header '" + line + "'"};
  }
  std::vector<std::array<double, 5>> rows;
  while (std::getline(in, line)) {
    std::array<double, 5> row{};
    std::istringstream cells(line);
    std::string cell;
    for (double& v : row) {
      std::getline(cells, cell, ',');
      v = io::parse_number(cell).value_or(NAN);
    }
    rows.push_back(row);
  }
  if (rows.size() != 10) return {false, "expected 10 rows"};

  double previous = 100.0;
  double total = 0.0;
  bool dominates = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    total += rows[i][1] - previous;
    previous = rows[i][1];
    if (i < 9) dominates = dominates && rows[i][1] > rows[i][2] &&
                           rows[i][1] > rows[i][4];
  }
  const bool telescopes = std::abs(total + 100.0) <= 1e-9;
  const bool ddb = std::abs(rows[9][3] - 10.7374) <= 1e-4 && rows[9][3] > 0.0;
  return {telescopes && dominates && ddb,
          std::string("byte-identical; re-parsed: sum ") +
              io::format_fixed(total) + (dominates ? ", dominance ok" : ", dominance FAILED") +
              ", ddb final " + io::format_fixed(rows[9][3])};
}

}  // namespace

int main(int argc, char** argv) {
#ifdef DEPVAL_CLI_PATH
  std::string cli = DEPVAL_CLI_PATH;
#else
  std::string cli = "depval";
#endif
  if (argc > 1) cli = argv[1];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 oracle equivalence", oracle_equivalence},
      {"2 boundary identities", boundary_identities},
      {"3 telescoping", telescoping},
      {"4 point check V(5)", point_check},
      {"5 vanishing-rate limit", vanishing_rate},
      {"6 rate monotonicity", rate_monotonicity},
      {"7 dominance over SL and SYD", dominance},
      {"8 DDB residual", ddb_footnote},
      {"9 convexity proxy", convexity_proxy},
      {"10 surplus sign", surplus_sign},
      {"11 CLI determinism", [&] { return cli_determinism(cli); }},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << ": "
              << outcome.detail << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/"
            << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
