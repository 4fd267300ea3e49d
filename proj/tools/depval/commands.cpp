#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>

#include "depval/classic.hpp"
#include "depval/error.hpp"
#include "depval/io/batch.hpp"
#include "depval/io/money.hpp"
#include "depval/io/registry.hpp"
#include "depval/io/report.hpp"
#include "depval/schedule.hpp"
#include "depval/valuation.hpp"

namespace depval::cli {
namespace {

// A bad command-line value. The message always names the flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] void reject(std::string_view flag, const std::string& text,
                         std::string_view why) {
  throw UsageError(std::string(flag) + " '" + text + "' " + std::string(why));
}

double positive_number(std::string_view flag, const std::string& text) {
  const auto value = io::parse_number(text);
  if (!value) reject(flag, text, "is not a number");
  if (*value <= 0.0) reject(flag, text, "must be positive");
  return *value;
}

AssetSpec asset_from(const std::string& cost, const std::string& life,
                     bool whole_periods) {
  const double c = positive_number("--cost", cost);
  const double l = positive_number("--life", life);
  if (whole_periods && std::floor(l) != l) {
    reject("--life", life, "must be a whole number of periods");
  }
  return AssetSpec(c, l);
}

DiscountRate rate_from(std::string_view flag, const std::string& text) {
  const auto value = io::parse_rate(text);
  if (!value) reject(flag, text, "is not a rate (use 0.2 or 20%)");
  if (*value < 0.0) reject(flag, text, "must not be negative");
  return DiscountRate(*value);
}

Age age_from(const AssetSpec& asset, const std::string& text) {
  const auto value = io::parse_number(text);
  if (!value) reject("--age", text, "is not a number");
  if (*value < 0.0 || *value > asset.lifetime()) {
    reject("--age", text,
           "is out of range [0, " + io::format_shortest(asset.lifetime()) +
               "]");
  }
  return Age(*value);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) items.push_back(item);
  if (!text.empty() && text.back() == ',') items.emplace_back();
  return items;
}

Method method_from(std::string_view flag, const std::string& token) {
  const auto method = parse_method(token);
  if (!method) reject(flag, token, "is not a method (intrinsic, sl, ddb, syd)");
  return *method;
}

struct GlobalOptions {
  std::string format = "table";
  bool deterministic = false;
};

io::Format format_from(const GlobalOptions& global) {
  const auto format = io::parse_format(global.format);
  if (!format) reject("--format", global.format, "must be table, csv or json");
  return *format;
}

struct ValueArgs {
  std::string cost, life, rate, age = "0";
  bool detail = false;
};

struct ScheduleArgs {
  std::string cost, life, rate, method;
};

struct CompareArgs {
  std::string cost, life, rate, methods;
};

struct SweepArgs {
  std::string cost, life, rates;
};

struct BatchArgs {
  std::string input, output;
};

struct SurplusArgs {
  std::string cost, life, age, seller_rate, buyer_rate;
};

int cmd_value(const ValueArgs& args, const GlobalOptions& global,
              std::ostream& out) {
  const io::Format format = format_from(global);
  const AssetSpec asset = asset_from(args.cost, args.life, false);
  const DiscountRate rate = rate_from("--rate", args.rate);
  const Age age = age_from(asset, args.age);

  io::ValueReport report{asset, rate, age,
                         intrinsic_value(asset, rate, age).amount,
                         args.detail, std::nullopt, std::nullopt};
  if (args.detail && !rate.is_zero()) {
    report.present_cost = present_cost(asset, rate).amount;
    report.delayed_cost = delayed_present_cost(asset, rate, age).amount;
  }
  out << io::render(report, format, {"value", global.deterministic});
  return kSuccess;
}

int cmd_schedule(const ScheduleArgs& args, const GlobalOptions& global,
                 std::ostream& out) {
  const io::Format format = format_from(global);
  const AssetSpec asset = asset_from(args.cost, args.life, true);
  const Method method = method_from("--method", args.method);
  std::optional<DiscountRate> rate;
  if (!args.rate.empty()) rate = rate_from("--rate", args.rate);
  if (method == Method::intrinsic && !rate) {
    throw UsageError("--rate is required for the intrinsic method");
  }
  out << io::render(build_schedule(asset, method, rate), format,
                    {"schedule", global.deterministic});
  return kSuccess;
}

int cmd_compare(const CompareArgs& args, const GlobalOptions& global,
                std::ostream& out) {
  const io::Format format = format_from(global);
  const AssetSpec asset = asset_from(args.cost, args.life, true);

  std::vector<Method> methods;
  for (const auto& token : split_list(args.methods)) {
    const Method method = method_from("--methods", token);
    if (std::find(methods.begin(), methods.end(), method) != methods.end()) {
      reject("--methods", token, "is listed twice");
    }
    methods.push_back(method);
  }
  if (methods.empty()) throw UsageError("--methods must name at least one method");

  const bool needs_rate =
      std::find(methods.begin(), methods.end(), Method::intrinsic) !=
      methods.end();
  if (needs_rate && args.rate.empty()) {
    throw UsageError("--rate is required for the intrinsic method");
  }
  const DiscountRate rate =
      args.rate.empty() ? DiscountRate(0.0) : rate_from("--rate", args.rate);

  out << io::render(compare_methods(asset, methods, rate), format,
                    {"compare", global.deterministic});
  return kSuccess;
}

int cmd_sweep(const SweepArgs& args, const GlobalOptions& global,
              std::ostream& out) {
  const io::Format format = format_from(global);
  const AssetSpec asset = asset_from(args.cost, args.life, true);
  std::vector<DiscountRate> rates;
  for (const auto& token : split_list(args.rates)) {
    rates.push_back(rate_from("--rates", token));
  }
  if (rates.empty()) throw UsageError("--rates must list at least one rate");

  io::SweepResult result{rate_sweep(asset, rates), {}};
  for (const auto& rate : rates) {
    result.chord_gaps.push_back(chord_gap(asset, rate));
  }
  out << io::render(result, format, {"sweep", global.deterministic});
  return kSuccess;
}

int cmd_surplus(const SurplusArgs& args, const GlobalOptions& global,
                std::ostream& out) {
  const io::Format format = format_from(global);
  const AssetSpec asset = asset_from(args.cost, args.life, false);
  const Age age = age_from(asset, args.age);
  const DiscountRate seller = rate_from("--seller-rate", args.seller_rate);
  const DiscountRate buyer = rate_from("--buyer-rate", args.buyer_rate);

  const io::SurplusReport report{
      asset,
      age,
      seller,
      buyer,
      intrinsic_value(asset, seller, age).amount,
      intrinsic_value(asset, buyer, age).amount,
      trade_surplus(asset, age, seller, buyer)};
  out << io::render(report, format, {"surplus", global.deterministic});
  return kSuccess;
}

int cmd_batch(const BatchArgs& args, const GlobalOptions& global,
              bool format_given, std::ostream& out, std::ostream& err) {
  io::Format format = io::Format::json;
  if (format_given) {
    format = format_from(global);
  } else if (std::filesystem::path(args.output).extension() == ".csv") {
    format = io::Format::csv;
  }

  std::vector<io::RegistryRow> rows;
  try {
    rows = io::load_registry(args.input);
  } catch (const io::RegistryError& e) {
    throw UsageError(std::string("--input: ") + e.what());
  }

  const io::BatchReport report = io::value_registry(rows);
  const std::string rendered =
      io::render(report, format, {"batch", global.deterministic});

  if (args.output.empty() || args.output == "-") {
    out << rendered;
  } else {
    std::ofstream file(args.output, std::ios::binary);
    if (!file) throw UsageError("--output '" + args.output + "' cannot be written");
    file << rendered;
    if (!file.flush()) {
      throw UsageError("--output '" + args.output + "' write failed");
    }
  }
  if (format == io::Format::csv) {
    for (const auto& e : report.errors) {
      err << "error: record " << e.id << ": " << e.reason << '\n';
    }
  }
  return report.errors.empty() ? kSuccess : kPartialFailure;
}

void add_asset_options(CLI::App* cmd, std::string& cost, std::string& life) {
  cmd->add_option("--cost", cost, "Replacement cost (positive)")->required();
  cmd->add_option("--life", life, "Lifetime in periods")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Intrinsic (time-value-of-money) asset valuation and depreciation",
               "depval"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(io::tool_version()));

  GlobalOptions global;
  auto* format_opt = app.add_option("--format", global.format,
                                    "Output format: table, csv or json");
  app.add_flag("--deterministic", global.deterministic,
               "Omit the timestamp from JSON reports");

  ValueArgs value;
  auto* value_cmd = app.add_subcommand("value", "Intrinsic value at a given age");
  add_asset_options(value_cmd, value.cost, value.life);
  value_cmd->add_option("--rate", value.rate, "Cost of capital (0.2 or 20%)")
      ->required();
  value_cmd->add_option("--age", value.age, "Asset age in periods (default 0)");
  value_cmd->add_flag("--detail", value.detail,
                      "Also print present and delayed costs");

  ScheduleArgs schedule;
  auto* schedule_cmd =
      app.add_subcommand("schedule", "Per-period depreciation schedule");
  add_asset_options(schedule_cmd, schedule.cost, schedule.life);
  schedule_cmd->add_option("--rate", schedule.rate,
                           "Cost of capital, required for intrinsic");
  schedule_cmd->add_option("--method", schedule.method,
                           "intrinsic, sl, ddb or syd")
      ->required();

  CompareArgs compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "Book values of several methods by period");
  add_asset_options(compare_cmd, compare.cost, compare.life);
  compare_cmd->add_option("--rate", compare.rate,
                          "Cost of capital for the intrinsic column");
  compare_cmd->add_option("--methods", compare.methods,
                          "Comma list of intrinsic, sl, ddb, syd")
      ->required();

  SweepArgs sweep;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Intrinsic value by age across rates");
  add_asset_options(sweep_cmd, sweep.cost, sweep.life);
  sweep_cmd->add_option("--rates", sweep.rates, "Comma list of rates")
      ->required();

  BatchArgs batch;
  auto* batch_cmd =
      app.add_subcommand("batch", "Value every asset in a CSV or JSON registry");
  batch_cmd->add_option("--input", batch.input, "Registry (.csv or .json)")
      ->required();
  batch_cmd->add_option("--output", batch.output,
                        "Report path (default: standard output)");

  SurplusArgs surplus;
  auto* surplus_cmd = app.add_subcommand(
      "surplus", "Buyer and seller valuations of the same aged asset");
  add_asset_options(surplus_cmd, surplus.cost, surplus.life);
  surplus_cmd->add_option("--age", surplus.age, "Asset age in periods")
      ->required();
  surplus_cmd->add_option("--seller-rate", surplus.seller_rate,
                          "Seller's cost of capital")
      ->required();
  surplus_cmd->add_option("--buyer-rate", surplus.buyer_rate,
                          "Buyer's cost of capital")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  try {
    if (*value_cmd) return cmd_value(value, global, out);
    if (*schedule_cmd) return cmd_schedule(schedule, global, out);
    if (*compare_cmd) return cmd_compare(compare, global, out);
    if (*sweep_cmd) return cmd_sweep(sweep, global, out);
    if (*surplus_cmd) return cmd_surplus(surplus, global, out);
    if (*batch_cmd) {
      return cmd_batch(batch, global, format_opt->count() > 0, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ValuationError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  err << "error: no command given\n";
  return kInvalidInput;
}

}  // namespace depval::cli
