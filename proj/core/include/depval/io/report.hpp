#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "depval/io/registry.hpp"
#include "depval/schedule.hpp"
#include "depval/types.hpp"

namespace depval::io {

enum class Format { table, csv, json };

std::optional<Format> parse_format(std::string_view token) noexcept;

/// Version string written into every JSON envelope.
std::string_view tool_version() noexcept;

/// Envelope metadata. With `deterministic` set the generated_at timestamp
/// is omitted so identical invocations produce identical bytes.
struct Envelope {
  std::string command;
  bool deterministic = false;
};

struct ValueReport {
  AssetSpec asset;
  DiscountRate rate;
  Age age;
  double value;
  bool detail = false;
  // Absent at a zero rate, where both perpetuities diverge.
  std::optional<double> present_cost;
  std::optional<double> delayed_cost;
};

struct SweepResult {
  SweepReport sweep;
  std::vector<double> chord_gaps;  // one per rate
};

struct SurplusReport {
  AssetSpec asset;
  Age age;
  DiscountRate seller_rate;
  DiscountRate buyer_rate;
  double seller_value;
  double buyer_value;
  double surplus;
};

struct BatchEntry {
  std::string id;
  double rate;
  double age;
  double value;
  Schedule schedule;
};

struct BatchReport {
  std::vector<BatchEntry> entries;
  std::vector<RecordError> errors;
};

// Each renderer returns the complete output, ending in '\n'. CSV always has
// a header row; money is printed with four decimals, half-even.
std::string render(const ValueReport& report, Format format,
                   const Envelope& envelope);
std::string render(const Schedule& schedule, Format format,
                   const Envelope& envelope);
std::string render(const ComparisonReport& report, Format format,
                   const Envelope& envelope);
std::string render(const SweepResult& result, Format format,
                   const Envelope& envelope);
std::string render(const SurplusReport& report, Format format,
                   const Envelope& envelope);
std::string render(const BatchReport& report, Format format,
                   const Envelope& envelope);

}  // namespace depval::io
