#include "depval/io/batch.hpp"

#include "depval/error.hpp"
#include "depval/valuation.hpp"

namespace depval::io {

BatchReport value_registry(std::span<const RegistryRow> rows) {
  BatchReport report;
  for (const auto& row : rows) {
    if (const auto* bad = std::get_if<RecordError>(&row)) {
      report.errors.push_back(*bad);
      continue;
    }
    const auto& record = std::get<AssetRecord>(row);
    try {
      const AssetSpec asset(record.cost, record.lifetime);
      const DiscountRate rate(record.rate);
      const Age age(record.age);
      const double value = intrinsic_value(asset, rate, age).amount;
      report.entries.push_back({record.id, record.rate, record.age, value,
                                build_schedule(asset, Method::intrinsic, rate)});
    } catch (const ValuationError& e) {
      report.errors.push_back(
          {record.id, std::string(to_string(e.code())) + ": " + e.what()});
    }
  }
  return report;
}

}  // namespace depval::io
