#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace depval::io {

/// One asset row from a registry file. Numeric syntax is checked while
/// parsing; the domain ranges are checked when the record is valued.
struct AssetRecord {
  std::string id;
  double cost = 0.0;
  double lifetime = 0.0;
  double rate = 0.0;
  double age = 0.0;
};

struct RecordError {
  std::string id;
  std::string reason;
};

using RegistryRow = std::variant<AssetRecord, RecordError>;

/// The file as a whole could not be read or has the wrong structure.
class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kRegistryHeader = "id,cost,lifetime,rate,age";

/// Header `id,cost,lifetime,rate,age` (age may be left empty). Rows are
/// returned in input order; a bad row becomes a RecordError.
std::vector<RegistryRow> parse_registry_csv(std::string_view text);

/// A JSON array of objects with the same keys as the CSV header.
std::vector<RegistryRow> parse_registry_json(std::string_view text);

/// Dispatches on the extension (.csv or .json).
std::vector<RegistryRow> load_registry(const std::filesystem::path& path);

}  // namespace depval::io
