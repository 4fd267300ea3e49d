#include "depval/io/registry.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "depval/io/money.hpp"

namespace depval::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

// Tracks ids across a registry so duplicates become row errors.
class RowCollector {
 public:
  void add(AssetRecord record, std::string_view where) {
    if (record.id.empty()) {
      rows_.emplace_back(RecordError{std::string(where), "id is empty"});
      return;
    }
    if (!seen_.insert(record.id).second) {
      rows_.emplace_back(RecordError{record.id, "duplicate id"});
      return;
    }
    if (std::floor(record.lifetime) != record.lifetime) {
      rows_.emplace_back(RecordError{
          record.id, "lifetime must be a whole number of periods"});
      return;
    }
    rows_.emplace_back(std::move(record));
  }

  void fail(std::string id, std::string reason) {
    if (!id.empty()) seen_.insert(id);
    rows_.emplace_back(RecordError{std::move(id), std::move(reason)});
  }

  std::vector<RegistryRow> take() { return std::move(rows_); }

 private:
  std::set<std::string, std::less<>> seen_;
  std::vector<RegistryRow> rows_;
};

}  // namespace

std::vector<RegistryRow> parse_registry_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) {
    throw RegistryError("registry is empty; expected header " +
                        std::string(kRegistryHeader));
  }
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
    line.erase(0, 3);
  }
  const auto header = split_fields(line);
  const std::vector<std::string_view> expected{"id", "cost", "lifetime",
                                               "rate", "age"};
  if (header != expected) {
    throw RegistryError("unexpected registry header '" +
                        std::string(trim(line)) + "'; expected " +
                        std::string(kRegistryHeader));
  }

  RowCollector rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    const std::string where = "line " + std::to_string(line_no);
    const std::string id(fields.front());
    if (fields.size() != expected.size()) {
      rows.fail(id.empty() ? where : id,
                "expected 5 fields, found " + std::to_string(fields.size()));
      continue;
    }
    const auto cost = parse_number(fields[1]);
    const auto lifetime = parse_number(fields[2]);
    const auto rate = parse_rate(fields[3]);
    const auto age = fields[4].empty() ? std::optional<double>(0.0)
                                       : parse_number(fields[4]);
    const auto report_bad = [&](std::string_view column, std::string_view raw) {
      rows.fail(id.empty() ? where : id, "unparseable " + std::string(column) +
                                             " '" + std::string(raw) + "'");
    };
    if (!cost) { report_bad("cost", fields[1]); continue; }
    if (!lifetime) { report_bad("lifetime", fields[2]); continue; }
    if (!rate) { report_bad("rate", fields[3]); continue; }
    if (!age) { report_bad("age", fields[4]); continue; }
    rows.add({id, *cost, *lifetime, *rate, *age}, where);
  }
  return rows.take();
}

std::vector<RegistryRow> parse_registry_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw RegistryError(std::string("invalid JSON registry: ") + e.what());
  }
  if (!doc.is_array()) {
    throw RegistryError("JSON registry must be an array of asset objects");
  }

  RowCollector rows;
  std::size_t index = 0;
  for (const auto& item : doc) {
    const std::string where = "entry " + std::to_string(index++);
    if (!item.is_object()) {
      rows.fail(where, "entry is not an object");
      continue;
    }
    std::string id;
    if (auto it = item.find("id"); it != item.end() && it->is_string()) {
      id = it->get<std::string>();
    }
    const std::string label = id.empty() ? where : id;

    const auto number = [&](const char* key,
                            bool as_rate) -> std::optional<double> {
      const auto it = item.find(key);
      if (it == item.end()) return std::nullopt;
      if (it->is_number()) return it->get<double>();
      if (as_rate && it->is_string()) return parse_rate(it->get<std::string>());
      return std::nullopt;
    };
    const auto cost = number("cost", false);
    const auto lifetime = number("lifetime", false);
    const auto rate = number("rate", true);
    const auto age = item.contains("age") && !item["age"].is_null()
                         ? number("age", false)
                         : std::optional<double>(0.0);
    if (!cost) { rows.fail(label, "missing or non-numeric cost"); continue; }
    if (!lifetime) { rows.fail(label, "missing or non-numeric lifetime"); continue; }
    if (!rate) { rows.fail(label, "missing or non-numeric rate"); continue; }
    if (!age) { rows.fail(label, "non-numeric age"); continue; }
    rows.add({id, *cost, *lifetime, *rate, *age}, where);
  }
  return rows.take();
}

std::vector<RegistryRow> load_registry(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw RegistryError("cannot open registry " + path.string());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  const std::string ext = path.extension().string();
  if (ext == ".csv" || ext == ".CSV") return parse_registry_csv(buffer.str());
  if (ext == ".json" || ext == ".JSON") return parse_registry_json(buffer.str());
  throw RegistryError("cannot infer registry format from extension '" + ext +
                      "' (expected .csv or .json)");
}

}  // namespace depval::io
