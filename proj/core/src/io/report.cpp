#include "depval/io/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <sstream>

#include <nlohmann/json.hpp>

#include "depval/io/money.hpp"

#ifndef DEPVAL_VERSION
#define DEPVAL_VERSION "0.0.0"
#endif

namespace depval::io {
namespace {

using Json = nlohmann::ordered_json;

std::string money(double amount) { return format_fixed(amount); }
double money_number(double amount) { return round_half_even(amount); }

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char text[32];
  std::strftime(text, sizeof text, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return text;
}

std::string wrap(const Envelope& envelope, Json payload) {
  Json doc;
  doc["tool_version"] = tool_version();
  doc["command"] = envelope.command;
  if (!envelope.deterministic) doc["generated_at"] = utc_timestamp();
  doc["payload"] = std::move(payload);
  return doc.dump(2) + "\n";
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  line += '\n';
  return line;
}

// Right-aligned plain-text table, two spaces between columns.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header)
      : rows_{std::move(header)} {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> widths;
    for (const auto& row : rows_) {
      widths.resize(std::max(widths.size(), row.size()), 0);
      for (std::size_t c = 0; c < row.size(); ++c) {
        widths[c] = std::max(widths[c], row[c].size());
      }
    }
    std::string out;
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) line += "  ";
        line.append(widths[c] - row[c].size(), ' ');
        line += row[c];
      }
      out += line + '\n';
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string period_label(double value) { return format_shortest(value); }

Json asset_json(const AssetSpec& asset) {
  Json j;
  j["cost"] = asset.cost();
  j["lifetime"] = asset.lifetime();
  return j;
}

Json rows_json(const Schedule& schedule) {
  Json rows = Json::array();
  for (const auto& row : schedule.rows) {
    Json r;
    r["period"] = row.period;
    r["age_end"] = row.age_end;
    r["expense"] = money_number(row.expense);
    r["book_value"] = money_number(row.book_value);
    rows.push_back(std::move(r));
  }
  return rows;
}

Json schedule_json(const Schedule& schedule) {
  Json j = asset_json(schedule.asset);
  j["method"] = to_token(schedule.method);
  j["rate"] = schedule.rate ? Json(schedule.rate->value()) : Json(nullptr);
  j["rows"] = rows_json(schedule);
  return j;
}

}  // namespace

std::optional<Format> parse_format(std::string_view token) noexcept {
  if (token == "table") return Format::table;
  if (token == "csv") return Format::csv;
  if (token == "json") return Format::json;
  return std::nullopt;
}

std::string_view tool_version() noexcept { return DEPVAL_VERSION; }

std::string render(const ValueReport& report, Format format,
                   const Envelope& envelope) {
  const auto optional_money = [](const std::optional<double>& v) {
    return v ? money(*v) : std::string("n/a");
  };
  switch (format) {
    case Format::table: {
      if (!report.detail) return money(report.value) + "\n";
      TextTable table({"quantity", "amount"});
      table.add({"intrinsic_value", money(report.value)});
      table.add({"present_cost", optional_money(report.present_cost)});
      table.add({"delayed_cost", optional_money(report.delayed_cost)});
      return table.str();
    }
    case Format::csv: {
      std::vector<std::string> header{"age", "value"};
      std::vector<std::string> row{period_label(report.age.value()),
                                   money(report.value)};
      if (report.detail) {
        header.insert(header.end(), {"present_cost", "delayed_cost"});
        row.push_back(optional_money(report.present_cost));
        row.push_back(optional_money(report.delayed_cost));
      }
      return csv_line(header) + csv_line(row);
    }
    case Format::json: {
      Json j = asset_json(report.asset);
      j["rate"] = report.rate.value();
      j["age"] = report.age.value();
      j["kind"] = to_string(ValuationKind::intrinsic_value);
      j["value"] = money_number(report.value);
      if (report.detail) {
        j["present_cost"] = report.present_cost
                                ? Json(money_number(*report.present_cost))
                                : Json(nullptr);
        j["delayed_cost"] = report.delayed_cost
                                ? Json(money_number(*report.delayed_cost))
                                : Json(nullptr);
      }
      return wrap(envelope, std::move(j));
    }
  }
  return {};
}

std::string render(const Schedule& schedule, Format format,
                   const Envelope& envelope) {
  switch (format) {
    case Format::table: {
      TextTable table({"period", "expense", "book_value"});
      for (const auto& row : schedule.rows) {
        table.add({std::to_string(row.period), money(row.expense),
                   money(row.book_value)});
      }
      return table.str();
    }
    case Format::csv: {
      std::string out = csv_line({"period", "expense", "book_value"});
      for (const auto& row : schedule.rows) {
        out += csv_line({std::to_string(row.period), money(row.expense),
                         money(row.book_value)});
      }
      return out;
    }
    case Format::json:
      return wrap(envelope, schedule_json(schedule));
  }
  return {};
}

std::string render(const ComparisonReport& report, Format format,
                   const Envelope& envelope) {
  std::vector<std::string> header{"period"};
  for (const auto& s : report.schedules) {
    header.emplace_back(to_token(s.method));
  }
  const std::size_t periods =
      report.schedules.empty() ? 0 : report.schedules.front().rows.size();

  if (format == Format::json) {
    Json j = asset_json(report.asset);
    std::optional<double> rate;
    for (const auto& s : report.schedules) {
      if (s.rate) rate = s.rate->value();
    }
    j["rate"] = rate ? Json(*rate) : Json(nullptr);
    j["methods"] = Json(std::vector<std::string>(header.begin() + 1,
                                                 header.end()));
    Json rows = Json::array();
    for (std::size_t i = 0; i < periods; ++i) {
      Json r;
      r["period"] = report.schedules.front().rows[i].period;
      for (const auto& s : report.schedules) {
        r[std::string(to_token(s.method))] =
            money_number(s.rows[i].book_value);
      }
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return wrap(envelope, std::move(j));
  }

  std::vector<std::vector<std::string>> body;
  for (std::size_t i = 0; i < periods; ++i) {
    std::vector<std::string> row{
        std::to_string(report.schedules.front().rows[i].period)};
    for (const auto& s : report.schedules) {
      row.push_back(money(s.rows[i].book_value));
    }
    body.push_back(std::move(row));
  }
  if (format == Format::csv) {
    std::string out = csv_line(header);
    for (const auto& row : body) out += csv_line(row);
    return out;
  }
  TextTable table(header);
  for (auto& row : body) table.add(std::move(row));
  return table.str();
}

std::string render(const SweepResult& result, Format format,
                   const Envelope& envelope) {
  const SweepReport& sweep = result.sweep;
  std::vector<std::string> header{"age"};
  for (const auto& rate : sweep.rates) {
    header.push_back(format_shortest(rate.value()));
  }
  const std::size_t ages = sweep.values.empty() ? 0 : sweep.values[0].size();

  if (format == Format::json) {
    Json j = asset_json(sweep.asset);
    Json rates = Json::array();
    for (const auto& rate : sweep.rates) rates.push_back(rate.value());
    j["rates"] = std::move(rates);
    Json rows = Json::array();
    for (std::size_t a = 0; a < ages; ++a) {
      Json values = Json::array();
      for (const auto& column : sweep.values) {
        values.push_back(money_number(column[a]));
      }
      Json r;
      r["age"] = a;
      r["values"] = std::move(values);
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    Json gaps = Json::array();
    for (double gap : result.chord_gaps) gaps.push_back(money_number(gap));
    j["chord_gap"] = std::move(gaps);
    return wrap(envelope, std::move(j));
  }

  std::vector<std::vector<std::string>> body;
  for (std::size_t a = 0; a < ages; ++a) {
    std::vector<std::string> row{std::to_string(a)};
    for (const auto& column : sweep.values) row.push_back(money(column[a]));
    body.push_back(std::move(row));
  }
  std::vector<std::string> gap_row{"chord_gap"};
  for (double gap : result.chord_gaps) gap_row.push_back(money(gap));
  body.push_back(std::move(gap_row));

  if (format == Format::csv) {
    std::string out = csv_line(header);
    for (const auto& row : body) out += csv_line(row);
    return out;
  }
  TextTable table(header);
  for (auto& row : body) table.add(std::move(row));
  return table.str();
}

std::string render(const SurplusReport& report, Format format,
                   const Envelope& envelope) {
  switch (format) {
    case Format::table: {
      TextTable table({"quantity", "amount"});
      table.add({"buyer_value", money(report.buyer_value)});
      table.add({"seller_value", money(report.seller_value)});
      table.add({"surplus", money(report.surplus)});
      return table.str();
    }
    case Format::csv:
      return csv_line({"age", "seller_rate", "buyer_rate", "seller_value",
                       "buyer_value", "surplus"}) +
             csv_line({period_label(report.age.value()),
                       format_shortest(report.seller_rate.value()),
                       format_shortest(report.buyer_rate.value()),
                       money(report.seller_value), money(report.buyer_value),
                       money(report.surplus)});
    case Format::json: {
      Json j = asset_json(report.asset);
      j["age"] = report.age.value();
      j["seller_rate"] = report.seller_rate.value();
      j["buyer_rate"] = report.buyer_rate.value();
      j["seller_value"] = money_number(report.seller_value);
      j["buyer_value"] = money_number(report.buyer_value);
      j["surplus"] = money_number(report.surplus);
      return wrap(envelope, std::move(j));
    }
  }
  return {};
}

std::string render(const BatchReport& report, Format format,
                   const Envelope& envelope) {
  switch (format) {
    case Format::json: {
      Json entries = Json::array();
      for (const auto& e : report.entries) {
        Json j;
        j["id"] = e.id;
        j["cost"] = e.schedule.asset.cost();
        j["lifetime"] = e.schedule.asset.lifetime();
        j["rate"] = e.rate;
        j["age"] = e.age;
        j["value"] = money_number(e.value);
        j["schedule"] = rows_json(e.schedule);
        entries.push_back(std::move(j));
      }
      Json errors = Json::array();
      for (const auto& err : report.errors) {
        Json j;
        j["id"] = err.id;
        j["reason"] = err.reason;
        errors.push_back(std::move(j));
      }
      Json payload;
      payload["entries"] = std::move(entries);
      payload["errors"] = std::move(errors);
      return wrap(envelope, std::move(payload));
    }
    case Format::csv: {
      std::string out = csv_line(
          {"id", "age", "value", "period", "expense", "book_value"});
      for (const auto& e : report.entries) {
        for (const auto& row : e.schedule.rows) {
          out += csv_line({e.id, period_label(e.age), money(e.value),
                           std::to_string(row.period), money(row.expense),
                           money(row.book_value)});
        }
      }
      return out;
    }
    case Format::table: {
      std::ostringstream out;
      for (const auto& e : report.entries) {
        out << e.id << ": value " << money(e.value) << " at age "
            << period_label(e.age) << '\n';
        out << render(e.schedule, Format::table, envelope) << '\n';
      }
      for (const auto& err : report.errors) {
        out << "error " << err.id << ": " << err.reason << '\n';
      }
      return out.str();
    }
  }
  return {};
}

}  // namespace depval::io
