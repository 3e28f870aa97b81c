// SPDX-License-Identifier: Apache-2.0
#include "eds/report_io.hpp"

#include <json.hpp>

namespace eds {

namespace {

std::string join(const std::vector<u64>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(values[i]);
  }
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

}  // namespace

void write_report_csv(std::ostream& out, const DensityReport& report) {
  if (report.kind == ReportKind::AnomalousCensus) {
    write_row(out, {"field", "value"});
    write_row(out, {"count", report.rendered});
    write_row(out, {"anomalous", join(report.anomalous_primes)});
    write_row(out, {"skipped", join(report.skipped_primes)});
    return;
  }
  write_row(out, {"n", "value"});
  for (const auto& row : report.rows) write_row(out, {std::to_string(row.index), row.rendered});
}

void write_report_json(std::ostream& out, const DensityReport& report) {
  nlohmann::ordered_json j;
  j["curve"] = report.curve;
  j["kind"] = to_string(report.kind);
  j["params"] = report.params;
  j["value"] = {{"exact", exact_string(report.exact_value)}, {"decimal", report.rendered}};
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows)
    rows.push_back({{"index", row.index}, {"exact", exact_string(row.exact)}, {"decimal", row.rendered}});
  j["rows"] = std::move(rows);
  if (report.kind == ReportKind::AnomalousCensus) {
    j["anomalous"] = report.anomalous_primes;
    j["skipped"] = report.skipped_primes;
  }
  out << j.dump(2) << '\n';
}

void write_report(std::ostream& out, const DensityReport& report, OutputFormat format) {
  if (format == OutputFormat::Json)
    write_report_json(out, report);
  else
    write_report_csv(out, report);
}

void write_table_csv(std::ostream& out, const Table& table) {
  write_row(out, table.header);
  for (const auto& row : table.rows) write_row(out, row);
}

void write_table_json(std::ostream& out, const Table& table) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.header.size() && i < row.size(); ++i) obj[table.header[i]] = row[i];
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

void write_table(std::ostream& out, const Table& table, OutputFormat format) {
  if (format == OutputFormat::Json)
    write_table_json(out, table);
  else
    write_table_csv(out, table);
}

}  // namespace eds
