// SPDX-License-Identifier: Apache-2.0
//
// CSV and JSON emission. CSV is comma-separated with a header row and LF line
// endings; JSON carries each exact value as "num/den" next to its decimal.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "eds/density.hpp"

namespace eds {

enum class OutputFormat { Csv, Json };

/// Header `n,value`, one row per report row. The anomalous census instead
/// writes `field,value` rows: count, anomalous, skipped (lists joined by ';').
void write_report_csv(std::ostream& out, const DensityReport& report);
void write_report_json(std::ostream& out, const DensityReport& report);
void write_report(std::ostream& out, const DensityReport& report, OutputFormat format);

/// Generic table: header row then rows, all cells written bare.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
void write_table_csv(std::ostream& out, const Table& table);
/// Array of objects keyed by the header names.
void write_table_json(std::ostream& out, const Table& table);
void write_table(std::ostream& out, const Table& table, OutputFormat format);

}  // namespace eds
