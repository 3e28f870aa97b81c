// SPDX-License-Identifier: Apache-2.0
//
// Reference values of B(n) and B(k, n) for the two bundled curves, kept as
// the exact printed digit strings, and a checker that recomputes each cell.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "eds/apparition.hpp"

namespace eds {

enum class ReferenceTable { E1Abs, E1K, E2Abs, E2K };

/// Relative tolerance for a cell to count as reproduced.
inline constexpr double kTableRelTol = 1e-12;

std::optional<ReferenceTable> parse_reference_table(std::string_view name);
std::string_view reference_table_name(ReferenceTable which);
/// Curve file stem the table belongs to ("e1" or "e2").
std::string_view reference_table_curve(ReferenceTable which);

struct ReferenceCell {
  u64 n = 0;
  u64 k = 0;  // 0 for B(n)
  std::string_view expected;
};
std::vector<ReferenceCell> reference_cells(ReferenceTable which);

struct CellCheck {
  ReferenceCell cell;
  mpq_class computed;
  std::string rendered;
  double rel_error = 0;
  bool match = false;
};

struct TableCheck {
  ReferenceTable which;
  std::vector<CellCheck> cells;
  bool all_match() const;
  std::size_t mismatches() const;
};

/// `cache` must belong to the table's curve.
TableCheck check_reference_table(ReferenceTable which, ApparitionCache& cache);

/// |computed - expected| / |expected| with the expected digits read exactly.
double relative_error(const mpq_class& computed, std::string_view expected);

}  // namespace eds
