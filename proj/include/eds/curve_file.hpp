// SPDX-License-Identifier: Apache-2.0
//
// Curve files are `key = value` lines with `#` comments:
//
//   name = E1
//   a1 = 0 ... a6 = 0      decimal integers
//   px = 0, py = 0         "num" or "num/den", optional signs, no spaces
//   n_max = 1000           optional index cap
//   scan_bound_factor = 8  optional
#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "eds/apparition.hpp"
#include "eds/ec_rational.hpp"
#include "eds/eds_core.hpp"

namespace eds {

struct CurveFile {
  std::string name;
  mpz_class a1, a2, a3, a4, a6;
  mpq_class px, py;
  std::optional<u64> n_max;
  std::optional<u64> scan_bound_factor;
  std::string source;
  std::map<std::string, int> key_lines;

  int line_of(const std::string& key) const;
};

/// Syntax only; throws ErrorKind::Parse as "<source>:<line>: message".
CurveFile parse_curve_text(std::string_view text, std::string_view source = "<input>");
CurveFile read_curve_file(const std::filesystem::path& path);

/// A curve file turned into a sequence plus its apparition cache.
struct LoadedCurve {
  CurveFile file;
  std::unique_ptr<EdsSequence> sequence;
  std::unique_ptr<ApparitionCache> apparition;
};

/// Builds the curve and sequence; semantic failures (singular curve, point
/// off the curve, torsion point) are reported as Parse errors against the
/// offending line.
LoadedCurve open_curve(CurveFile file);
LoadedCurve open_curve_file(const std::filesystem::path& path);

}  // namespace eds
