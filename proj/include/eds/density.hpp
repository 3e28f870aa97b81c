// SPDX-License-Identifier: Apache-2.0
//
// Moebius sieve, the partial sums
//     B(n)    = sum_{d <= n} |mu(d)| / l(d)
//     B(k, n) = sum_{d <= n}  mu(d)  / l(kd)
// as exact rationals, empirical class densities and the anomalous-prime
// census. Whether B(n) converges cannot be decided by computation; these are
// finite partial sums only.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "eds/apparition.hpp"
#include "eds/arith.hpp"

namespace eds {

class MobiusTable {
 public:
  explicit MobiusTable(u64 limit);

  u64 limit() const { return values_.size() - 1; }
  int operator()(u64 n) const { return values_.at(n); }

 private:
  std::vector<std::int8_t> values_;
};

/// Linear sieve for mu on [1, limit].
MobiusTable mobius_sieve(u64 limit);

/// Correctly rounded (half-to-even) decimal with `significant` significant
/// digits in positional notation; trailing zeros are kept.
std::string render_decimal(const mpq_class& value, int significant = 15);

/// "num/den" with den >= 1 always written.
std::string exact_string(const mpq_class& value);

enum class ReportKind { AbsSum, SignedSum, Empirical, AnomalousCensus };
std::string to_string(ReportKind kind);

struct ReportRow {
  u64 index = 0;
  mpq_class exact;
  std::string rendered;
};

struct DensityReport {
  std::string curve;
  ReportKind kind = ReportKind::AbsSum;
  std::map<std::string, std::string> params;
  mpq_class exact_value;
  std::string rendered;
  std::vector<ReportRow> rows;
  // Anomalous census only.
  std::vector<u64> anomalous_primes;
  std::vector<u64> skipped_primes;
};

/// Rows d = 1..n hold B(d).
DensityReport partial_abs_sum(ApparitionCache& cache, u64 n);
/// Rows d = 1..n hold B(k, d).
DensityReport partial_density(ApparitionCache& cache, u64 k, u64 n);
/// #(A_k n [1, x]) / x, counted structurally (0 when A_k is empty).
DensityReport empirical_density(ApparitionCache& cache, u64 k, u64 x);
/// Anomalous good primes p <= x; bad primes are skipped and listed.
DensityReport anomalous_scan(const EdsSequence& seq, u64 x);

}  // namespace eds
