// SPDX-License-Identifier: Apache-2.0
//
// Rank of apparition r_n = min{r >= 1 : n | W_r} and l(n) = lcm(n, r_n).
//
// A prime is "regular" when E has good reduction there and P is integral
// there. At regular primes the indices r with p^e | W_r are exactly the
// multiples of r_(p^e), r_p is the order of P mod p, and
// r_(p^e) / r_(p^(e-1)) divides p. Every other prime is handled by scanning
// valuations directly, since the multiples structure can fail there (for E2
// at 3, every W_r with r >= 2 is divisible by 3^3).
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "eds/arith.hpp"
#include "eds/eds_core.hpp"

namespace eds {

class ApparitionCache {
 public:
  static constexpr u64 kDefaultScanBoundFactor = 8;

  explicit ApparitionCache(const EdsSequence& sequence, u64 scan_bound_factor = kDefaultScanBoundFactor);

  ApparitionCache(const ApparitionCache&) = delete;
  ApparitionCache& operator=(const ApparitionCache&) = delete;

  const EdsSequence& sequence() const { return seq_; }
  u64 scan_bound_factor() const { return scan_bound_factor_; }

  bool is_regular(u64 p) const;
  /// Largest index the irregular-prime scan visits for p^e.
  u64 scan_bound(u64 p, unsigned e) const;

  u64 rank_prime(u64 p);
  u64 rank_prime_power(u64 p, unsigned e);
  u64 rank(u64 n);
  u64 l(u64 n);

  struct QGamma {
    u64 count = 0;
    std::vector<u64> members;
  };
  /// Primes p <= x with r_p <= p^gamma.
  QGamma q_gamma(u64 x, double gamma);

  std::vector<std::pair<u64, u64>> cached_ranks() const;
  void import_rank(u64 n, u64 r);

 private:
  bool lookup(u64 n, u64& r) const;
  void store(u64 n, u64 r);
  u64 scan_prime_power(u64 p, unsigned e, u64 start);

  const EdsSequence& seq_;
  u64 scan_bound_factor_;
  mutable std::mutex mutex_;
  std::map<u64, u64> ranks_;
};

}  // namespace eds
