// SPDX-License-Identifier: Apache-2.0
//
// The elliptic divisibility sequence attached to (E, P).
//
// Terms are the division-polynomial values W_n = D_1^(n^2) psi_n(P), where
// x(P) = a / D_1^2. They satisfy
//
//     x([n]P) = A_n / W_n^2,   A_n = a V_n^2 - V_(n-1) V_(n+1),  W_n = D_1 V_n,
//
// and are produced by the bilinear recurrence
//
//     V_(2m+1) = V_(m+2) V_m^3 - V_(m-1) V_(m+1)^3
//     V_(2m)   = (V_(m+2) V_(m-1)^2 - V_(m-2) V_(m+1)^2) V_m / V_2.
//
// At primes where P has nonsingular reduction W_n and the denominator root of
// x([n]P) have the same valuation; at primes where P meets the singular
// point of the reduction, W_n carries extra powers of p (this is the case
// for E2 at 3 and 43). denominator_root() exposes the lowest-terms
// denominator for comparison.
#pragma once

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "eds/arith.hpp"
#include "eds/ec_rational.hpp"

namespace eds {

class EdsSequence {
 public:
  static constexpr u64 kDefaultIndexCap = 1000;

  /// Throws NotOnCurve, TorsionPoint, or Integrity (x(P) denominator not a
  /// square, which cannot happen on an integral model).
  EdsSequence(CurveQ curve, PointQ base, u64 index_cap = kDefaultIndexCap, std::string label = {});

  EdsSequence(const EdsSequence&) = delete;
  EdsSequence& operator=(const EdsSequence&) = delete;

  const CurveQ& curve() const { return curve_; }
  const PointQ& base_point() const { return base_; }
  const std::string& label() const { return label_; }
  u64 index_cap() const { return index_cap_; }
  /// D_1, the square root of the denominator of x(P).
  const mpz_class& normalizer() const { return d_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// |W_n|, 1 <= n <= index_cap.
  mpz_class term(u64 n) const;
  /// W_n with its sign.
  mpz_class signed_term(u64 n) const;
  std::vector<mpz_class> terms_upto(u64 count) const;
  /// A_n with x([n]P) = A_n / W_n^2 (not necessarily in lowest terms).
  mpz_class numerator(u64 n) const;

  /// gcd(n, W_n). Above the index cap it is assembled from valuations.
  u64 g(u64 n) const;
  /// Exact p-adic valuation of W_n, n <= index_cap.
  unsigned valuation(u64 p, u64 n) const;
  /// nu_p(W_n) >= e for any n, using residues mod a power of p when W_n has
  /// not been computed exactly.
  bool valuation_at_least(u64 p, unsigned e, u64 n) const;

  /// log W_n / n^2, which tends to the canonical height of P.
  double height_estimate(u64 n) const;

  /// Square root of the lowest-terms denominator of x([n]P), from the exact
  /// group law. Divides W_n.
  mpz_class denominator_root(u64 n) const;

  /// Computed terms (n, |W_n|) for persistence.
  std::vector<std::pair<u64, mpz_class>> computed_terms() const;
  /// Seeds a term from an external cache. Seeds are served by term() and
  /// checked against the recurrence once it reaches that index.
  void import_term(u64 n, mpz_class value);

 private:
  void check_index(u64 n) const;
  void ensure(u64 n) const;
  bool residue_divisible(u64 p, unsigned need, u64 n) const;

  CurveQ curve_;
  PointQ base_;
  u64 index_cap_;
  std::string label_;
  mpz_class a_;  // numerator of x(P)
  mpz_class d_;
  std::vector<std::string> warnings_;

  mutable std::shared_mutex mutex_;
  mutable std::vector<mpz_class> v_;  // V_0 .. V_k
  std::map<u64, mpz_class> imported_;
};

}  // namespace eds
