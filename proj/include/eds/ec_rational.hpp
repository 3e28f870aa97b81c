// SPDX-License-Identifier: Apache-2.0
//
// Exact chord-and-tangent arithmetic on a long Weierstrass model
//   y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// with integral coefficients. Minimality of the model is assumed, not
// checked: every sequence-level result downstream is only meaningful for a
// minimal model.
#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "eds/arith.hpp"

namespace eds {

class CurveQ {
 public:
  /// Throws ErrorKind::SingularCurve when the discriminant vanishes.
  CurveQ(mpz_class a1, mpz_class a2, mpz_class a3, mpz_class a4, mpz_class a6);

  const mpz_class& a1() const { return a1_; }
  const mpz_class& a2() const { return a2_; }
  const mpz_class& a3() const { return a3_; }
  const mpz_class& a4() const { return a4_; }
  const mpz_class& a6() const { return a6_; }
  const mpz_class& b2() const { return b2_; }
  const mpz_class& b4() const { return b4_; }
  const mpz_class& b6() const { return b6_; }
  const mpz_class& b8() const { return b8_; }
  const mpz_class& disc() const { return disc_; }

  bool operator==(const CurveQ& other) const;

 private:
  mpz_class a1_, a2_, a3_, a4_, a6_;
  mpz_class b2_, b4_, b6_, b8_, disc_;
};

/// Either the point at infinity or an affine point with canonical rationals.
struct PointQ {
  bool infinity = true;
  mpq_class x;
  mpq_class y;

  static PointQ at_infinity() { return {}; }
  static PointQ affine(mpq_class x, mpq_class y);

  bool operator==(const PointQ& other) const;
  std::string to_string() const;
};

bool on_curve(const CurveQ& curve, const PointQ& pt);
PointQ negate(const CurveQ& curve, const PointQ& pt);
PointQ add(const CurveQ& curve, const PointQ& lhs, const PointQ& rhs);
PointQ dbl(const CurveQ& curve, const PointQ& pt);
/// [n]P by left-to-right double-and-add.
PointQ scalar_mul(const CurveQ& curve, const PointQ& pt, u64 n);

/// Rational torsion has order at most 12, so checking [m]P for m <= 12
/// decides whether P is torsion.
bool is_torsion(const CurveQ& curve, const PointQ& pt);

/// Primes p <= bound dividing the discriminant, by trial division of disc
/// only (the discriminant itself is never factored).
std::vector<u64> bad_primes_upto(const CurveQ& curve, u64 bound);

}  // namespace eds
