// SPDX-License-Identifier: Apache-2.0
//
// Reduction of a rational curve modulo a prime and arithmetic in E(F_p):
// point counting, traces of Frobenius, point orders, anomalous primes.
#pragma once

#include <cstdint>

#include "eds/arith.hpp"
#include "eds/ec_rational.hpp"

namespace eds {

struct PointFp {
  bool infinity = true;
  u64 x = 0;
  u64 y = 0;

  static PointFp at_infinity() { return {}; }
  static PointFp affine(u64 x, u64 y) { return {false, x, y}; }

  bool operator==(const PointFp& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
};

/// Long Weierstrass model with coefficients reduced into [0, p).
struct CurveFp {
  u64 p = 2;
  u64 a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
  /// p does not divide the discriminant of the parent curve.
  bool smooth = true;

  bool contains(const PointFp& pt) const;
  PointFp negate(const PointFp& pt) const;
  PointFp add(const PointFp& lhs, const PointFp& rhs) const;
  PointFp mul(const PointFp& pt, u64 n) const;
};

CurveFp reduce_curve(const CurveQ& curve, u64 p);

/// Image of P in E(F_p). Points whose x-denominator is divisible by p map to
/// the identity. Throws ErrorKind::BadReductionPrime when p divides disc.
PointFp reduce_point(const CurveQ& curve, const PointQ& pt, u64 p);

/// Below this prime the group order is counted by enumerating x.
inline constexpr u64 kNaiveCountLimit = 100000;

/// |E(F_p)| including the identity. Naive for p <= kNaiveCountLimit,
/// baby-step/giant-step above it.
u64 group_order(const CurveFp& curve);
u64 group_order_naive(const CurveFp& curve);
/// Mestre-style: orders of random points on the curve and on its quadratic
/// twist until one multiple remains in the Hasse interval. Needs p > 3.
/// Throws ErrorKind::AmbiguousOrder after `attempts` points of each kind.
u64 group_order_bsgs(const CurveFp& curve, u64 seed = 0x5eed, int attempts = 20);

/// a_p = p + 1 - |E(F_p)|.
std::int64_t trace(const CurveFp& curve);

/// Exact order of pt, obtained by stripping prime factors of the group order.
u64 point_order(const CurveFp& curve, const PointFp& pt);
/// Order of pt given any known multiple of it.
u64 order_from_multiple(const CurveFp& curve, const PointFp& pt, u64 multiple);

/// |E(F_p)| == p. Throws ErrorKind::BadReductionPrime when p divides disc.
bool is_anomalous(const CurveQ& curve, u64 p);

}  // namespace eds
