// SPDX-License-Identifier: Apache-2.0
#include "eds/ec_finite.hpp"

#include <random>
#include <string>
#include <unordered_map>

#include "eds/error.hpp"

namespace eds {

namespace {

u64 addm(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return (s >= p || s < a) ? s - p : s;
}

u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

// 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2; the curve becomes
// (2y + a1 x + a3)^2 = rhs for odd p.
u64 completed_square(const CurveFp& c, u64 x) {
  const u64 p = c.p;
  u64 f = addm(mulmod(addm(mulmod(addm(x, c.a2, p), x, p), c.a4, p), x, p), c.a6, p);
  u64 l = addm(mulmod(c.a1, x, p), c.a3, p);
  return addm(mulmod(4 % p, f, p), mulmod(l, l, p), p);
}

void require_smooth(const CurveFp& c) {
  if (!c.smooth) throw Error(ErrorKind::BadReductionPrime, "p = " + std::to_string(c.p) + " divides the discriminant");
}

struct PointKey {
  u64 x, y;
  bool infinity;
  bool operator==(const PointKey&) const = default;
};

struct PointKeyHash {
  std::size_t operator()(const PointKey& k) const noexcept {
    return std::hash<u64>()(k.x * 0x9e3779b97f4a7c15ULL ^ (k.y + (k.infinity ? 1 : 0)));
  }
};

PointKey key_of(const PointFp& pt) { return {pt.infinity ? 0 : pt.x, pt.infinity ? 0 : pt.y, pt.infinity}; }

// Some M in [lo, hi] with [M]pt = O, which must exist.
u64 multiple_in_interval(const CurveFp& c, const PointFp& pt, u64 lo, u64 hi) {
  const u64 width = hi - lo + 1;
  const u64 m = isqrt(width) + 1;
  std::unordered_map<PointKey, u64, PointKeyHash> baby;
  baby.reserve(m * 2);
  PointFp step = PointFp::at_infinity();
  for (u64 j = 0; j < m; ++j) {
    baby.emplace(key_of(c.negate(step)), j);
    step = c.add(step, pt);
  }
  const PointFp giant = step;  // [m]pt
  PointFp r = c.mul(pt, lo);
  for (u64 i = 0; i <= m; ++i) {
    auto it = baby.find(key_of(r));
    if (it != baby.end()) {
      u64 cand = lo + i * m + it->second;
      if (cand >= 1 && cand <= hi) return cand;
    }
    r = c.add(r, giant);
  }
  throw Error(ErrorKind::Integrity, "no multiple of the point order in the Hasse interval (p = " + std::to_string(c.p) + ")");
}

PointFp random_point(const CurveFp& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, c.p - 1);
  for (;;) {
    u64 x = dist(rng);
    u64 rhs = completed_square(c, x);
    if (legendre(rhs, c.p) < 0) continue;
    u64 s = sqrtmod(rhs, c.p);
    if (rng() & 1) s = subm(0, s, c.p);
    u64 y = mulmod(subm(s, addm(mulmod(c.a1, x, c.p), c.a3, c.p), c.p), invmod(2, c.p), c.p);
    return PointFp::affine(x, y);
  }
}

// y^2 = x^3 + A x + B isomorphic to c (p > 3), and its quadratic twist.
std::pair<CurveFp, CurveFp> short_model_and_twist(const CurveFp& c) {
  const u64 p = c.p;
  u64 b2 = addm(mulmod(c.a1, c.a1, p), mulmod(4, c.a2, p), p);
  u64 b4 = addm(mulmod(2, c.a4, p), mulmod(c.a1, c.a3, p), p);
  u64 b6 = addm(mulmod(c.a3, c.a3, p), mulmod(4, c.a6, p), p);
  u64 c4 = subm(mulmod(b2, b2, p), mulmod(24, b4, p), p);
  u64 c6 = subm(mulmod(36, mulmod(b2, b4, p), p), addm(mulmod(mulmod(b2, b2, p), b2, p), mulmod(216, b6, p), p), p);
  u64 A = subm(0, mulmod(27, c4, p), p);
  u64 B = subm(0, mulmod(54, c6, p), p);
  u64 u = 2;
  while (legendre(u, p) != -1) ++u;
  u64 u2 = mulmod(u, u, p);
  CurveFp s{p, 0, 0, 0, A, B, true};
  CurveFp t{p, 0, 0, 0, mulmod(A, u2, p), mulmod(B, mulmod(u2, u, p), p), true};
  return {s, t};
}

}  // namespace

bool CurveFp::contains(const PointFp& pt) const {
  if (pt.infinity) return true;
  if (pt.x >= p || pt.y >= p) return false;
  u64 lhs = addm(mulmod(pt.y, pt.y, p), addm(mulmod(mulmod(a1, pt.x, p), pt.y, p), mulmod(a3, pt.y, p), p), p);
  u64 rhs = addm(mulmod(addm(mulmod(addm(pt.x, a2, p), pt.x, p), a4, p), pt.x, p), a6, p);
  return lhs == rhs;
}

PointFp CurveFp::negate(const PointFp& pt) const {
  if (pt.infinity) return pt;
  return PointFp::affine(pt.x, subm(0, addm(pt.y, addm(mulmod(a1, pt.x, p), a3, p), p), p));
}

PointFp CurveFp::add(const PointFp& P, const PointFp& Q) const {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  u64 lambda;
  if (P.x == Q.x) {
    u64 s = addm(addm(P.y, Q.y, p), addm(mulmod(a1, Q.x, p), a3, p), p);
    if (s == 0) return PointFp::at_infinity();
    u64 num = addm(addm(mulmod(3 % p, mulmod(P.x, P.x, p), p), mulmod(mulmod(2 % p, a2, p), P.x, p), p), a4, p);
    num = subm(num, mulmod(a1, P.y, p), p);
    u64 den = addm(addm(mulmod(2 % p, P.y, p), mulmod(a1, P.x, p), p), a3, p);
    lambda = mulmod(num, invmod(den, p), p);
  } else {
    lambda = mulmod(subm(Q.y, P.y, p), invmod(subm(Q.x, P.x, p), p), p);
  }
  u64 nu = subm(P.y, mulmod(lambda, P.x, p), p);
  u64 x3 = subm(subm(subm(addm(mulmod(lambda, lambda, p), mulmod(a1, lambda, p), p), a2, p), P.x, p), Q.x, p);
  u64 y3 = subm(subm(0, addm(mulmod(addm(lambda, a1, p), x3, p), nu, p), p), a3, p);
  return PointFp::affine(x3, y3);
}

PointFp CurveFp::mul(const PointFp& pt, u64 n) const {
  PointFp acc = PointFp::at_infinity();
  if (n == 0 || pt.infinity) return acc;
  for (int bit = 63 - __builtin_clzll(n); bit >= 0; --bit) {
    acc = add(acc, acc);
    if ((n >> bit) & 1) acc = add(acc, pt);
  }
  return acc;
}

CurveFp reduce_curve(const CurveQ& c, u64 p) {
  CurveFp r;
  r.p = p;
  r.a1 = mod_u64(c.a1(), p);
  r.a2 = mod_u64(c.a2(), p);
  r.a3 = mod_u64(c.a3(), p);
  r.a4 = mod_u64(c.a4(), p);
  r.a6 = mod_u64(c.a6(), p);
  r.smooth = mod_u64(c.disc(), p) != 0;
  return r;
}

PointFp reduce_point(const CurveQ& c, const PointQ& pt, u64 p) {
  if (mod_u64(c.disc(), p) == 0)
    throw Error(ErrorKind::BadReductionPrime, "p = " + std::to_string(p) + " divides the discriminant");
  if (pt.infinity) return PointFp::at_infinity();
  u64 xden = mod_u64(pt.x.get_den(), p);
  if (xden == 0) return PointFp::at_infinity();
  u64 yden = mod_u64(pt.y.get_den(), p);
  u64 x = mulmod(mod_u64(pt.x.get_num(), p), invmod(xden, p), p);
  u64 y = mulmod(mod_u64(pt.y.get_num(), p), invmod(yden, p), p);
  return PointFp::affine(x, y);
}

u64 group_order_naive(const CurveFp& c) {
  require_smooth(c);
  const u64 p = c.p;
  if (p <= 3) {
    u64 count = 1;
    for (u64 x = 0; x < p; ++x)
      for (u64 y = 0; y < p; ++y)
        if (c.contains(PointFp::affine(x, y))) ++count;
    return count;
  }
  std::vector<bool> square(p, false);
  for (u64 i = 0; i <= p / 2; ++i) square[mulmod(i, i, p)] = true;
  u64 count = 1;
  for (u64 x = 0; x < p; ++x) {
    u64 r = completed_square(c, x);
    if (r == 0)
      count += 1;
    else if (square[r])
      count += 2;
  }
  return count;
}

u64 group_order_bsgs(const CurveFp& c, u64 seed, int attempts) {
  require_smooth(c);
  const u64 p = c.p;
  if (p <= 3) throw Error(ErrorKind::InvalidArgument, "baby-step/giant-step counting needs p > 3");
  const u64 radius = isqrt(4 * p);  // floor(2 sqrt p)
  const u64 lo = p + 1 - radius;
  const u64 hi = p + 1 + radius;
  const u64 twist_sum = 2 * p + 2;
  auto [model, twist] = short_model_and_twist(c);
  std::mt19937_64 rng(seed ^ p);
  u64 exp_curve = 1;
  u64 exp_twist = 1;
  for (int round = 0; round < attempts; ++round) {
    PointFp q = random_point(model, rng);
    exp_curve = checked_lcm(exp_curve, order_from_multiple(model, q, multiple_in_interval(model, q, lo, hi)));
    PointFp t = random_point(twist, rng);
    u64 ot = order_from_multiple(twist, t, multiple_in_interval(twist, t, twist_sum - hi, twist_sum - lo));
    exp_twist = checked_lcm(exp_twist, ot);

    u64 found = 0;
    int matches = 0;
    for (u64 n = (lo + exp_curve - 1) / exp_curve * exp_curve; n <= hi; n += exp_curve) {
      if ((twist_sum - n) % exp_twist == 0) {
        found = n;
        ++matches;
      }
    }
    if (matches == 1) return found;
  }
  throw Error(ErrorKind::AmbiguousOrder, "group order mod " + std::to_string(p) + " not determined after " +
                                             std::to_string(attempts) + " random points");
}

u64 group_order(const CurveFp& c) {
  return c.p <= kNaiveCountLimit ? group_order_naive(c) : group_order_bsgs(c);
}

std::int64_t trace(const CurveFp& c) {
  return static_cast<std::int64_t>(c.p + 1) - static_cast<std::int64_t>(group_order(c));
}

u64 order_from_multiple(const CurveFp& c, const PointFp& pt, u64 multiple) {
  if (!c.mul(pt, multiple).infinity)
    throw Error(ErrorKind::Integrity, "claimed multiple does not annihilate the point");
  u64 ord = multiple;
  for (const auto& [q, e] : factor(multiple)) {
    for (unsigned i = 0; i < e; ++i) {
      if (c.mul(pt, ord / q).infinity)
        ord /= q;
      else
        break;
    }
  }
  return ord;
}

u64 point_order(const CurveFp& c, const PointFp& pt) {
  require_smooth(c);
  if (pt.infinity) return 1;
  return order_from_multiple(c, pt, group_order(c));
}

bool is_anomalous(const CurveQ& curve, u64 p) {
  CurveFp c = reduce_curve(curve, p);
  require_smooth(c);
  return group_order(c) == p;
}

}  // namespace eds
