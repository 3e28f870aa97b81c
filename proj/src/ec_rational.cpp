// SPDX-License-Identifier: Apache-2.0
#include "eds/ec_rational.hpp"

#include "eds/error.hpp"

namespace eds {

CurveQ::CurveQ(mpz_class a1, mpz_class a2, mpz_class a3, mpz_class a4, mpz_class a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
  b2_ = a1_ * a1_ + 4 * a2_;
  b4_ = 2 * a4_ + a1_ * a3_;
  b6_ = a3_ * a3_ + 4 * a6_;
  b8_ = a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
  disc_ = -b2_ * b2_ * b8_ - 8 * b4_ * b4_ * b4_ - 27 * b6_ * b6_ + 9 * b2_ * b4_ * b6_;
  if (disc_ == 0) throw Error(ErrorKind::SingularCurve, "discriminant is zero");
}

bool CurveQ::operator==(const CurveQ& o) const {
  return a1_ == o.a1_ && a2_ == o.a2_ && a3_ == o.a3_ && a4_ == o.a4_ && a6_ == o.a6_;
}

PointQ PointQ::affine(mpq_class x, mpq_class y) {
  x.canonicalize();
  y.canonicalize();
  return PointQ{false, std::move(x), std::move(y)};
}

bool PointQ::operator==(const PointQ& o) const {
  if (infinity || o.infinity) return infinity == o.infinity;
  return x == o.x && y == o.y;
}

std::string PointQ::to_string() const {
  if (infinity) return "O";
  return "(" + x.get_str() + ", " + y.get_str() + ")";
}

bool on_curve(const CurveQ& c, const PointQ& pt) {
  if (pt.infinity) return true;
  const mpq_class& x = pt.x;
  const mpq_class& y = pt.y;
  mpq_class lhs = y * y + c.a1() * x * y + c.a3() * y;
  mpq_class rhs = ((x + c.a2()) * x + c.a4()) * x + c.a6();
  return lhs == rhs;
}

PointQ negate(const CurveQ& c, const PointQ& pt) {
  if (pt.infinity) return pt;
  return PointQ::affine(pt.x, -pt.y - c.a1() * pt.x - c.a3());
}

namespace {

PointQ from_slope(const CurveQ& c, const PointQ& p, const mpq_class& x2, const mpq_class& lambda) {
  mpq_class nu = p.y - lambda * p.x;
  mpq_class x3 = lambda * lambda + c.a1() * lambda - c.a2() - p.x - x2;
  mpq_class y3 = -(lambda + c.a1()) * x3 - nu - c.a3();
  return PointQ::affine(std::move(x3), std::move(y3));
}

}  // namespace

PointQ dbl(const CurveQ& c, const PointQ& p) {
  if (p.infinity) return p;
  mpq_class denom = 2 * p.y + c.a1() * p.x + c.a3();
  if (denom == 0) return PointQ::at_infinity();
  mpq_class lambda = (3 * p.x * p.x + 2 * c.a2() * p.x + c.a4() - c.a1() * p.y) / denom;
  return from_slope(c, p, p.x, lambda);
}

PointQ add(const CurveQ& c, const PointQ& p, const PointQ& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  if (p.x == q.x) {
    if (p.y + q.y + c.a1() * q.x + c.a3() == 0) return PointQ::at_infinity();
    return dbl(c, p);
  }
  mpq_class lambda = (q.y - p.y) / (q.x - p.x);
  return from_slope(c, p, q.x, lambda);
}

PointQ scalar_mul(const CurveQ& c, const PointQ& p, u64 n) {
  PointQ acc = PointQ::at_infinity();
  if (n == 0 || p.infinity) return acc;
  int top = 63 - __builtin_clzll(n);
  for (int bit = top; bit >= 0; --bit) {
    acc = dbl(c, acc);
    if ((n >> bit) & 1) acc = add(c, acc, p);
  }
  return acc;
}

bool is_torsion(const CurveQ& c, const PointQ& p) {
  PointQ acc = p;
  for (int m = 1; m <= 12; ++m) {
    if (acc.infinity) return true;
    acc = add(c, acc, p);
  }
  return false;
}

std::vector<u64> bad_primes_upto(const CurveQ& c, u64 bound) {
  std::vector<u64> out;
  for (u64 p : primes_upto(bound))
    if (mpz_divisible_ui_p(c.disc().get_mpz_t(), p)) out.push_back(p);
  return out;
}

}  // namespace eds
