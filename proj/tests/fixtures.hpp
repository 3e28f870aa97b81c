// Shared curves and brute-force oracles. Nothing here calls the code paths
// it is used to check.
#pragma once

#include <memory>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "eds/apparition.hpp"
#include "eds/ec_rational.hpp"
#include "eds/eds_core.hpp"

namespace fx {

using eds::u64;

inline eds::CurveQ e1_curve() { return eds::CurveQ(0, 0, 1, -1, 0); }
inline eds::PointQ e1_point() { return eds::PointQ::affine(0, 0); }

inline eds::CurveQ e2_curve() {
  return eds::CurveQ(0, 1, 1, mpz_class("-1291874622406186"), mpz_class("17872226251073822113702"));
}
inline eds::PointQ e2_point() { return eds::PointQ::affine(20751503, 1073344); }

// One sequence and rank cache per curve for the whole test run.
inline eds::EdsSequence& e1() {
  static eds::EdsSequence s(e1_curve(), e1_point(), 2000, "E1");
  return s;
}
inline eds::ApparitionCache& e1_ranks() {
  static eds::ApparitionCache c(e1());
  return c;
}
inline eds::EdsSequence& e2() {
  static eds::EdsSequence s(e2_curve(), e2_point(), 200, "E2");
  return s;
}
inline eds::ApparitionCache& e2_ranks() {
  static eds::ApparitionCache c(e2());
  return c;
}

// Reference terms: the first twenty of E1 and the first five of E2.
inline const std::vector<long> kE1Terms = {1,  1,  1,  1,   2,   1,  3,    5,    7,    4,
                                           23, 29, 59, 129, 314, 65, 1529, 3689, 8209, 16264};
inline const std::vector<const char*> kE2Terms = {
    "1", "2146689", "286883381041833542301", "60768120452650698495048133538894517",
    "23611096745951856413517153888476821489410524330413499766653328"};

// |E(F_p)| by testing every pair (x, y); p is small.
inline u64 brute_count(const eds::CurveQ& c, u64 p) {
  auto m = [p](const mpz_class& v) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
  };
  const u64 a1 = m(c.a1()), a2 = m(c.a2()), a3 = m(c.a3()), a4 = m(c.a4()), a6 = m(c.a6());
  u64 count = 1;
  for (u64 x = 0; x < p; ++x) {
    const u64 rhs = (((x * x % p) * x) % p + a2 * (x * x % p) + a4 * x + a6) % p;
    for (u64 y = 0; y < p; ++y) {
      const u64 lhs = (y * y + a1 * x % p * y + a3 * y) % p;
      if (lhs == rhs) ++count;
    }
  }
  return count;
}

// First r with n | D_r, scanning exact terms.
inline u64 scan_rank(const eds::EdsSequence& s, u64 n, u64 limit) {
  for (u64 r = 1; r <= limit; ++r) {
    const mpz_class t = s.term(r);
    if (mpz_divisible_ui_p(t.get_mpz_t(), n)) return r;
  }
  return 0;
}

inline u64 gcd_term(const eds::EdsSequence& s, u64 n) {
  mpz_class g;
  const mpz_class t = s.term(n);
  mpz_gcd_ui(g.get_mpz_t(), t.get_mpz_t(), n);
  return g.get_ui();
}

inline u64 lcm(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

}  // namespace fx
