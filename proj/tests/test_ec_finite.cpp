#include <doctest.h>

#include <cmath>
#include <random>

#include "eds/ec_finite.hpp"
#include "eds/error.hpp"
#include "fixtures.hpp"

using namespace eds;

TEST_SUITE("ec_finite") {
  TEST_CASE("small orders match pair enumeration") {
    for (const CurveQ& c : {fx::e1_curve(), fx::e2_curve()}) {
      for (u64 p : primes_upto(300)) {
        const CurveFp r = reduce_curve(c, p);
        if (!r.smooth) continue;
        CHECK(group_order(r) == fx::brute_count(c, p));
      }
    }
    CHECK(point_order(reduce_curve(fx::e1_curve(), 2), reduce_point(fx::e1_curve(), fx::e1_point(), 2)) == 5);
    CHECK(point_order(reduce_curve(fx::e1_curve(), 3), reduce_point(fx::e1_curve(), fx::e1_point(), 3)) == 7);
  }

  TEST_CASE("naive and BSGS orders agree on 100 random primes") {
    const auto ps = primes_upto(10000);
    std::vector<u64> window;
    for (u64 p : ps)
      if (p >= 1000) window.push_back(p);
    std::mt19937_64 rng(2024);
    int tested = 0;
    for (int i = 0; tested < 100 && i < 1000; ++i) {
      const u64 p = window[rng() % window.size()];
      for (const CurveQ& c : {fx::e1_curve(), fx::e2_curve()}) {
        const CurveFp r = reduce_curve(c, p);
        if (!r.smooth) continue;
        CHECK(group_order_naive(r) == group_order_bsgs(r));
      }
      ++tested;
    }
    CHECK(tested == 100);
  }

  TEST_CASE("BSGS beyond the naive threshold") {
    for (u64 p : {100003ULL, 1000003ULL, 999999937ULL}) {
      const CurveFp r = reduce_curve(fx::e1_curve(), p);
      const u64 n = group_order(r);
      const double bound = 2.0 * std::sqrt(static_cast<double>(p));
      CHECK(std::fabs(static_cast<double>(n) - static_cast<double>(p + 1)) <= bound);
      const PointFp pt = reduce_point(fx::e1_curve(), fx::e1_point(), p);
      CHECK(r.mul(pt, n).infinity);
    }
  }

  TEST_CASE("Hasse bound on E1 for good p up to 10^4") {
    for (u64 p : primes_upto(10000)) {
      const CurveFp r = reduce_curve(fx::e1_curve(), p);
      if (!r.smooth) continue;
      const auto t = trace(r);
      CHECK(static_cast<double>(t * t) <= 4.0 * static_cast<double>(p));
    }
  }

  TEST_CASE("reduction is a homomorphism") {
    const CurveQ c = fx::e1_curve();
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
      const CurveFp r = reduce_curve(c, p);
      const PointFp base = reduce_point(c, fx::e1_point(), p);
      const u64 order = group_order(r);
      CHECK(order % point_order(r, base) == 0);
      for (u64 n = 1; n <= 50; ++n) CHECK(reduce_point(c, scalar_mul(c, fx::e1_point(), n), p) == r.mul(base, n));
    }
  }

  TEST_CASE("bad primes are refused") {
    CHECK_FALSE(reduce_curve(fx::e1_curve(), 37).smooth);
    try {
      reduce_point(fx::e1_curve(), fx::e1_point(), 37);
      FAIL("expected bad-reduction-prime");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadReductionPrime);
    }
  }

  TEST_CASE("anomalous primes") {
    // Independent count: #E(F_p) = p by pair enumeration.
    for (u64 p : primes_upto(200)) {
      if (p == 37) continue;
      CHECK(is_anomalous(fx::e1_curve(), p) == (fx::brute_count(fx::e1_curve(), p) == p));
    }
  }
}
