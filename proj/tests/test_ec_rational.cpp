#include <doctest.h>

#include <random>

#include "eds/ec_rational.hpp"
#include "eds/error.hpp"
#include "fixtures.hpp"

using namespace eds;

TEST_SUITE("ec_rational") {
  TEST_CASE("discriminants") {
    CHECK(fx::e1_curve().disc() == 37);
    CHECK(fx::e2_curve().disc() == mpz_class("-17789632919408927778835066314273593739"));
    CHECK_THROWS_AS(CurveQ(0, 0, 0, 0, 0), Error);
    CHECK(bad_primes_upto(fx::e1_curve(), 100) == std::vector<u64>{37});
    CHECK(bad_primes_upto(fx::e2_curve(), 3000) == std::vector<u64>{3, 23, 43, 2129});
  }

  TEST_CASE("group law on multiples of P") {
    const CurveQ c = fx::e1_curve();
    const PointQ p = fx::e1_point();
    std::vector<PointQ> mult{PointQ::at_infinity()};
    for (int i = 1; i <= 30; ++i) mult.push_back(add(c, mult.back(), p));

    for (int m = 0; m <= 30; ++m) {
      CHECK(on_curve(c, mult[m]));
      CHECK(scalar_mul(c, p, m) == mult[m]);
      CHECK(add(c, mult[m], negate(c, mult[m])).infinity);
      for (int n = 0; m + n <= 30; ++n) CHECK(add(c, mult[m], mult[n]) == mult[m + n]);
    }
    CHECK(dbl(c, mult[7]) == mult[14]);
  }

  TEST_CASE("commutativity and associativity on random multiples") {
    const CurveQ c = fx::e1_curve();
    const PointQ p = fx::e1_point();
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
      const PointQ a = scalar_mul(c, p, rng() % 25 + 1);
      const PointQ b = scalar_mul(c, negate(c, p), rng() % 25 + 1);
      const PointQ d = scalar_mul(c, p, rng() % 25 + 1);
      CHECK(add(c, a, b) == add(c, b, a));
      CHECK(add(c, add(c, a, b), d) == add(c, a, add(c, b, d)));
      CHECK(add(c, a, negate(c, a)).infinity);
      CHECK(on_curve(c, add(c, a, b)));
    }
  }

  TEST_CASE("torsion and curve membership") {
    CHECK_FALSE(is_torsion(fx::e1_curve(), fx::e1_point()));
    CHECK_FALSE(is_torsion(fx::e2_curve(), fx::e2_point()));
    CHECK(on_curve(fx::e2_curve(), fx::e2_point()));
    CHECK_FALSE(on_curve(fx::e1_curve(), PointQ::affine(1, 1)));
    // y^2 = x^3 + 1 has (2, 3) of order 6.
    CHECK(is_torsion(CurveQ(0, 0, 0, 0, 1), PointQ::affine(2, 3)));
  }
}
