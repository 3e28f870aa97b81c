#include <doctest.h>

#include <map>

#include "eds/error.hpp"
#include "eds/gcd_classes.hpp"
#include "fixtures.hpp"

using namespace eds;

TEST_SUITE("gcd_classes") {
  TEST_CASE("examples") {
    ApparitionCache& a = fx::e1_ranks();
    CHECK(exclusion_set(a, 1, 50) == std::vector<u64>{10, 21, 40});
    CHECK(class_members_direct(fx::e1(), 1, 10) == std::vector<u64>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(class_members_structural(a, 2, 10) == std::vector<u64>{10});
    CHECK(b_set_members_direct(fx::e1(), 1, 10) == std::vector<u64>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(b_set_members_direct(fx::e1(), 2, 10) == std::vector<u64>{10});
    CHECK_FALSE(is_class_nonempty(a, 5));
    try {
      class_members_structural(a, 5, 100);
      FAIL("expected class-empty");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ClassEmpty);
    }
  }

  TEST_CASE("structural members equal direct members for k <= 10, x <= 500") {
    ApparitionCache& a = fx::e1_ranks();
    for (u64 k = 1; k <= 10; ++k) {
      if (!is_class_nonempty(a, k)) continue;
      CHECK(!describe_class(a, k, 100).exclusion_elements.empty());
      for (u64 x : {1, 37, 100, 250, 499, 500}) CHECK(class_members_structural(a, k, x) == class_members_direct(fx::e1(), k, x));
    }
  }

  TEST_CASE("exclusion set never contains 1 for a nonempty class") {
    ApparitionCache& a = fx::e1_ranks();
    for (u64 k = 1; k <= 10; ++k)
      if (is_class_nonempty(a, k)) CHECK(exclusion_set(a, k, 200).front() > 1);
  }

  TEST_CASE("Moebius count of B_k equals direct count") {
    for (u64 k : {1, 2, 3, 4, 5, 6, 8})
      for (u64 x : {50, 100, 200, 300})
        CHECK(b_set_count_formula(fx::e1_ranks(), k, x) ==
              static_cast<std::int64_t>(b_set_members_direct(fx::e1(), k, x).size()));
  }

  TEST_CASE("classes partition [1, x]") {
    std::map<u64, u64> sizes;
    for (u64 n = 1; n <= 300; ++n) ++sizes[fx::gcd_term(fx::e1(), n)];
    u64 total = 0;
    for (const auto& [k, count] : sizes) {
      CHECK(class_members_direct(fx::e1(), k, 300).size() == count);
      total += count;
    }
    CHECK(total == 300);
  }

  TEST_CASE("inclusion-exclusion over B_ck") {
    auto mu = [](u64 c) {
      int sign = 1;
      for (const auto& pe : factor(c)) {
        if (pe.e > 1) return 0;
        sign = -sign;
      }
      return sign;
    };
    for (u64 k : {1, 2, 4, 6})
      for (u64 x : {100, 200, 300}) {
        std::int64_t sum = 0;
        for (u64 c = 1; c <= k; ++c)
          if (k % c == 0) sum += mu(c) * static_cast<std::int64_t>(b_set_members_direct(fx::e1(), c * k, x).size());
        CHECK(sum == static_cast<std::int64_t>(class_members_direct(fx::e1(), k, x).size()));
      }
  }

  TEST_CASE("direct enumeration respects the cap") {
    EdsSequence s(fx::e1_curve(), fx::e1_point(), 20);
    CHECK_THROWS_AS(class_members_direct(s, 1, 21), Error);
  }
}
