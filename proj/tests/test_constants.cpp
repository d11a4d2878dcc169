#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "lcmlab/constants.hpp"
#include "lcmlab/ntk.hpp"

using namespace lcmlab;

TEST_CASE("rung_cap examples") {
  CHECK(rung_cap(1, 1, 3, 2) == 2);
  CHECK(rung_cap(1, 2, 3, 1) == 1);
  for (std::int64_t a = 1; a <= 12; ++a) {
    for (std::int64_t r : residue_set(a)) {
      for (std::int64_t l = 1; l <= 6; ++l) {
        CHECK(rung_cap(r, a, l, 0) == 0);
      }
    }
  }
  CHECK_THROWS_AS(rung_cap(2, 4, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(rung_cap(1, 1, 2, 2), std::invalid_argument);
}

TEST_CASE("residue_constant branches") {
  CHECK(residue_constant(2, 3, 4, 1) == make_rational(2, 1));
  CHECK(residue_constant(1, 1, 3, 2) == make_rational(5, 2));
  for (std::int64_t a = 1; a <= 8; ++a) {
    for (std::int64_t r : residue_set(a)) {
      for (std::int64_t l = 1; l <= 5; ++l) {
        CHECK(residue_constant(r, a, l, 0) == make_rational(l, r));
      }
    }
  }
  CHECK_THROWS_AS(residue_constant(3, 6, 2, 1), std::invalid_argument);
}

TEST_CASE("asymptotic constant examples") {
  CHECK(asymptotic_constant(normalize(1, 0, 1, 0)).value == 1);
  CHECK(asymptotic_constant(normalize(3, 1, 1, 0)).value == make_rational(9, 4));
  CHECK(asymptotic_constant(normalize(1, 0, 3, 2)).value == make_rational(5, 2));
}

TEST_CASE("asymptotic constant breakdown invariants") {
  const AsymptoticConstant c = asymptotic_constant(normalize(5, 2, 4, 3));
  CHECK(c.phi == 4);
  CHECK(c.breakdown.size() == 4);
  Rational sum(0);
  for (const auto& [r, entry] : c.breakdown) {
    CHECK(entry.constant > 0);
    CHECK(entry.rung_cap >= 0);
    sum += entry.constant;
  }
  CHECK(c.value == make_rational(5, 4) * sum);

  for (const auto& [r, entry] : asymptotic_constant(normalize(5, 2, 4, 0)).breakdown) {
    CHECK(entry.rung_cap == 0);  // m = 0
  }
}

TEST_CASE("wide window shortcut") {
  CHECK(wide_window_constant(1, 1, 0) == 1);
  CHECK(wide_window_constant(3, 2, 0) == make_rational(9, 2));
  CHECK(wide_window_constant(2, 3, 1) == 6);
  CHECK_THROWS_AS(wide_window_constant(2, 2, 1), std::invalid_argument);
}

TEST_CASE("integer window shortcut") {
  CHECK(integer_window_constant(2, 1) == 2);
  CHECK(integer_window_constant(3, 2) == make_rational(5, 2));
  CHECK(integer_window_constant(5, 3) == make_rational(9, 2));
  CHECK_THROWS_AS(integer_window_constant(2, 2), std::invalid_argument);
}

TEST_CASE("rung sum collapses to l/r exactly at the branch boundary") {
  for (std::int64_t a = 1; a <= 8; ++a) {
    for (std::int64_t r : residue_set(a)) {
      for (std::int64_t m = 1; m <= 6; ++m) {
        if (m % r != 0) continue;  // (a+r)*m/r integral iff r | m
        const std::int64_t l = (a + r) * m / r;
        CHECK(residue_constant_rung_sum(r, a, l, m) == make_rational(l, r));
        CHECK(rung_cap(r, a, l, m) == 1);
      }
    }
  }
}

TEST_CASE("shortcuts agree exactly with the assembled constant") {
  for (std::int64_t a = 1; a <= 8; ++a) {
    for (std::int64_t m = 0; m <= 4; ++m) {
      const std::int64_t l_min = std::max((a + 1) * m, m + 1);
      for (std::int64_t l = l_min; l <= (a + 1) * m + 8; ++l) {
        CHECK(wide_window_constant(a, l, m) ==
              asymptotic_constant(normalize(a, 1, l, m)).value);
      }
    }
  }
  for (std::int64_t m = 0; m <= 11; ++m) {
    for (std::int64_t l = m + 1; l <= 12; ++l) {
      CHECK(integer_window_constant(l, m) ==
            asymptotic_constant(normalize(1, 0, l, m)).value);
    }
  }
}

TEST_CASE("constant grows strictly with l, per residue and in total") {
  for (std::int64_t a = 1; a <= 6; ++a) {
    for (std::int64_t m = 0; m <= 4; ++m) {
      for (std::int64_t l = m + 1; l <= m + 8; ++l) {
        const AsymptoticConstant lo = asymptotic_constant(normalize(a, 1, l, m));
        const AsymptoticConstant hi =
            asymptotic_constant(normalize(a, 1, l + 1, m));
        CHECK(hi.value > lo.value);
        for (const auto& [r, entry] : lo.breakdown) {
          CHECK(hi.breakdown.at(r).constant > entry.constant);
        }
      }
    }
  }
}

TEST_CASE("constant does not depend on b and uses the reduced pair") {
  const Rational base = asymptotic_constant(normalize(5, 1, 3, 1)).value;
  for (std::int64_t b : {2, 3, 4, 6, 7, -4, -3}) {
    CHECK(asymptotic_constant(normalize(5, b, 3, 1)).value == base);
  }
  // d > 1 reduces to the (a1, b0) constant.
  CHECK(asymptotic_constant(normalize(6, 3, 2, 1)).value ==
        asymptotic_constant(normalize(2, 1, 2, 1)).value);
  CHECK(asymptotic_constant(normalize(4, 0, 1, 0)).value ==
        asymptotic_constant(normalize(1, 0, 1, 0)).value);
}
