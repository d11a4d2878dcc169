#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "lcmlab/constants.hpp"
#include "lcmlab/lcm_engine.hpp"
#include "lcmlab/ntk.hpp"
#include "lcmlab/primes.hpp"
#include "lcmlab/residue_decomp.hpp"
#include "lcmlab/summation.hpp"
#include "oracles.hpp"

using namespace lcmlab;

TEST_CASE("theta examples") {
  CHECK(theta(1, 1, 1) == 0.0);
  // 5, 13, 17 are the primes <= 20 congruent to 1 mod 4
  CHECK(theta(20, 4, 1) ==
        doctest::Approx(std::log(5.0 * 13 * 17)).epsilon(1e-12));
  CHECK(theta(10, 1, 1) == doctest::Approx(std::log(210.0)).epsilon(1e-12));
  CHECK_THROWS_AS(theta(10, 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(theta(10, 0, 1), std::invalid_argument);
}

TEST_CASE("theta agrees with trial division") {
  for (std::int64_t h : {1, 3, 4, 5}) {
    for (std::int64_t k : residue_set(h)) {
      for (double x : {2.0, 50.0, 300.0, 1000.0, 1000.5}) {
        CHECK(theta(x, h, k) ==
              doctest::Approx(oracles::brute_theta(x, h, k)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("theta is monotone and classes add up to the full sum") {
  for (double x = 2; x <= 120; x += 1) {
    CHECK(theta(x, 3, 1) <= theta(x + 1, 3, 1));
  }
  for (std::int64_t h : {2, 3, 4, 6, 10}) {
    for (double x : {10.0, 100.0, 1000.0}) {
      CompensatedSum classes;
      for (std::int64_t k : residue_set(h)) classes.add(theta(x, h, k));
      double divisor_primes = 0.0;
      for (const auto& [p, e] : factorize_small(h)) {
        if (p <= static_cast<std::int64_t>(x)) {
          divisor_primes += std::log(static_cast<double>(p));
        }
      }
      CHECK(classes.value() ==
            doctest::Approx(theta(x, 1, 1) - divisor_primes).epsilon(1e-9));
    }
  }
}

TEST_CASE("build_family lays out base and rungs") {
  const IntervalFamily f1 = build_family(normalize(1, 1, 1, 0), 4, 1);
  CHECK(f1.rung_cap == 0);
  CHECK(f1.base().hi == 4);
  CHECK(f1.rung(0).lo == 1);
  CHECK(f1.rung(0).hi == 5);

  const IntervalFamily f2 = build_family(normalize(1, 1, 3, 2), 4, 1);
  CHECK(f2.rung_cap == 2);
  CHECK(f2.base().hi == 4);
  CHECK(f2.rung(0).lo == 9);
  CHECK(f2.rung(0).hi == 13);
  CHECK(f2.rung(1).lo == make_rational(9, 2));
  CHECK(f2.rung(1).hi == make_rational(13, 2));
  CHECK(f2.rung(2).lo == 3);
  CHECK(f2.rung(2).hi == make_rational(13, 3));
  CHECK(f2.rung_count == 6);  // 13/6 >= 2 > 13/7
  CHECK_THROWS_AS(f2.rung(6), std::out_of_range);

  const IntervalFamily f3 = build_family(normalize(1, 1, 1, 0), 1, 1);
  CHECK(f3.base().hi == 1);
  CHECK(f3.rung_count == 1);
  CHECK(f3.rung(0).lo == 1);
  CHECK(f3.rung(0).hi == 2);

  CHECK_THROWS_AS(build_family(normalize(4, 1, 1, 0), 4, 2),
                  std::invalid_argument);
}

TEST_CASE("rung upper endpoints strictly decrease") {
  const IntervalFamily f = build_family(normalize(3, 2, 4, 1), 7, 2);
  for (std::int64_t i = 1; i < f.rung_count; ++i) {
    CHECK(f.rung(i).hi < f.rung(i - 1).hi);
  }
}

TEST_CASE("member examples") {
  const IntervalFamily f = build_family(normalize(1, 1, 3, 2), 4, 1);
  CHECK(member(11, f));
  CHECK_FALSE(member(7, f));
  CHECK(member(2, f));  // base: 2 <= (l-m)*n = 4
  const IntervalFamily g = build_family(normalize(4, 1, 1, 0), 3, 3);
  CHECK_THROWS_AS(member(5, g), std::invalid_argument);  // 5 == 1 (mod 4)
}

TEST_CASE("merged intervals coalesce overlapping and touching pieces") {
  // Base (0,4] overlaps rung 0 (1,5]: a single merged interval.
  const auto m1 = build_family(normalize(1, 1, 1, 0), 4, 1).merged();
  REQUIRE(m1.size() == 1);
  CHECK(m1.front().lo == 0);
  CHECK(m1.front().hi == 5);

  // Rung 2 = (3, 13/3] touches the base (0,4]; rungs 3.. are absorbed.
  const auto m2 = build_family(normalize(1, 1, 3, 2), 4, 1).merged();
  REQUIRE(m2.size() == 3);
  CHECK(m2[0].lo == 0);
  CHECK(m2[0].hi == make_rational(13, 3));
  CHECK(m2[1].lo == make_rational(9, 2));
  CHECK(m2[1].hi == make_rational(13, 2));
  CHECK(m2[2].lo == 9);
  CHECK(m2[2].hi == 13);
}

TEST_CASE("membership equals divisibility over a small grid") {
  for (std::int64_t a = 1; a <= 4; ++a) {
    for (std::int64_t b = -4; b <= 4; ++b) {
      if (a + b < 1 || std::gcd(a, b) != 1) continue;
      for (std::int64_t l = 1; l <= 3; ++l) {
        for (std::int64_t m = 0; m < l; ++m) {
          const ProgressionSpec spec = normalize(a, b, l, m);
          for (std::int64_t n = 1; n <= 30; ++n) {
            const std::int64_t bound = spec.a * spec.l * n + spec.b;
            const auto support = oracles::brute_window_support(spec, n);
            std::vector<IntervalFamily> families;
            for (std::int64_t r : residue_set(spec.a1)) {
              families.push_back(build_family(spec, n, r));
            }
            for (std::int64_t p = 2; p <= bound; ++p) {
              if (!oracles::brute_is_prime(p) || spec.a1 % p == 0) continue;
              std::int64_t cls = p % spec.a1;
              if (cls == 0) cls = spec.a1;  // a1 = 1
              for (const auto& fam : families) {
                if (fam.residue % spec.a1 != cls % spec.a1) continue;
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(l);
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(p);
                REQUIRE(member(p, fam) == (support.count(p) > 0));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("finite form examples and equivalence when valid") {
  CHECK(finite_form_valid(normalize(1, 1, 3, 2), 4, 1));
  CHECK_FALSE(finite_form_valid(normalize(1, 1, 3, 2), 1, 1));
  // m = 0 windows: valid for every n > b (the boundary n = b, l = 1,
  // companion 1 makes b < l*n*r' an equality and fails the strict test).
  for (std::int64_t a = 1; a <= 4; ++a) {
    for (std::int64_t b = 1; b <= 4; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (std::int64_t l = 1; l <= 3; ++l) {
        const ProgressionSpec spec = normalize(a, b, l, 0);
        for (std::int64_t n = b + 1; n <= b + 20; ++n) {
          for (std::int64_t r : residue_set(spec.a1)) {
            CHECK(finite_form_valid(spec, n, r));
          }
        }
        if (l >= 2) {
          for (std::int64_t r : residue_set(spec.a1)) {
            CHECK(finite_form_valid(spec, b, r));  // n = b is fine once l >= 2
          }
        }
      }
    }
  }

  for (std::int64_t a = 1; a <= 4; ++a) {
    for (std::int64_t b = -4; b <= 4; ++b) {
      if (a + b < 1 || std::gcd(a, b) != 1) continue;
      for (std::int64_t l = 1; l <= 3; ++l) {
        for (std::int64_t m = 0; m < l; ++m) {
          const ProgressionSpec spec = normalize(a, b, l, m);
          for (std::int64_t n = 1; n <= 25; ++n) {
            const std::int64_t bound = spec.a * spec.l * n + spec.b;
            for (std::int64_t r : residue_set(spec.a1)) {
              if (!finite_form_valid(spec, n, r)) continue;
              const IntervalFamily fam = build_family(spec, n, r);
              for (std::int64_t p = 2; p <= bound; ++p) {
                if (!oracles::brute_is_prime(p)) continue;
                std::int64_t cls = p % spec.a1;
                if (cls == 0) cls = spec.a1;
                if (cls != r) continue;
                REQUIRE(member(p, fam) == member_finite_union(p, fam));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("rungs up to the cap are pairwise disjoint for offsets in R(a)") {
  for (std::int64_t a = 1; a <= 5; ++a) {
    for (std::int64_t b : residue_set(a)) {
      for (std::int64_t l = 1; l <= 4; ++l) {
        for (std::int64_t m = 0; m < l; ++m) {
          const ProgressionSpec spec = normalize(a, b, l, m);
          for (std::int64_t n : {1, 2, 3, 7, 19}) {
            for (std::int64_t r : residue_set(spec.a1)) {
              const IntervalFamily f = build_family(spec, n, r);
              // (l-m)n < hi_H for every n >= 1 when b is in R(a)
              CHECK(Rational(static_cast<long>(f.base_hi)) <
                    make_rational(f.num_hi, f.companion + f.step * f.rung_cap));
              const std::int64_t top = std::min(f.rung_cap, f.rung_count - 1);
              for (std::int64_t i = 1; i <= top; ++i) {
                CHECK(f.rung(i - 1).lo >= f.rung(i).hi);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("residue_log_sum examples, both methods") {
  for (auto method :
       {SupportSumMethod::direct, SupportSumMethod::theta_intervals}) {
    CHECK(residue_log_sum(normalize(2, 1, 1, 0), 4, 1, method) ==
          doctest::Approx(std::log(3.0 * 5 * 7)).epsilon(1e-12));
    CHECK(residue_log_sum(normalize(1, 1, 3, 2), 4, 1, method) ==
          doctest::Approx(std::log(2.0 * 3 * 5 * 11 * 13)).epsilon(1e-12));
    // window = {1}: empty support
    CHECK(residue_log_sum(normalize(1, 0, 1, 0), 1, 1, method) == 0.0);
  }
  CHECK_THROWS_AS(
      residue_log_sum(normalize(4, 1, 1, 0), 3, 2, SupportSumMethod::direct),
      std::invalid_argument);
}

TEST_CASE("the two support sums agree over a grid") {
  for (std::int64_t a = 1; a <= 4; ++a) {
    for (std::int64_t b = -3; b <= 4; ++b) {
      if (a + b < 1 || std::gcd(a, b) != 1) continue;
      for (std::int64_t l = 1; l <= 3; ++l) {
        for (std::int64_t m = 0; m < l; ++m) {
          const ProgressionSpec spec = normalize(a, b, l, m);
          for (std::int64_t n : {1, 3, 9, 27, 80}) {
            for (std::int64_t r : residue_set(spec.a1)) {
              const double direct =
                  residue_log_sum(spec, n, r, SupportSumMethod::direct);
              const double via_theta = residue_log_sum(
                  spec, n, r, SupportSumMethod::theta_intervals);
              CHECK(std::abs(direct - via_theta) <= 1e-6);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("class sums, correction and log d assemble to log L") {
  for (std::int64_t a = 1; a <= 4; ++a) {
    for (std::int64_t b = -3; b <= 4; ++b) {
      if (a + b < 1) continue;  // d > 1 cases included
      for (std::int64_t l = 1; l <= 3; ++l) {
        for (std::int64_t m = 0; m < l; ++m) {
          const ProgressionSpec spec = normalize(a, b, l, m);
          for (std::int64_t n : {1, 2, 6, 17, 60}) {
            CompensatedSum assembled;
            for (std::int64_t r : residue_set(spec.a1)) {
              assembled.add(
                  residue_log_sum(spec, n, r, SupportSumMethod::direct));
            }
            const std::int64_t reduced_bound = spec.a1 * spec.l * n + spec.b1;
            assembled.add(squarefull_split(factor_window_sieve_reduced(spec, n),
                                           reduced_bound)
                              .correction);
            assembled.add(std::log(static_cast<double>(spec.d)));
            const double direct = log_lcm(factor_window_sieve(spec, n));
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(l);
            CAPTURE(m);
            CAPTURE(n);
            CHECK(std::abs(assembled.value() - direct) <= 1e-6);
          }
        }
      }
    }
  }
}

TEST_CASE("estimate_log_lcm is the scaled constant plus log d") {
  CHECK(estimate_log_lcm(normalize(1, 0, 1, 0), 1000) ==
        doctest::Approx(1000.0).epsilon(1e-12));
  CHECK(estimate_log_lcm(normalize(3, 1, 1, 0), 1000) ==
        doctest::Approx(2250.0).epsilon(1e-12));
  CHECK(estimate_log_lcm(normalize(1, 0, 3, 2), 1000) ==
        doctest::Approx(2500.0).epsilon(1e-12));
  CHECK(estimate_log_lcm(normalize(4, 6, 2, 1), 10) ==
        doctest::Approx(estimate_log_lcm(normalize(2, 3, 2, 1), 10) +
                        std::log(2.0))
            .epsilon(1e-12));
}
