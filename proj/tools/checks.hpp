#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lcmlab::cli {

struct CheckResult {
  long long checks = 0;
  std::vector<std::string> failures;

  void merge(CheckResult other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(),
                    other.failures.end());
  }
  bool ok() const { return failures.empty(); }
};

/// Exact big-integer agreement of the factoring sieve with the gcd-fold
/// oracle over {1 <= a <= a_max, b_min <= b <= b_max with a+b >= 1 (all gcd
/// cases), 0 <= m < l <= l_max, 1 <= n <= n_max}.
CheckResult check_fold_sieve_agreement(std::int64_t a_max, std::int64_t b_min,
                                       std::int64_t b_max, std::int64_t l_max,
                                       std::int64_t n_max);

/// Interval-family membership == brute-force divisibility for every prime
/// <= b + a*l*n coprime to a, over {a <= a_max, |b| <= b_abs with
/// gcd(a,b) = 1 and a+b >= 1, m < l <= l_max, n <= n_max}; additionally the
/// finite-union form selects the identical primes whenever its exact
/// precondition holds. One check per prime comparison.
CheckResult check_support_characterization(std::int64_t a_max,
                                           std::int64_t b_abs,
                                           std::int64_t l_max,
                                           std::int64_t n_max);

/// Per-class direct sums + squarefull correction + log d == log of the
/// sieved lcm within tol, over the same grid shape as the characterization.
CheckResult check_class_sum_assembly(std::int64_t a_max, std::int64_t b_abs,
                                     std::int64_t l_max, std::int64_t n_max,
                                     double tol);

/// Exact rational agreement of the two shortcut constants with the
/// assembled per-residue constant, over their documented grids.
CheckResult check_constant_shortcuts();

/// The rung-sum form of the per-residue constant collapses to l/r exactly
/// when l*r = (a+r)*m. Exhaustive over a <= 8, r in R(a), 1 <= m <= 6.
CheckResult check_rung_sum_boundary();

}  // namespace lcmlab::cli
