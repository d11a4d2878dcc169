#include "checks.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "lcmlab/constants.hpp"
#include "lcmlab/lcm_engine.hpp"
#include "lcmlab/ntk.hpp"
#include "lcmlab/residue_decomp.hpp"
#include "lcmlab/summation.hpp"

namespace lcmlab::cli {

namespace {

std::string describe(const ProgressionSpec& spec, std::int64_t n) {
  std::ostringstream s;
  s << "a=" << spec.a << " b=" << spec.b << " l=" << spec.l
    << " m=" << spec.m << " n=" << n;
  return s.str();
}

// Smallest-prime-factor table; the brute-force divisibility oracle factors
// every window term through it, independent of the interval machinery.
std::vector<std::int32_t> spf_table(std::int64_t limit) {
  std::vector<std::int32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf[static_cast<std::size_t>(i)] != 0) continue;
    for (std::int64_t j = i; j <= limit; j += i) {
      if (spf[static_cast<std::size_t>(j)] == 0) {
        spf[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
      }
    }
  }
  return spf;
}

}  // namespace

CheckResult check_fold_sieve_agreement(std::int64_t a_max, std::int64_t b_min,
                                       std::int64_t b_max, std::int64_t l_max,
                                       std::int64_t n_max) {
  CheckResult out;
  for (std::int64_t a = 1; a <= a_max; ++a) {
    for (std::int64_t b = b_min; b <= b_max; ++b) {
      if (a + b < 1) continue;
      for (std::int64_t l = 1; l <= l_max; ++l) {
        for (std::int64_t m = 0; m < l; ++m) {
          const ProgressionSpec spec = normalize(a, b, l, m);
          for (std::int64_t n = 1; n <= n_max; ++n) {
            ++out.checks;
            if (reconstruct(factor_window_sieve(spec, n)) !=
                lcm_fold(window_terms(spec, n))) {
              out.failures.push_back("fold/sieve mismatch at " +
                                     describe(spec, n));
            }
          }
        }
      }
    }
  }
  return out;
}

CheckResult check_support_characterization(std::int64_t a_max,
                                           std::int64_t b_abs,
                                           std::int64_t l_max,
                                           std::int64_t n_max) {
  CheckResult out;
  const std::int64_t global_limit = a_max * l_max * n_max + b_abs;
  const auto spf = spf_table(global_limit);
  std::vector<std::int64_t> primes;
  for (std::int64_t v = 2; v <= global_limit; ++v) {
    if (spf[static_cast<std::size_t>(v)] == v) primes.push_back(v);
  }
  std::vector<char> in_support(static_cast<std::size_t>(global_limit) + 1, 0);

  for (std::int64_t a = 1; a <= a_max; ++a) {
    for (std::int64_t b = -b_abs; b <= b_abs; ++b) {
      if (a + b < 1 || std::gcd(a, b) != 1) continue;
      for (std::int64_t l = 1; l <= l_max; ++l) {
        for (std::int64_t m = 0; m < l; ++m) {
          const ProgressionSpec spec = normalize(a, b, l, m);
          for (std::int64_t n = 1; n <= n_max; ++n) {
            const std::int64_t bound = a * l * n + b;

            // Brute-force support: trial factorization of every term.
            std::vector<std::int64_t> marked;
            for (std::int64_t i = m * n + 1; i <= l * n; ++i) {
              std::int64_t v = a * i + b;
              while (v > 1) {
                const std::int64_t p = spf[static_cast<std::size_t>(v)];
                if (!in_support[static_cast<std::size_t>(p)]) {
                  in_support[static_cast<std::size_t>(p)] = 1;
                  marked.push_back(p);
                }
                while (v % p == 0) v /= p;
              }
            }

            std::vector<IntervalFamily> families;
            std::vector<char> finite_ok;
            for (std::int64_t r : residue_set(spec.a1)) {
              families.push_back(build_family(spec, n, r));
              finite_ok.push_back(finite_form_valid(spec, n, r) ? 1 : 0);
            }

            for (std::int64_t p : primes) {
              if (p > bound) break;
              if (a % p == 0) continue;
              std::int64_t cls = p % spec.a1;
              if (cls == 0) cls = spec.a1;
              for (std::size_t fi = 0; fi < families.size(); ++fi) {
                if (families[fi].residue != cls) continue;
                ++out.checks;
                const bool inside = member(p, families[fi]);
                if (inside != (in_support[static_cast<std::size_t>(p)] != 0)) {
                  out.failures.push_back("membership mismatch for p=" +
                                         std::to_string(p) + " at " +
                                         describe(spec, n));
                }
                if (finite_ok[fi]) {
                  ++out.checks;
                  if (member_finite_union(p, families[fi]) != inside) {
                    out.failures.push_back(
                        "finite union selects different primes for p=" +
                        std::to_string(p) + " at " + describe(spec, n));
                  }
                }
              }
            }

            for (std::int64_t p : marked) {
              in_support[static_cast<std::size_t>(p)] = 0;
            }
            if (out.failures.size() > 50) return out;  // enough evidence
          }
        }
      }
    }
  }
  return out;
}

CheckResult check_class_sum_assembly(std::int64_t a_max, std::int64_t b_abs,
                                     std::int64_t l_max, std::int64_t n_max,
                                     double tol) {
  CheckResult out;
  for (std::int64_t a = 1; a <= a_max; ++a) {
    for (std::int64_t b = -b_abs; b <= b_abs; ++b) {
      if (a + b < 1 || std::gcd(a, b) != 1) continue;
      for (std::int64_t l = 1; l <= l_max; ++l) {
        for (std::int64_t m = 0; m < l; ++m) {
          const ProgressionSpec spec = normalize(a, b, l, m);
          for (std::int64_t n = 1; n <= n_max; ++n) {
            CompensatedSum assembled;
            for (std::int64_t r : residue_set(spec.a1)) {
              assembled.add(
                  residue_log_sum(spec, n, r, SupportSumMethod::direct));
            }
            const std::int64_t reduced_bound = spec.a1 * spec.l * n + spec.b1;
            assembled.add(
                squarefull_split(factor_window_sieve_reduced(spec, n),
                                 reduced_bound)
                    .correction);
            assembled.add(std::log(static_cast<double>(spec.d)));
            const double direct = log_lcm(factor_window_sieve(spec, n));
            ++out.checks;
            if (std::abs(assembled.value() - direct) > tol) {
              out.failures.push_back("assembly identity off at " +
                                     describe(spec, n));
            }
          }
        }
      }
    }
  }
  return out;
}

CheckResult check_constant_shortcuts() {
  CheckResult out;
  for (std::int64_t a = 1; a <= 8; ++a) {
    for (std::int64_t m = 0; m <= 4; ++m) {
      const std::int64_t l_min = std::max((a + 1) * m, m + 1);
      for (std::int64_t l = l_min; l <= (a + 1) * m + 8; ++l) {
        ++out.checks;
        if (wide_window_constant(a, l, m) !=
            asymptotic_constant(normalize(a, 1, l, m)).value) {
          out.failures.push_back("wide-window constant mismatch at a=" +
                                 std::to_string(a) + " l=" +
                                 std::to_string(l) + " m=" +
                                 std::to_string(m));
        }
      }
    }
  }
  for (std::int64_t m = 0; m <= 11; ++m) {
    for (std::int64_t l = m + 1; l <= 12; ++l) {
      ++out.checks;
      if (integer_window_constant(l, m) !=
          asymptotic_constant(normalize(1, 0, l, m)).value) {
        out.failures.push_back("integer-window constant mismatch at l=" +
                               std::to_string(l) + " m=" + std::to_string(m));
      }
    }
  }
  return out;
}

CheckResult check_rung_sum_boundary() {
  CheckResult out;
  for (std::int64_t a = 1; a <= 8; ++a) {
    for (std::int64_t r : residue_set(a)) {
      for (std::int64_t m = 1; m <= 6; ++m) {
        if (m % r != 0) continue;  // l = (a+r)*m/r integral iff r | m
        const std::int64_t l = (a + r) * m / r;
        ++out.checks;
        if (residue_constant_rung_sum(r, a, l, m) != make_rational(l, r)) {
          out.failures.push_back("rung-sum boundary identity fails at a=" +
                                 std::to_string(a) + " r=" +
                                 std::to_string(r) + " m=" +
                                 std::to_string(m));
        }
      }
    }
  }
  return out;
}

}  // namespace lcmlab::cli
