#pragma once

#include <cstdint>
#include <map>

#include "lcmlab/ntk.hpp"

namespace lcmlab {

// The exact asymptotic constant A of log lcm, with its per-residue
// breakdown over the reduced residue system R(a1).
struct AsymptoticConstant {
  Rational value;        // A = (a1 / phi(a1)) * sum of per-residue constants
  std::int64_t phi{};    // phi(a1)
  struct Entry {
    std::int64_t rung_cap{};  // K_r
    Rational constant;        // A_r
  };
  std::map<std::int64_t, Entry> breakdown;  // keyed by r in R(a1)
};

/// Rung-count floor K_r = floor((a*l - (l-m)*r) / (a*(l-m))). Always >= 0,
/// and 0 whenever m = 0. Rejects r outside R(a) and l <= m.
std::int64_t rung_cap(std::int64_t r, std::int64_t a, std::int64_t l,
                      std::int64_t m);

/// Per-residue constant A_r: l/r when l >= (a+r)*m/r (ties take this
/// branch, decided as l*r >= (a+r)*m in integers), otherwise the rung sum
/// sum_{i=0}^{K_r-1} (l-m)/(r+a*i) + l/(r+a*K_r).
Rational residue_constant(std::int64_t r, std::int64_t a, std::int64_t l,
                          std::int64_t m);

/// The rung-sum form of A_r evaluated unconditionally (used to check the
/// branch-boundary identity, where it must collapse to l/r).
Rational residue_constant_rung_sum(std::int64_t r, std::int64_t a,
                                   std::int64_t l, std::int64_t m);

/// The constant A for a normalized spec, computed from the reduced pair
/// (a1, b0); it does not depend on b.
AsymptoticConstant asymptotic_constant(const ProgressionSpec& spec);

/// Shortcut for wide windows l >= (a+1)*m: (a*l/phi(a)) * sum_{r in R(a)} 1/r.
/// Rejects l < (a+1)*m. Agrees exactly with asymptotic_constant.
Rational wide_window_constant(std::int64_t a, std::int64_t l, std::int64_t m);

/// Shortcut for the step-1 progression lcm{i : m*n < i <= l*n}: l when
/// l >= 2m, else l/floor(l/(l-m)) + (l-m) * sum_{i=1}^{floor(m/(l-m))} 1/i.
/// Agrees exactly with asymptotic_constant for (a=1, b=0).
Rational integer_window_constant(std::int64_t l, std::int64_t m);

}  // namespace lcmlab
