#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "lcmlab/ntk.hpp"

namespace lcmlab {

// One evaluation point of a progression window: indices {m*n+1, ..., l*n}
// and the raw term range.
struct WindowInstance {
  ProgressionSpec spec;
  std::int64_t n{};
  std::int64_t index_lo{};  // m*n, exclusive
  std::int64_t index_hi{};  // l*n, inclusive
  std::int64_t term_lo{};   // a*(m*n+1) + b, smallest term (>= 1)
  std::int64_t term_hi{};   // a*l*n + b, largest term
};

/// Validates n >= 1 and builds the window; throws std::overflow_error if
/// the term range leaves the 64-bit domain.
WindowInstance make_window(const ProgressionSpec& spec, std::int64_t n);

/// [a*i + b for i = m*n+1 .. l*n], strictly increasing, (l-m)*n terms.
std::vector<std::int64_t> window_terms(const ProgressionSpec& spec,
                                       std::int64_t n);

/// lcm of a nonempty list of positive integers, folded in arbitrary
/// precision. Rejects empty input and nonpositive terms.
BigInt lcm_fold(std::span<const std::int64_t> terms);

// prime -> max p-adic valuation over the window terms; reconstructs the
// window lcm as the product p^e.
struct PrimePowerMap {
  std::map<std::int64_t, int> entries;
};

struct SieveOptions {
  std::int64_t segment_size = std::int64_t{1} << 20;  // window indices
  int threads = 1;
};

/// Factors the window lcm by a segmented strike sieve over the reduced
/// progression: every base prime p <= sqrt(term_hi) with p coprime to the
/// step strikes its index class and divides powers out term-by-term;
/// surviving cofactors are primes of exponent 1. The d = gcd(a, b) factor
/// is reattached exactly (the raw lcm equals d times the reduced lcm).
PrimePowerMap factor_window_sieve(const ProgressionSpec& spec, std::int64_t n,
                                  const SieveOptions& options = {});

/// Support of the reduced window lcm{a1*i + b1} only (no d reattachment).
PrimePowerMap factor_window_sieve_reduced(const ProgressionSpec& spec,
                                          std::int64_t n,
                                          const SieveOptions& options = {});

/// Exact product p^e as a big integer.
BigInt reconstruct(const PrimePowerMap& map);

/// Sum of e*log p, compensated. The exact value is available through
/// reconstruct when needed.
double log_lcm(const PrimePowerMap& map);

struct SquarefullSplit {
  double first_power_sum;  // sum of log p over the support
  double correction;       // sum of (e-1)*log p over primes with e >= 2
};

/// Splits log L into the first-power prime sum and the squarefull
/// correction. Every exponent->=2 prime must satisfy p^2 <= bound (the
/// window's b + a*l*n); a violation means the map does not belong to the
/// stated window and throws std::logic_error.
SquarefullSplit squarefull_split(const PrimePowerMap& map, std::int64_t bound);

/// The squarefull correction of the reduced window computed directly:
/// for each prime p <= sqrt(term_hi) the exponent is found by counting
/// window indices hit by each power p^k. No strike arrays; used by the
/// theta-interval route so it stays independent of the segmented sieve.
double squarefull_correction(const ProgressionSpec& spec, std::int64_t n);

}  // namespace lcmlab
