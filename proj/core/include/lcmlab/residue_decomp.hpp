#pragma once

#include <cstdint>
#include <vector>

#include "lcmlab/ntk.hpp"

namespace lcmlab {

/// Chebyshev theta for a residue class: sum of log p over primes p <= x
/// with p == k (mod h). Requires h >= 1 and gcd(h, k) = 1; the prime set is
/// computed exactly by sieve, only the log accumulation is floating point.
double theta(double x, std::int64_t h, std::int64_t k);

// Half-open interval (lo, hi] with exact rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;
};

// The interval description of the class-r prime support of a window:
// a prime p == r (mod a1) divides some window term iff p lies in the base
// interval (0, (l-m)n] or in some rung
//   ( (b1 + a1*m*n)/(r' + a1*i), (b1 + a1*l*n)/(r' + a1*i) ],  i >= 0,
// where r' is the companion residue of r. Rungs are truncated at the first
// upper endpoint below 2 (no primes down there), which makes the family
// finite for every n. Endpoints are held as shared numerators plus the
// denominator progression, so a family is O(1) storage.
struct IntervalFamily {
  std::int64_t residue{};     // r
  std::int64_t companion{};   // r'
  std::int64_t rung_cap{};    // H: beyond it, rungs sink into the base
  std::int64_t base_hi{};     // (l-m)*n
  std::int64_t num_lo{};      // b1 + a1*m*n (may be <= 0)
  std::int64_t num_hi{};      // b1 + a1*l*n
  std::int64_t step{};        // a1
  std::int64_t rung_count{};  // rungs 0 .. rung_count-1 have upper endpoint >= 2

  RationalInterval base() const;
  RationalInterval rung(std::int64_t i) const;

  /// Base and rungs coalesced into disjoint intervals, ascending. Touching
  /// half-open intervals merge; rungs wholly below the base upper endpoint
  /// are absorbed by the base (only positive values can hold primes).
  std::vector<RationalInterval> merged() const;
};

/// Builds the class-r family for a window. r must lie in R(a1).
IntervalFamily build_family(const ProgressionSpec& spec, std::int64_t n,
                            std::int64_t r);

/// Whether prime p (p == family.residue mod a1, rejected otherwise) lies in
/// the base or a rung. Decided by exact integer arithmetic; equal to
/// "p divides some window term".
bool member(std::int64_t p, const IntervalFamily& family);

/// Membership in the finite union only: base plus rungs 0..H. Whenever
/// finite_form_valid holds this selects exactly the same primes as member.
bool member_finite_union(std::int64_t p, const IntervalFamily& family);

/// Exact test that the finite union (base plus rungs 0..H) already equals
/// the full truncated family: (b+aln)/(r'+a(H+1)) < (l-m)n.
bool finite_form_valid(const ProgressionSpec& spec, std::int64_t n,
                       std::int64_t r);

enum class SupportSumMethod {
  direct,           // from the factoring sieve's support map
  theta_intervals,  // theta differences over the merged interval family
};

/// Sum of log p over the class-r prime support of the reduced window.
/// The two methods enumerate the same prime set and agree up to summation
/// rounding.
double residue_log_sum(const ProgressionSpec& spec, std::int64_t n,
                       std::int64_t r, SupportSumMethod method);

/// The predicted main term n*A + log d; no sieving. Convergence target for
/// experiments.
double estimate_log_lcm(const ProgressionSpec& spec, std::int64_t n);

}  // namespace lcmlab
