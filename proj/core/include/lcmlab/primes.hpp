#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lcmlab {

/// Integer square root: largest r with r*r <= n. n must be >= 0.
std::int64_t isqrt64(std::int64_t n);

/// All primes <= limit, ascending. limit < 2 yields an empty list.
std::vector<std::int64_t> simple_sieve(std::int64_t limit);

/// Prime factorization by trial division, ascending (p, exponent) pairs.
/// Intended for small inputs (divisors d of the progression step).
std::vector<std::pair<std::int64_t, int>> factorize_small(std::int64_t x);

namespace detail {
constexpr std::int64_t kSegmentValues = std::int64_t{1} << 20;
}

/// Calls fn(p) for every prime p <= limit, ascending. Sieves in segments so
/// the working set stays bounded for limits up to the 1e8 scale.
template <typename Fn>
void enumerate_primes(std::int64_t limit, Fn&& fn) {
  if (limit < 2) return;
  const auto base = simple_sieve(isqrt64(limit));
  for (std::int64_t p : base) fn(p);

  std::vector<char> composite;
  std::int64_t low = isqrt64(limit) + 1;
  while (low <= limit) {
    const std::int64_t high =
        std::min(limit, low + detail::kSegmentValues - 1);
    composite.assign(static_cast<std::size_t>(high - low + 1), 0);
    for (std::int64_t p : base) {
      std::int64_t start = ((low + p - 1) / p) * p;
      for (std::int64_t v = start; v <= high; v += p) {
        composite[static_cast<std::size_t>(v - low)] = 1;
      }
    }
    for (std::int64_t v = low; v <= high; ++v) {
      if (!composite[static_cast<std::size_t>(v - low)]) fn(v);
    }
    low = high + 1;
  }
}

}  // namespace lcmlab
