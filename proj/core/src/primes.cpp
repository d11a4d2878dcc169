#include "lcmlab/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace lcmlab {

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt64 requires n >= 0");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::int64_t> simple_sieve(std::int64_t limit) {
  std::vector<std::int64_t> primes;
  if (limit < 2) return primes;
  std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t i = 2; i * i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    for (std::int64_t j = i * i; j <= limit; j += i) {
      composite[static_cast<std::size_t>(j)] = 1;
    }
  }
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (!composite[static_cast<std::size_t>(i)]) primes.push_back(i);
  }
  return primes;
}

std::vector<std::pair<std::int64_t, int>> factorize_small(std::int64_t x) {
  if (x <= 0) throw std::invalid_argument("factorize_small requires x >= 1");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (x > 1) out.emplace_back(x, 1);
  return out;
}

}  // namespace lcmlab
