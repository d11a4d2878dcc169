#include "lcmlab/lcm_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "lcmlab/primes.hpp"
#include "lcmlab/summation.hpp"

namespace lcmlab {

WindowInstance make_window(const ProgressionSpec& spec, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("window requires n >= 1");
  WindowInstance w;
  w.spec = spec;
  w.n = n;
  w.index_lo = checked_mul(spec.m, n);
  w.index_hi = checked_mul(spec.l, n);
  w.term_lo = checked_add(checked_mul(spec.a, w.index_lo + 1), spec.b);
  w.term_hi = checked_add(checked_mul(spec.a, w.index_hi), spec.b);
  return w;
}

std::vector<std::int64_t> window_terms(const ProgressionSpec& spec,
                                       std::int64_t n) {
  const WindowInstance w = make_window(spec, n);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(w.index_hi - w.index_lo));
  for (std::int64_t i = w.index_lo + 1; i <= w.index_hi; ++i) {
    out.push_back(spec.a * i + spec.b);
  }
  return out;
}

BigInt lcm_fold(std::span<const std::int64_t> terms) {
  if (terms.empty()) {
    throw std::invalid_argument("lcm_fold requires a nonempty list");
  }
  BigInt acc(1);
  for (std::int64_t t : terms) {
    if (t <= 0) {
      throw std::invalid_argument("lcm_fold requires positive terms");
    }
    mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(),
               static_cast<unsigned long>(t));
  }
  return acc;
}

namespace {

struct StrikePlan {
  std::int64_t prime;
  std::int64_t index_mod;  // window indices j == index_mod (mod prime) are hit
};

struct SieveAccum {
  std::vector<int> base_exponents;          // parallel to the plan list
  std::map<std::int64_t, int> residuals;    // cofactor primes, exponent 1
};

// Strikes one block of segments. Exponents are found by dividing powers out
// of the residual term, so they are exact per term; the per-prime maximum is
// what the lcm needs.
void sieve_segments(std::int64_t j_lo, std::int64_t j_hi, std::int64_t a1,
                    std::int64_t b1, std::int64_t segment_size,
                    std::int64_t seg_first, std::int64_t seg_last,
                    const std::vector<StrikePlan>& plans, SieveAccum& acc) {
  acc.base_exponents.assign(plans.size(), 0);
  std::vector<std::int64_t> residual;
  for (std::int64_t s = seg_first; s < seg_last; ++s) {
    const std::int64_t lo = j_lo + s * segment_size;
    const std::int64_t hi = std::min(j_hi, lo + segment_size - 1);
    residual.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::int64_t j = lo; j <= hi; ++j) {
      residual[static_cast<std::size_t>(j - lo)] = a1 * j + b1;
    }
    for (std::size_t pi = 0; pi < plans.size(); ++pi) {
      const std::int64_t p = plans[pi].prime;
      std::int64_t j = lo + (((plans[pi].index_mod - lo) % p) + p) % p;
      int best = acc.base_exponents[pi];
      for (; j <= hi; j += p) {
        std::int64_t& v = residual[static_cast<std::size_t>(j - lo)];
        int e = 0;
        while (v % p == 0) {
          v /= p;
          ++e;
        }
        if (e > best) best = e;
      }
      acc.base_exponents[pi] = best;
    }
    for (std::int64_t v : residual) {
      if (v > 1) acc.residuals.emplace(v, 1);
    }
  }
}

}  // namespace

PrimePowerMap factor_window_sieve_reduced(const ProgressionSpec& spec,
                                          std::int64_t n,
                                          const SieveOptions& options) {
  const WindowInstance w = make_window(spec, n);
  if (options.segment_size < 1) {
    throw std::invalid_argument("sieve segment size must be >= 1");
  }
  const std::int64_t j_lo = w.index_lo + 1;
  const std::int64_t j_hi = w.index_hi;
  const std::int64_t a1 = spec.a1;
  const std::int64_t b1 = spec.b1;
  const std::int64_t bound = a1 * j_hi + b1;  // largest reduced term

  const auto base = simple_sieve(isqrt64(bound));
  std::vector<StrikePlan> plans;
  plans.reserve(base.size());
  for (std::int64_t p : base) {
    if (a1 % p == 0) continue;  // terms are coprime to the reduced step
    const std::int64_t bm = ((b1 % p) + p) % p;
    const std::int64_t c = static_cast<std::int64_t>(
        static_cast<__int128>((p - bm) % p) * mod_inverse(a1, p) % p);
    plans.push_back({p, c});
  }

  const std::int64_t seg = options.segment_size;
  const std::int64_t num_segments = (j_hi - j_lo) / seg + 1;
  const int threads = static_cast<int>(std::clamp<std::int64_t>(
      options.threads, 1, num_segments));

  std::vector<SieveAccum> accums(static_cast<std::size_t>(threads));
  if (threads == 1) {
    sieve_segments(j_lo, j_hi, a1, b1, seg, 0, num_segments, plans,
                   accums[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      const std::int64_t first = t * num_segments / threads;
      const std::int64_t last = (t + 1) * num_segments / threads;
      pool.emplace_back([&, t, first, last] {
        sieve_segments(j_lo, j_hi, a1, b1, seg, first, last, plans,
                       accums[static_cast<std::size_t>(t)]);
      });
    }
    for (auto& th : pool) th.join();
  }

  // Deterministic merge: the per-prime maximum is order-independent.
  PrimePowerMap out;
  for (std::size_t pi = 0; pi < plans.size(); ++pi) {
    int e = 0;
    for (const auto& acc : accums) e = std::max(e, acc.base_exponents[pi]);
    if (e > 0) out.entries.emplace(plans[pi].prime, e);
  }
  for (const auto& acc : accums) {
    for (const auto& [p, e] : acc.residuals) out.entries.emplace(p, e);
  }
  return out;
}

PrimePowerMap factor_window_sieve(const ProgressionSpec& spec, std::int64_t n,
                                  const SieveOptions& options) {
  PrimePowerMap out = factor_window_sieve_reduced(spec, n, options);
  if (spec.d > 1) {
    // L(a, b) = d * L(a1, b1) exactly, so valuations add.
    for (const auto& [p, e] : factorize_small(spec.d)) {
      out.entries[p] += e;
    }
  }
  return out;
}

BigInt reconstruct(const PrimePowerMap& map) {
  BigInt acc(1);
  BigInt power;
  for (const auto& [p, e] : map.entries) {
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e));
    acc *= power;
  }
  return acc;
}

double log_lcm(const PrimePowerMap& map) {
  CompensatedSum sum;
  for (const auto& [p, e] : map.entries) {
    sum.add(e * std::log(static_cast<double>(p)));
  }
  return sum.value();
}

SquarefullSplit squarefull_split(const PrimePowerMap& map,
                                 std::int64_t bound) {
  CompensatedSum first;
  CompensatedSum correction;
  for (const auto& [p, e] : map.entries) {
    const double logp = std::log(static_cast<double>(p));
    first.add(logp);
    if (e >= 2) {
      if (static_cast<__int128>(p) * p > bound) {
        throw std::logic_error(
            "squarefull_split: repeated prime exceeds the window bound");
      }
      correction.add((e - 1) * logp);
    }
  }
  return {first.value(), correction.value()};
}

double squarefull_correction(const ProgressionSpec& spec, std::int64_t n) {
  const WindowInstance w = make_window(spec, n);
  const std::int64_t j_lo = w.index_lo + 1;
  const std::int64_t j_hi = w.index_hi;
  const std::int64_t a1 = spec.a1;
  const std::int64_t b1 = spec.b1;
  const std::int64_t bound = a1 * j_hi + b1;

  CompensatedSum correction;
  for (std::int64_t p : simple_sieve(isqrt64(bound))) {
    if (a1 % p == 0) continue;
    int e = 0;
    std::int64_t pk = p;
    while (true) {
      // Indices hit by p^k solve a1*j == -b1 (mod p^k).
      const std::int64_t bm = ((b1 % pk) + pk) % pk;
      const std::int64_t c = static_cast<std::int64_t>(
          static_cast<__int128>((pk - bm) % pk) * mod_inverse(a1, pk) % pk);
      const std::int64_t hits =
          floor_div(j_hi - c, pk) - floor_div(j_lo - 1 - c, pk);
      if (hits < 1) break;
      ++e;
      if (pk > bound / p) break;
      pk *= p;
    }
    if (e >= 2) {
      correction.add((e - 1) * std::log(static_cast<double>(p)));
    }
  }
  return correction.value();
}

}  // namespace lcmlab
