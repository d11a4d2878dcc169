#include "lcmlab/residue_decomp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lcmlab/constants.hpp"
#include "lcmlab/lcm_engine.hpp"
#include "lcmlab/primes.hpp"
#include "lcmlab/summation.hpp"

namespace lcmlab {

double theta(double x, std::int64_t h, std::int64_t k) {
  if (h < 1) throw std::invalid_argument("theta requires h >= 1");
  if (std::gcd(h, k) != 1) {
    throw std::invalid_argument("theta requires gcd(h, k) = 1");
  }
  if (!(x >= 2.0)) return 0.0;
  if (x >= 9.0e18) throw std::invalid_argument("theta bound is out of range");
  const auto limit = static_cast<std::int64_t>(std::floor(x));
  const std::int64_t kk = ((k % h) + h) % h;
  CompensatedSum sum;
  enumerate_primes(limit, [&](std::int64_t p) {
    if (p % h == kk) sum.add(std::log(static_cast<double>(p)));
  });
  return sum.value();
}

RationalInterval IntervalFamily::base() const {
  return {Rational(0), Rational(static_cast<long>(base_hi))};
}

RationalInterval IntervalFamily::rung(std::int64_t i) const {
  if (i < 0 || i >= rung_count) {
    throw std::out_of_range("rung index outside the truncated family");
  }
  const std::int64_t den = companion + step * i;
  return {make_rational(num_lo, den), make_rational(num_hi, den)};
}

std::vector<RationalInterval> IntervalFamily::merged() const {
  std::vector<RationalInterval> intervals;
  intervals.push_back(base());
  for (std::int64_t i = 0; i < rung_count; ++i) {
    // Upper endpoints decrease in i; once a rung sinks below the base top
    // it contributes no further positive values.
    if (static_cast<__int128>(num_hi) <=
        static_cast<__int128>(base_hi) * (companion + step * i)) {
      break;
    }
    intervals.push_back(rung(i));
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const RationalInterval& x, const RationalInterval& y) {
              return x.lo < y.lo;
            });
  std::vector<RationalInterval> out;
  for (auto& iv : intervals) {
    // Half-open intervals: touching endpoints coalesce.
    if (!out.empty() && iv.lo <= out.back().hi) {
      if (iv.hi > out.back().hi) out.back().hi = iv.hi;
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

namespace {

void require_reduced_residue(const ProgressionSpec& spec, std::int64_t r,
                             const char* who) {
  if (r < 1 || r > spec.a1 || std::gcd(r, spec.a1) != 1) {
    std::ostringstream msg;
    msg << who << ": " << r << " is not in R(" << spec.a1 << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

IntervalFamily build_family(const ProgressionSpec& spec, std::int64_t n,
                            std::int64_t r) {
  require_reduced_residue(spec, r, "build_family");
  const WindowInstance w = make_window(spec, n);
  IntervalFamily f;
  f.residue = r;
  f.companion = companion_residue(r, spec.b0, spec.a1);
  f.rung_cap = rung_cap(f.companion, spec.a1, spec.l, spec.m);
  f.step = spec.a1;
  f.base_hi = (spec.l - spec.m) * n;
  f.num_lo = spec.b1 + spec.a1 * w.index_lo;
  f.num_hi = spec.b1 + spec.a1 * w.index_hi;
  f.rung_count = f.num_hi >= 2 * f.companion
                     ? floor_div(f.num_hi - 2 * f.companion, 2 * f.step) + 1
                     : 0;
  return f;
}

namespace {

// Rung membership with the rung index capped at i_cap: some i in [0, i_cap]
// with num_lo < p*(r' + a1*i) <= num_hi, solved in exact integer arithmetic.
bool member_impl(std::int64_t p, const IntervalFamily& family,
                 std::int64_t i_cap) {
  if (p < 2) throw std::invalid_argument("member requires a prime (p >= 2)");
  const std::int64_t a1 = family.step;
  if ((((p - family.residue) % a1) + a1) % a1 != 0) {
    throw std::invalid_argument(
        "member: p is not congruent to the family residue");
  }
  if (p <= family.base_hi) return true;
  const __int128 pr = static_cast<__int128>(p) * family.companion;
  const __int128 pa = static_cast<__int128>(p) * a1;
  const __int128 hi_slack = static_cast<__int128>(family.num_hi) - pr;
  if (hi_slack < 0) return false;
  __int128 i_hi = hi_slack / pa;
  const __int128 lo_slack = static_cast<__int128>(family.num_lo) - pr;
  const __int128 i_lo = lo_slack < 0 ? 0 : lo_slack / pa + 1;
  if (i_hi > i_cap) i_hi = i_cap;
  return i_lo <= i_hi;
}

}  // namespace

bool member(std::int64_t p, const IntervalFamily& family) {
  return member_impl(p, family, family.rung_count - 1);
}

bool member_finite_union(std::int64_t p, const IntervalFamily& family) {
  return member_impl(p, family,
                     std::min(family.rung_cap, family.rung_count - 1));
}

bool finite_form_valid(const ProgressionSpec& spec, std::int64_t n,
                       std::int64_t r) {
  const IntervalFamily f = build_family(spec, n, r);
  const __int128 rhs = static_cast<__int128>(f.base_hi) *
                       (f.companion + f.step * (f.rung_cap + 1));
  return static_cast<__int128>(f.num_hi) < rhs;
}

double residue_log_sum(const ProgressionSpec& spec, std::int64_t n,
                       std::int64_t r, SupportSumMethod method) {
  require_reduced_residue(spec, r, "residue_log_sum");
  if (method == SupportSumMethod::direct) {
    const PrimePowerMap map = factor_window_sieve_reduced(spec, n);
    const std::int64_t cls = r % spec.a1;
    CompensatedSum sum;
    for (const auto& [p, e] : map.entries) {
      if (p % spec.a1 == cls) sum.add(std::log(static_cast<double>(p)));
    }
    return sum.value();
  }

  const IntervalFamily family = build_family(spec, n, r);
  const auto intervals = family.merged();
  const BigInt top = rational_floor(intervals.back().hi);
  if (top < 2) return 0.0;
  const std::int64_t limit = mpz_get_si(top.get_mpz_t());
  const std::int64_t cls = r % spec.a1;
  // theta(hi) - theta(lo) summed over the disjoint intervals, evaluated in
  // one pass: each class prime is counted in the interval holding it.
  CompensatedSum sum;
  std::size_t idx = 0;
  enumerate_primes(limit, [&](std::int64_t p) {
    if (p % spec.a1 != cls) return;
    while (idx < intervals.size() &&
           mpq_cmp_si(intervals[idx].hi.get_mpq_t(), p, 1) < 0) {
      ++idx;
    }
    if (idx == intervals.size()) return;
    if (mpq_cmp_si(intervals[idx].lo.get_mpq_t(), p, 1) < 0) {
      sum.add(std::log(static_cast<double>(p)));
    }
  });
  return sum.value();
}

double estimate_log_lcm(const ProgressionSpec& spec, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("estimate_log_lcm requires n >= 1");
  const AsymptoticConstant constant = asymptotic_constant(spec);
  const Rational scaled = constant.value * Rational(static_cast<long>(n));
  return scaled.get_d() + std::log(static_cast<double>(spec.d));
}

}  // namespace lcmlab
