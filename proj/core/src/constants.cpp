#include "lcmlab/constants.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lcmlab {

namespace {

void require_residue(std::int64_t r, std::int64_t a, const char* who) {
  if (a < 1 || r < 1 || r > a || std::gcd(r, a) != 1) {
    std::ostringstream msg;
    msg << who << ": " << r << " is not in R(" << a << ")";
    throw std::invalid_argument(msg.str());
  }
}

void require_window(std::int64_t l, std::int64_t m, const char* who) {
  if (m < 0 || l <= m) {
    throw std::invalid_argument(std::string(who) +
                                ": window requires l > m >= 0");
  }
}

}  // namespace

std::int64_t rung_cap(std::int64_t r, std::int64_t a, std::int64_t l,
                      std::int64_t m) {
  require_residue(r, a, "rung_cap");
  require_window(l, m, "rung_cap");
  // a*l - (l-m)*r >= a*m >= 0, so truncating division is the floor.
  const __int128 num =
      static_cast<__int128>(a) * l - static_cast<__int128>(l - m) * r;
  const __int128 den = static_cast<__int128>(a) * (l - m);
  return static_cast<std::int64_t>(num / den);
}

Rational residue_constant_rung_sum(std::int64_t r, std::int64_t a,
                                   std::int64_t l, std::int64_t m) {
  const std::int64_t cap = rung_cap(r, a, l, m);
  Rational sum(0);
  for (std::int64_t i = 0; i < cap; ++i) {
    sum += make_rational(l - m, checked_add(r, checked_mul(a, i)));
  }
  sum += make_rational(l, checked_add(r, checked_mul(a, cap)));
  return sum;
}

Rational residue_constant(std::int64_t r, std::int64_t a, std::int64_t l,
                          std::int64_t m) {
  require_residue(r, a, "residue_constant");
  require_window(l, m, "residue_constant");
  // Branch test l >= (a+r)*m/r as integers; ties take the l/r branch.
  if (static_cast<__int128>(l) * r >= static_cast<__int128>(a + r) * m) {
    return make_rational(l, r);
  }
  return residue_constant_rung_sum(r, a, l, m);
}

AsymptoticConstant asymptotic_constant(const ProgressionSpec& spec) {
  AsymptoticConstant out;
  out.phi = euler_phi(spec.a1);
  Rational sum(0);
  for (std::int64_t r : residue_set(spec.a1)) {
    AsymptoticConstant::Entry entry;
    entry.rung_cap = rung_cap(r, spec.a1, spec.l, spec.m);
    entry.constant = residue_constant(r, spec.a1, spec.l, spec.m);
    sum += entry.constant;
    out.breakdown.emplace(r, std::move(entry));
  }
  out.value = make_rational(spec.a1, out.phi) * sum;
  return out;
}

Rational wide_window_constant(std::int64_t a, std::int64_t l, std::int64_t m) {
  if (a < 1) throw std::invalid_argument("wide_window_constant requires a >= 1");
  require_window(l, m, "wide_window_constant");
  if (static_cast<__int128>(l) < static_cast<__int128>(a + 1) * m) {
    throw std::invalid_argument(
        "wide_window_constant requires l >= (a+1)*m");
  }
  Rational harmonic(0);
  for (std::int64_t r : residue_set(a)) harmonic += make_rational(1, r);
  return Rational(BigInt(a) * l) / euler_phi(a) * harmonic;
}

Rational integer_window_constant(std::int64_t l, std::int64_t m) {
  require_window(l, m, "integer_window_constant");
  if (l >= 2 * m) return Rational(static_cast<long>(l));
  const std::int64_t t = l - m;
  Rational sum = make_rational(l, l / t);  // positive operands: / is floor
  for (std::int64_t i = 1; i <= m / t; ++i) sum += make_rational(t, i);
  return sum;
}

}  // namespace lcmlab
