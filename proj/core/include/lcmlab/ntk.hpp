#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace lcmlab {

// Arbitrary-precision integer and exact rational. Rationals are kept in
// canonical form (gcd(num, den) = 1, den > 0) and compare by exact integer
// cross-multiplication; floating point never enters a membership predicate.
using BigInt = mpz_class;
using Rational = mpq_class;

/// gcd of two 64-bit integers; nonnegative, gcd(0, 0) = 0.
std::int64_t gcd(std::int64_t x, std::int64_t y);

/// Quotient rounded toward -infinity. den must be nonzero.
std::int64_t floor_div(std::int64_t num, std::int64_t den);

/// x * y with overflow detection; throws std::overflow_error.
std::int64_t checked_mul(std::int64_t x, std::int64_t y);

/// x + y with overflow detection; throws std::overflow_error.
std::int64_t checked_add(std::int64_t x, std::int64_t y);

/// Canonicalized num/den. den must be nonzero.
Rational make_rational(std::int64_t num, std::int64_t den);

/// Largest integer <= q.
BigInt rational_floor(const Rational& q);

/// "9/4" or "3" when the denominator is 1.
std::string rational_str(const Rational& q);

/// Count of integers in [1, a] coprime to a. Rejects a <= 0.
std::int64_t euler_phi(std::int64_t a);

/// The reduced residue system R(a): integers in [1, a] coprime to a,
/// ascending. Rejects a <= 0.
std::vector<std::int64_t> residue_set(std::int64_t a);

/// Inverse of x modulo mod (mod >= 1, gcd(x, mod) = 1), in [0, mod).
std::int64_t mod_inverse(std::int64_t x, std::int64_t mod);

/// The unique r' in R(a) with r * r' == b0 (mod a). Both r and b0 must lie
/// in R(a); the map r -> r' is a bijection of R(a).
std::int64_t companion_residue(std::int64_t r, std::int64_t b0, std::int64_t a);

// A progression window lcm{a*i + b : m*n < i <= l*n} together with its
// normalized form. The reduction divides out d = gcd(a, b); the shift then
// rewrites b1 = b0 + q*a1 with b0 in R(a1), so a1*i + b1 = b0 + a1*(i + q).
struct ProgressionSpec {
  std::int64_t a{};   // step, >= 1
  std::int64_t b{};   // offset, a + b >= 1
  std::int64_t l{};   // window upper coefficient, l > m
  std::int64_t m{};   // window lower coefficient, >= 0
  std::int64_t d{};   // gcd(a, b)
  std::int64_t a1{};  // a / d
  std::int64_t b1{};  // b / d, gcd(a1, b1) = 1
  std::int64_t b0{};  // shifted offset in R(a1), 1 <= b0 <= a1
  std::int64_t q{};   // b1 = b0 + q * a1 (may be negative)
};

/// Validates the window hypotheses (a >= 1, a + b >= 1, l > m >= 0) and
/// fills the reduced and shifted forms. Throws std::invalid_argument naming
/// the violated hypothesis.
ProgressionSpec normalize(std::int64_t a, std::int64_t b, std::int64_t l,
                          std::int64_t m);

}  // namespace lcmlab
