#include "lcmlab/ntk.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lcmlab {

std::int64_t gcd(std::int64_t x, std::int64_t y) { return std::gcd(x, y); }

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  const std::int64_t q = num / den;
  const std::int64_t r = num % den;
  return (r != 0 && ((r < 0) != (den < 0))) ? q - 1 : q;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw std::overflow_error("integer overflow in 64-bit multiply");
  }
  return out;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_add_overflow(x, y, &out)) {
    throw std::overflow_error("integer overflow in 64-bit add");
  }
  return out;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

BigInt rational_floor(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(),
             q.get_den().get_mpz_t());
  return out;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::int64_t euler_phi(std::int64_t a) {
  if (a <= 0) throw std::invalid_argument("euler_phi requires a >= 1");
  std::int64_t result = a;
  std::int64_t x = a;
  for (std::int64_t p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      result -= result / p;
      while (x % p == 0) x /= p;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

std::vector<std::int64_t> residue_set(std::int64_t a) {
  if (a <= 0) throw std::invalid_argument("residue_set requires a >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t r = 1; r <= a; ++r) {
    if (std::gcd(r, a) == 1) out.push_back(r);
  }
  return out;
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t mod) {
  if (mod <= 0) throw std::invalid_argument("mod_inverse requires mod >= 1");
  if (mod == 1) return 0;
  std::int64_t a = ((x % mod) + mod) % mod;
  std::int64_t b = mod;
  std::int64_t u0 = 1;
  std::int64_t u1 = 0;
  while (b != 0) {
    const std::int64_t t = a / b;
    a -= t * b;
    std::swap(a, b);
    u0 -= t * u1;
    std::swap(u0, u1);
  }
  if (a != 1) {
    throw std::invalid_argument("mod_inverse requires coprime arguments");
  }
  return ((u0 % mod) + mod) % mod;
}

namespace {

void require_in_residue_system(std::int64_t r, std::int64_t a,
                               const char* who) {
  if (a < 1) {
    throw std::invalid_argument(std::string(who) + ": modulus must be >= 1");
  }
  if (r < 1 || r > a || std::gcd(r, a) != 1) {
    std::ostringstream msg;
    msg << who << ": " << r << " is not in R(" << a << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

std::int64_t companion_residue(std::int64_t r, std::int64_t b0,
                               std::int64_t a) {
  require_in_residue_system(r, a, "companion_residue");
  require_in_residue_system(b0, a, "companion_residue");
  const std::int64_t inv = mod_inverse(r, a);
  auto rp = static_cast<std::int64_t>(static_cast<__int128>(b0) * inv % a);
  if (rp == 0) rp = a;  // only for a = 1
  return rp;
}

ProgressionSpec normalize(std::int64_t a, std::int64_t b, std::int64_t l,
                          std::int64_t m) {
  if (a < 1) {
    throw std::invalid_argument("progression requires a >= 1");
  }
  if (checked_add(a, b) < 1) {
    throw std::invalid_argument("progression requires a + b >= 1");
  }
  if (m < 0) {
    throw std::invalid_argument("window requires m >= 0");
  }
  if (l <= m) {
    throw std::invalid_argument("window requires l > m");
  }
  ProgressionSpec s;
  s.a = a;
  s.b = b;
  s.l = l;
  s.m = m;
  s.d = std::gcd(a, b);  // b = 0 gives d = a
  s.a1 = a / s.d;
  s.b1 = b / s.d;
  if (s.a1 == 1) {
    s.b0 = 1;
  } else {
    s.b0 = ((s.b1 % s.a1) + s.a1) % s.a1;  // nonzero: gcd(a1, b1) = 1
  }
  s.q = (s.b1 - s.b0) / s.a1;
  return s;
}

}  // namespace lcmlab
