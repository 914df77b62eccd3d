#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace apollo {

// All core arithmetic is exact: arbitrary-precision integers and rationals.
// Floating point is confined to the render module.
using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A reflection or involution that fails to map the lattice to itself.
struct NonIntegral : Error {
  using Error::Error;
};

inline int sign(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

// mpq_class(n, d) does not canonicalize on its own.
inline Rat make_rat(const Int& num, const Int& den) {
  if (sign(den) == 0) throw Error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_perfect_square(const Int& x) {
  return sign(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

inline Int isqrt_exact(const Int& x) {
  if (!is_perfect_square(x)) throw Error("isqrt_exact: " + x.get_str() + " is not a perfect square");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace apollo
