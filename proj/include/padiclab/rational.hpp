#pragma once

#include <gmpxx.h>

#include <string>

#include "padiclab/errors.hpp"

namespace padiclab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonicalized rational. mpq_class constructors do not reduce, so every
/// rational built from a numerator/denominator pair must go through here.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw division_by_zero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer pow_integer(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// base^e for integer e (negative exponents allowed, base != 0).
inline Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw division_by_zero("0 raised to a negative power");
    return Rational(0);
  }
  Rational r;
  unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), mag);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), mag);
  if (e < 0) {
    mpq_inv(r.get_mpq_t(), r.get_mpq_t());
  }
  r.canonicalize();
  return r;
}

/// Non-negative remainder of a mod m (m > 0).
inline Integer mod_positive(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Modular inverse of a mod m; a must be invertible.
inline Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw domain_error("element not invertible in the given modulus");
  return r;
}

/// p-adic valuation of a nonzero integer.
inline long valuation(Integer n, const Integer& p) {
  if (n == 0) throw domain_error("valuation of exact zero is undefined");
  long v = 0;
  Integer q, r;
  for (;;) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    n = q;
    ++v;
  }
  return v;
}

inline long valuation(const Rational& q, const Integer& p) {
  if (q == 0) throw domain_error("valuation of exact zero is undefined");
  return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

/// Deterministic primality check by trial division. Intended for the small
/// primes this library works with; rejects candidates that do not fit in an
/// unsigned long rather than fall back to a probabilistic test.
inline bool is_prime(const Integer& p) {
  if (p < 2) return false;
  if (!p.fits_ulong_p()) throw domain_error("prime candidate too large for deterministic check");
  unsigned long n = p.get_ui();
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& n) { return n.get_str(); }

}  // namespace padiclab
