#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kissdp {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is the invariant everything downstream
// relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "p/q" or a plain decimal like "-12.375" or "2.5e-3".
Rational parse_rational(const std::string& text);

inline Integer floor_int(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

inline Rational pow_int(const Rational& base, unsigned long e) {
  Rational r = 1;
  Rational b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Nearest rational with denominator 2^bits (ties to even). bits = 0 rounds
// to the nearest integer.
Rational round_to_dyadic(const Rational& x, unsigned bits);

// Decimal rendering. Produces the exact expansion when the denominator is
// of the form 2^a 5^b and at most max_digits significant digits are needed;
// otherwise rounds (half to even) to max_digits significant digits.
// Deterministic, locale-independent; output re-parses to the printed value
// exactly.
std::string to_decimal_string(const Rational& x, unsigned max_digits);

// Number of leading significant decimal digits on which a and b agree
// (0 if they differ in sign or order of magnitude; capped at `cap`).
int agreed_significant_digits(const Rational& a, const Rational& b, int cap = 40);

}  // namespace kissdp
