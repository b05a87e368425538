#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "kissdp/rational.hpp"

namespace kissdp {

// Binary float with a per-value mantissa width. New values pick up the
// thread-local default width unless a width is passed explicitly; all
// operations round to nearest. The solver sets the width once per solve, so
// everything it touches lives at one precision.
class Real {
 public:
  static mpfr_prec_t default_bits();
  static void set_default_bits(mpfr_prec_t bits);

  Real() { mpfr_init2(v_, default_bits()); mpfr_set_zero(v_, 1); }
  explicit Real(mpfr_prec_t bits, int /*tag*/) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Real(long x) { mpfr_init2(v_, default_bits()); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(int x) : Real(static_cast<long>(x)) {}
  Real(double x) { mpfr_init2(v_, default_bits()); mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(const Rational& q) { mpfr_init2(v_, default_bits()); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  Real(const Rational& q, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { v_[0] = o.v_[0]; mpfr_init2(o.v_, MPFR_PREC_MIN); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) { mpfr_swap(v_, o.v_); }
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }

  // Re-rounds the value to `bits` (used when escalating precision).
  void set_bits(mpfr_prec_t bits) { mpfr_prec_round(v_, bits, MPFR_RNDN); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend Real operator+(const Real& a, const Real& b) { Real r(prec2(a, b), 0); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, const Real& b) { Real r(prec2(a, b), 0); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, const Real& b) { Real r(prec2(a, b), 0); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator/(const Real& a, const Real& b) { Real r(prec2(a, b), 0); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a) { Real r(a.bits(), 0); mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

  friend Real abs(const Real& a) { Real r(a.bits(), 0); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real sqrt(const Real& a) { Real r(a.bits(), 0); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real max(const Real& a, const Real& b) { return (a >= b) ? a : b; }
  friend Real min(const Real& a, const Real& b) { return (a <= b) ? a : b; }

  // this += a*b with a single rounding.
  void add_mul(const Real& a, const Real& b) { mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN); }
  // this -= a*b with a single rounding.
  void sub_mul(const Real& a, const Real& b) { mpfr_fms(v_, a.v_, b.v_, v_, MPFR_RNDN); mpfr_neg(v_, v_, MPFR_RNDN); }

  Integer floor_to_int() const {
    Real t(bits(), 0);
    mpfr_floor(t.v_, v_);
    Integer z;
    mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDZ);
    return z;
  }

  // Nearest rational with denominator 2^bits.
  Rational to_dyadic(unsigned denom_bits) const;

  // Scientific decimal string with `digits` significant digits ("1.234e+01").
  std::string to_string(int digits = 20) const;
  // Exact hex dump ("0x1.8p+2" style) that round-trips at the same precision.
  std::string to_hex() const;
  static Real from_hex(const std::string& s, mpfr_prec_t bits);
  static Real from_decimal(const std::string& s, mpfr_prec_t bits);

 private:
  static mpfr_prec_t prec2(const Real& a, const Real& b) {
    return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
  }
  mpfr_t v_;
};

// RAII scope for the thread-local default mantissa width.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(mpfr_prec_t bits) : saved_(Real::default_bits()) { Real::set_default_bits(bits); }
  ~PrecisionGuard() { Real::set_default_bits(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  mpfr_prec_t saved_;
};

}  // namespace kissdp
