#include "kissdp/real.hpp"

#include <cstring>
#include <stdexcept>
#include <vector>

namespace kissdp {

namespace {
thread_local mpfr_prec_t g_default_bits = 256;
}

mpfr_prec_t Real::default_bits() { return g_default_bits; }

void Real::set_default_bits(mpfr_prec_t bits) {
  if (bits < MPFR_PREC_MIN) throw std::invalid_argument("precision too small");
  g_default_bits = bits;
}

Rational Real::to_dyadic(unsigned denom_bits) const {
  if (mpfr_nan_p(v_) || mpfr_inf_p(v_)) throw std::domain_error("non-finite value in to_dyadic");
  if (mpfr_zero_p(v_)) return Rational(0);
  Real scaled(bits() + 4, 0);
  mpfr_mul_2ui(scaled.v_, v_, denom_bits, MPFR_RNDN);
  Integer z;
  mpfr_get_z(z.get_mpz_t(), scaled.v_, MPFR_RNDN);
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), denom_bits);
  Rational out(z, den);
  out.canonicalize();
  return out;
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (digits < 2) digits = 2;
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%dRe", digits - 1);
  std::vector<char> buf(digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
  return std::string(buf.data());
}

std::string Real::to_hex() const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  std::vector<char> buf(static_cast<size_t>(bits() / 4) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%Ra", v_);
  return std::string(buf.data());
}

Real Real::from_hex(const std::string& s, mpfr_prec_t bits) {
  Real r(bits, 0);
  if (s == "nan") { mpfr_set_nan(r.v_); return r; }
  if (s == "inf") { mpfr_set_inf(r.v_, 1); return r; }
  if (s == "-inf") { mpfr_set_inf(r.v_, -1); return r; }
  // base 0 auto-detects the 0x prefix emitted by %Ra
  if (mpfr_set_str(r.v_, s.c_str(), 0, MPFR_RNDN) != 0)
    throw std::invalid_argument("bad hex float: " + s);
  return r;
}

Real Real::from_decimal(const std::string& s, mpfr_prec_t bits) {
  Real r(bits, 0);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("bad decimal float: " + s);
  return r;
}

}  // namespace kissdp
