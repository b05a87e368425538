#include "kissdp/rational.hpp"

#include <algorithm>
#include <cctype>

namespace kissdp {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Integer num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // Decimal / scientific form.
  bool neg = false;
  size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
  std::string digits;
  long frac_len = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("bad number: " + text);
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_len;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      throw std::invalid_argument("bad number: " + text);
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad number: " + text);
  long exp10 = 0;
  if (i < s.size()) {  // exponent part
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
    if (i >= s.size()) throw std::invalid_argument("bad number: " + text);
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("bad number: " + text);
      exp10 = exp10 * 10 + (s[i] - '0');
      if (exp10 > 100000) throw std::invalid_argument("exponent overflow: " + text);
    }
    if (eneg) exp10 = -exp10;
  }
  Integer mant(digits.empty() ? "0" : digits);
  if (neg) mant = -mant;
  long e = exp10 - frac_len;
  Integer p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(e >= 0 ? e : -e));
  Rational q = (e >= 0) ? Rational(mant * p10) : Rational(mant, p10);
  q.canonicalize();
  return q;
}

Rational round_to_dyadic(const Rational& x, unsigned bits) {
  // round(x * 2^bits) with ties to even, then divide back.
  Integer num = x.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  const Integer& den = x.get_den();
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer twice_r = 2 * r;
  int cmp = mpz_cmp(twice_r.get_mpz_t(), den.get_mpz_t());
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  Integer two_b = 1;
  mpz_mul_2exp(two_b.get_mpz_t(), two_b.get_mpz_t(), bits);
  Rational out(q, two_b);
  out.canonicalize();
  return out;
}

namespace {

// Decimal digits of |num/den| scaled so that the leading digit is first;
// returns mantissa digits (rounded half-even to max_digits) and the decimal
// exponent: value = 0.mantissa * 10^exp10 in the usual normalized sense
// digits[0].digits[1..] * 10^(exp10-1). exact=true when no rounding occurred.
struct DecimalParts {
  std::string digits;
  long exp10 = 0;
  bool exact = true;
};

DecimalParts decimal_parts(const Rational& x, unsigned max_digits) {
  DecimalParts out;
  Integer num = abs(x.get_num());
  const Integer& den = x.get_den();
  // Order of magnitude: find e with 10^(e-1) <= num/den < 10^e.
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10)) + 1;
  auto cmp_pow = [&](long k) {
    // compare num/den with 10^k
    Integer lhs = num, rhs = den;
    if (k >= 0) {
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
      rhs *= p;
    } else {
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-k));
      lhs *= p;
    }
    return mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
  };
  while (cmp_pow(e) >= 0) ++e;
  while (cmp_pow(e - 1) < 0) --e;
  // Now 10^(e-1) <= |x| < 10^e; mantissa = round(|x| * 10^(max_digits - e)).
  long shift = static_cast<long>(max_digits) - e;
  Integer lhs = num, rhs = den;
  if (shift >= 0) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    lhs *= p;
  } else {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    rhs *= p;
  }
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
  out.exact = (r == 0);
  Integer twice_r = 2 * r;
  int cmp = mpz_cmp(twice_r.get_mpz_t(), rhs.get_mpz_t());
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  out.digits = q.get_str();
  out.exp10 = e;
  if (out.digits.size() > max_digits) {  // rounding carried into a new digit
    out.digits.pop_back();
    out.exp10 += 1;
  }
  return out;
}

}  // namespace

std::string to_decimal_string(const Rational& x, unsigned max_digits) {
  if (max_digits == 0) max_digits = 1;
  if (x == 0) return "0";
  std::string sign = (x < 0) ? "-" : "";
  // Exact terminating expansion iff den = 2^a 5^b.
  Integer den = x.get_den();
  unsigned long a = mpz_scan1(den.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(den.get_mpz_t(), den.get_mpz_t(), a);
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 5);
  bool terminating = (den == 1);

  DecimalParts p = decimal_parts(x, max_digits);
  std::string d = p.digits;
  if (terminating && p.exact) {
    // strip trailing zeros of the mantissa
    while (d.size() > 1 && d.back() == '0') d.pop_back();
  }
  long e = p.exp10;
  // Prefer plain notation when it stays compact.
  if (e >= 1 && e <= static_cast<long>(d.size()) + 6 && e <= 18) {
    std::string intpart = d.substr(0, std::min<size_t>(d.size(), e));
    while (static_cast<long>(intpart.size()) < e) intpart.push_back('0');
    std::string frac = (static_cast<long>(d.size()) > e) ? d.substr(e) : "";
    return sign + intpart + (frac.empty() ? "" : "." + frac);
  }
  if (e <= 0 && e >= -4) {
    return sign + "0." + std::string(-e, '0') + d;
  }
  std::string frac = d.substr(1);
  return sign + d.substr(0, 1) + (frac.empty() ? "" : "." + frac) + "e" +
         (e - 1 >= 0 ? "+" : "") + std::to_string(e - 1);
}

int agreed_significant_digits(const Rational& a, const Rational& b, int cap) {
  if (a == b) return cap;
  if (sgn(a) != sgn(b)) return 0;
  Rational diff = abs(a - b);
  Rational mag = std::max(abs(a), abs(b));
  // digits = floor(log10(mag / diff)); count by repeated comparison.
  int digits = 0;
  Rational ratio = mag / diff;
  Rational p = 10;
  while (digits < cap && ratio >= p) {
    p *= 10;
    ++digits;
  }
  return digits;
}

}  // namespace kissdp
