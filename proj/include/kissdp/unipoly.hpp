#pragma once

#include <string>
#include <vector>

#include "kissdp/rational.hpp"

namespace kissdp {

// Dense polynomial in u with exact rational coefficients. The trailing
// coefficient list never ends in zeros, so degree() is just the last index.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& c) { coeffs_.push_back(c); trim(); }
  explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly variable() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
  static UniPoly monomial(int degree, const Rational& c = Rational(1));

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  void set_coeff(int k, const Rational& c);

  Rational operator()(const Rational& x) const;  // Horner, exact

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { a -= b; return a; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Canonical dump: "c0*u^0 + c1*u^1 + ..." with zero terms omitted; "0" for
  // the zero polynomial.
  std::string to_string() const;

 private:
  void trim() { while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back(); }
  std::vector<Rational> coeffs_;
};

}  // namespace kissdp
