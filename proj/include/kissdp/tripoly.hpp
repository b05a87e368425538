#pragma once

#include <array>
#include <map>
#include <string>

#include "kissdp/rational.hpp"
#include "kissdp/unipoly.hpp"

namespace kissdp {

// Exponent triple of u^a v^b t^c. The default array ordering gives the
// lexicographic term order with u before v before t, which is the canonical
// order used for serialization and constraint generation.
using Monomial = std::array<int, 3>;

inline int total_degree(const Monomial& m) { return m[0] + m[1] + m[2]; }

// Sparse polynomial in (u, v, t) with exact rational coefficients; zero
// coefficients are never stored.
class TriPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  TriPoly() = default;
  TriPoly(const Rational& c) { add_term({0, 0, 0}, c); }
  static TriPoly monomial(const Monomial& m, const Rational& c = Rational(1));
  static TriPoly u() { return monomial({1, 0, 0}); }
  static TriPoly v() { return monomial({0, 1, 0}); }
  static TriPoly t() { return monomial({0, 0, 1}); }
  static TriPoly from_uni(const UniPoly& p, int var);  // var: 0=u, 1=v, 2=t

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // total degree, -1 for zero
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  Rational operator()(const Rational& u, const Rational& v, const Rational& t) const;

  TriPoly operator-() const;
  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  friend TriPoly operator+(TriPoly a, const TriPoly& b) { a += b; return a; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { a -= b; return a; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(const Rational& s, const TriPoly& a);
  friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }

  TriPoly pow(int e) const;

  // Applies a permutation of the variables: perm[i] = index the i-th variable
  // maps to, e.g. {1,0,2} swaps u and v.
  TriPoly permute_vars(const std::array<int, 3>& perm) const;

  // Exact substitution u -> su, v -> sv, t -> st.
  TriPoly substitute(const TriPoly& su, const TriPoly& sv, const TriPoly& st) const;
  // Substitution by univariate targets; the result lives in u alone.
  UniPoly substitute_uni(const UniPoly& su, const UniPoly& sv, const UniPoly& st) const;

  // Canonical dump: "c*u^a*v^b*t^c" terms joined by " + " in lex order.
  std::string to_string() const;

 private:
  TermMap terms_;
};

}  // namespace kissdp
