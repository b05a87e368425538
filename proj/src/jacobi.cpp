#include "kissdp/jacobi.hpp"

#include <stdexcept>

namespace kissdp {

UniPoly jacobi(int k, const Rational& alpha, const Rational& beta) {
  if (k < 0) throw std::invalid_argument("jacobi: negative degree");
  if (alpha <= -1 || beta <= -1) throw std::invalid_argument("jacobi: parameters must exceed -1");
  UniPoly p0(Rational(1));
  if (k == 0) return p0;
  const UniPoly u = UniPoly::variable();
  UniPoly p1 = (alpha - beta) / 2 * UniPoly(Rational(1)) + (alpha + beta + 2) / 2 * u;
  if (k == 1) return p1;
  for (int m = 2; m <= k; ++m) {
    Rational s = alpha + beta;
    Rational c0 = 2 * m * (m + s) * (2 * m + s - 2);
    Rational c1 = (2 * m + s - 1) * (2 * m + s) * (2 * m + s - 2);
    Rational c2 = (2 * m + s - 1) * (alpha * alpha - beta * beta);
    Rational c3 = 2 * (m + alpha - 1) * (m + beta - 1) * (2 * m + s);
    // c0 * P_m = (c1*u + c2) * P_{m-1} - c3 * P_{m-2}
    UniPoly pm = c1 * (u * p1) + c2 * p1 - c3 * p0;
    pm = (Rational(1) / c0) * pm;
    p0 = std::move(p1);
    p1 = std::move(pm);
  }
  return p1;
}

UniPoly normalized_jacobi(int k, int n) {
  if (n < 3) throw std::invalid_argument("normalized_jacobi: dimension must be >= 3");
  Rational a = rat(n - 3, 2);
  UniPoly p = jacobi(k, a, a);
  Rational at_one = p(Rational(1));
  if (at_one == 0) throw std::logic_error("jacobi polynomial vanishes at 1");
  return (Rational(1) / at_one) * p;
}

Rational even_moment_ratio(int two_a, const Rational& s) {
  if (two_a < 0 || two_a % 2 != 0) throw std::invalid_argument("even moment index required");
  if (s <= -1) throw std::invalid_argument("weight exponent must exceed -1");
  // I_{2a} / I_{2a-2} = (2a-1) / (2a + 2s + 1), by parts.
  Rational r = 1;
  for (int t = 1; 2 * t <= two_a; ++t) r *= Rational(2 * t - 1) / (Rational(2 * t) + 2 * s + 1);
  return r;
}

Rational weighted_inner_product(const UniPoly& p, const UniPoly& q, const Rational& s) {
  UniPoly prod = p * q;
  Rational acc(0);
  for (int m = 0; m <= prod.degree(); m += 2) acc += prod.coeff(m) * even_moment_ratio(m, s);
  return acc;
}

}  // namespace kissdp
