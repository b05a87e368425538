#pragma once

#include <stdexcept>
#include <vector>

#include "kissdp/tripoly.hpp"

namespace kissdp {

// Thrown when the expansion of ((1-u^2)(1-v^2))^{k/2} P^{n-1}_k(...) would
// leave a fractional power behind, i.e. the equal-parameter parity structure
// was violated. This is an internal consistency guard; it cannot fire for
// valid inputs.
struct ParityViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Square matrix of trivariate polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(int size) : size_(size), entries_(size * size) {
    if (size <= 0) throw std::invalid_argument("matrix size must be positive");
  }

  int size() const { return size_; }
  TriPoly& at(int i, int j) { return entries_[i * size_ + j]; }
  const TriPoly& at(int i, int j) const { return entries_[i * size_ + j]; }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }

  // Entrywise substitution by univariate targets.
  std::vector<std::vector<UniPoly>> substitute_uni(const UniPoly& su, const UniPoly& sv,
                                                   const UniPoly& st) const;
  // Entrywise substitution by trivariate targets.
  PolyMatrix substitute(const TriPoly& su, const TriPoly& sv, const TriPoly& st) const;
  // Entrywise exact evaluation.
  std::vector<std::vector<Rational>> evaluate(const Rational& u, const Rational& v,
                                              const Rational& t) const;

 private:
  int size_ = 0;
  std::vector<TriPoly> entries_;
};

// The (d+1-k) x (d+1-k) truncation of Y^n_k: entry (i,j) is
//   u^i v^j ((1-u^2)(1-v^2))^{k/2} P^{n-1}_k((t - uv)/sqrt((1-u^2)(1-v^2)))
// expanded into a polynomial through the parity of equal-parameter Jacobi
// polynomials. Requires n >= 3 and 0 <= k <= d.
PolyMatrix y_matrix(int n, int k, int d);

// Entrywise average over the six permutations of (u, v, t). The result is a
// symmetric matrix whose entries are symmetric polynomials.
PolyMatrix symmetrize(const PolyMatrix& y);

// S^n_k = symmetrize(y_matrix(n, k, d)).
PolyMatrix s_matrix(int n, int k, int d);

}  // namespace kissdp
