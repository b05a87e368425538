#pragma once

#include "kissdp/rational.hpp"
#include "kissdp/unipoly.hpp"

namespace kissdp {

// Degree-k Jacobi polynomial for the measure (1-u)^alpha (1+u)^beta du on
// [-1,1], in the standard normalization, computed by the exact three-term
// recurrence. Requires alpha, beta > -1.
UniPoly jacobi(int k, const Rational& alpha, const Rational& beta);

// P^n_k: Jacobi with parameters ((n-3)/2, (n-3)/2) rescaled so that
// P^n_k(1) = 1 exactly. Requires n >= 3.
UniPoly normalized_jacobi(int k, int n);

// Exact moment ratio I_{2a}/I_0 for I_m = integral of u^m (1-u^2)^s du over
// [-1,1] (odd moments vanish). Valid for any rational s > -1; used by the
// orthogonality checks for both integer and half-integer weights.
Rational even_moment_ratio(int two_a, const Rational& s);

// Exact integral of p * q * (1-u^2)^s over [-1,1], divided by I_0.
Rational weighted_inner_product(const UniPoly& p, const UniPoly& q, const Rational& s);

}  // namespace kissdp
