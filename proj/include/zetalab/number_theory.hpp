#pragma once

#include "zetalab/polynomial.hpp"

namespace zetalab {

/// C(n, k); zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

/// Coefficients of the shifted Legendre polynomial
/// P_n(x) = (1/n!) d^n/dx^n [x^n (1-x)^n], i.e. (-1)^l C(n,l) C(n+l,l).
IntPolynomial legendre_coeffs(unsigned n);

/// Exact integral of p over [0, 1].
Rational integrate_poly_01(const RatPolynomial& p);

/// lcm(1, ..., n); 1 for n <= 1.
Integer lcm_upto(unsigned n);

/// sum_{t=1}^{m} t^{-j}; zero for m = 0.
Rational generalized_harmonic(unsigned long m, unsigned j);

}  // namespace zetalab
