#pragma once

#include <stdexcept>

#include "zetalab/rational_function.hpp"

namespace zetalab {

/// M(s) = integral_0^1 x^s R(x) dx = sum_l a_l / (s + l + 1).
///
/// This coefficient-sum form is the reference moment; everything else is
/// checked against it. Throws std::invalid_argument for the zero polynomial.
RationalFunction moment_from_coeffs(const IntPolynomial& poly);

/// Product form of the shifted-Legendre moment,
///   M_n(s) = (-1)^n s(s-1)...(s-n+1) / ((s+1)(s+2)...(s+n+1)).
RationalFunction moment_closed_form(unsigned n);

/// The differentiated series summand G(s) = d^v/ds^v [M(s)^r] together with
/// the inputs it came from. c_v = (-1)^v sum_{k>=0} G(k).
struct SummandSpec {
    IntPolynomial poly;
    unsigned r = 0;
    unsigned v = 0;
    RationalFunction summand;
    long decay_degree = 0;
};

/// Throws std::invalid_argument("series diverges") for r < 2, and for any
/// summand decaying slower than s^-2.
SummandSpec build_summand(const IntPolynomial& poly, int r, int v);

/// G(k), exact.
Rational term_value(const SummandSpec& spec, unsigned long k);

/// sum_{k=0}^{K-1} G(k), exact.
Rational series_partial_sum(const SummandSpec& spec, unsigned long K);

/// Raised when a tail bound cannot be certified at the requested cutoff.
class IncreaseK : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Certified upper bound on |sum_{k>=K} G(k)|.
///
/// With u = s + 1 and G = N/D, for u >= K the envelope |G| <= C u^-d holds
/// with d = decay_degree and
///   C = (sum_i |n_i| K^(i - deg N)) / (lead D - sum_{i<deg D} max(0, -d_i) K^(i - deg D)),
/// so the tail is at most C * integral_K^inf u^-d du = C / ((d-1) K^(d-1)).
/// Both factors are nonincreasing in K. Throws IncreaseK when the
/// denominator lower bound is not positive at K.
Rational tail_bound(const SummandSpec& spec, unsigned long K);

/// Precomputed form of tail_bound for repeated queries on one summand.
class TailEnvelope {
public:
    explicit TailEnvelope(const SummandSpec& spec);
    Rational bound(unsigned long K) const;
    long decay_degree() const noexcept { return decay_; }

private:
    RatPolynomial num_u_;
    RatPolynomial den_u_;
    long decay_;
};

}  // namespace zetalab
