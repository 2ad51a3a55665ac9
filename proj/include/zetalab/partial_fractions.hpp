#pragma once

#include <stdexcept>
#include <vector>

#include "zetalab/rational_function.hpp"

namespace zetalab {

/// One term coeff / (s + pole)^order.
struct PoleTerm {
    long pole;
    unsigned order;
    Rational coeff;

    friend bool operator==(const PoleTerm&, const PoleTerm&) = default;
};

/// Partial-fraction expansion over linear factors (s + m), m >= 1.
///
/// Terms are sorted by pole, then by decreasing order; zero coefficients are
/// dropped. polynomial_part is always zero because improper inputs are rejected.
struct PartialFractionForm {
    std::vector<PoleTerm> terms;
    RatPolynomial polynomial_part;

    /// Rebuilds the rational function the terms came from.
    RationalFunction recombine() const;

    /// sum over m of the coefficient of (s+m)^-1.
    Rational residue_sum() const;

    /// Coefficient of (s+pole)^-order, zero if absent.
    Rational coeff(long pole, unsigned order) const;
};

/// Raised for denominators that do not split into factors (s + m), m >= 1.
class UnsupportedPole : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Factor multiplicities of a monic denominator, as (m, e) pairs with
/// den = prod (s+m)^e. Throws UnsupportedPole if den does not split that way.
std::vector<std::pair<long, unsigned>> integer_pole_factorization(const RatPolynomial& den);

PartialFractionForm partial_fractions(const RationalFunction& f);

}  // namespace zetalab
