#pragma once

#include <string>

#include <json.hpp>

#include "zetalab/polynomial.hpp"
#include "zetalab/zeta_combination.hpp"

namespace zetalab {

/// An enclosure: the true quantity lies in [value - error_bound, value + error_bound].
///
/// Both ends are exact rationals; decimal strings are produced only at the
/// output boundary, where rounding is folded back into the error bound.
struct HighPrecisionValue {
    Rational value = 0;
    Rational error_bound = 0;

    bool contains(const Rational& x) const;

    /// Value rounded to `digits` significant digits, error widened to match.
    HighPrecisionValue rounded(unsigned digits) const;

    /// Scientific-notation decimal with `digits` significant digits.
    std::string value_string(unsigned digits) const;

    /// Error bound rounded upward to three significant digits.
    std::string error_string() const;

    /// {"value": ..., "error_bound": ...}, value rounded first.
    nlohmann::json to_json(unsigned digits) const;
};

HighPrecisionValue hp_abs(const HighPrecisionValue& a);
HighPrecisionValue hp_mul(const HighPrecisionValue& a, const HighPrecisionValue& b);
/// Throws std::domain_error when the divisor's enclosure contains zero.
HighPrecisionValue hp_div(const HighPrecisionValue& a, const HighPrecisionValue& b);

/// Round-to-nearest scientific notation, e.g. "1.2443e+01". "0" for zero.
std::string format_scientific(const Rational& q, unsigned digits);

/// Like format_scientific but rounded away from zero.
std::string format_scientific_up(const Rational& q, unsigned digits);

/// Approximate log10|q| (q != 0), accurate to well under one unit.
double log10_abs(const Rational& q);

Rational pow10(long e);

/// zeta(j) for integer j >= 2 with error_bound <= 10^-precision.
///
/// Euler-Maclaurin summation in exact rational arithmetic; the remainder
/// after the last Bernoulli term is bounded by the first omitted term, which
/// holds for real arguments. Throws std::invalid_argument for j < 2 or
/// precision < 10.
HighPrecisionValue zeta_value(int j, unsigned precision);

/// sum q_j zeta(j) + q_0 with absolute error <= 10^-precision.
HighPrecisionValue eval_combination(const ZetaCombination& combo, unsigned precision);

/// Same, but refined until the error is below 10^-(digits+2) relative to
/// the value (or the value is exactly zero).
HighPrecisionValue eval_combination_relative(const ZetaCombination& combo, unsigned digits);

/// pi from MPFR's constant routine, enclosed by directed rounding.
HighPrecisionValue pi_value(unsigned precision);

/// e^x for integer x, enclosed by directed rounding with relative error
/// below 10^-precision.
HighPrecisionValue exp_value(long x, unsigned precision);

}  // namespace zetalab
