#pragma once

#include "zetalab/polynomial.hpp"

namespace zetalab {

/// Quotient of two rational polynomials in one variable s.
///
/// Always held in canonical form: monic denominator, numerator and
/// denominator coprime. Zero is 0/1. Two values are equal iff their canonical
/// parts are equal coefficient-wise.
class RationalFunction {
public:
    /// The zero function.
    RationalFunction();

    /// Normalizes num/den. Throws std::domain_error when den is zero.
    RationalFunction(RatPolynomial num, RatPolynomial den);

    explicit RationalFunction(RatPolynomial poly);

    /// 1/(s+m)^order
    static RationalFunction pole(long m, unsigned order = 1, const Rational& coeff = Rational(1));

    /// Wraps parts that the caller knows are already canonical.
    static RationalFunction from_canonical(RatPolynomial num, RatPolynomial den);

    const RatPolynomial& numerator() const noexcept { return num_; }
    const RatPolynomial& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }

    /// deg(den) - deg(num); meaningless for zero.
    long decay_degree() const noexcept { return den_.degree() - num_.degree(); }

    /// Value at a rational point; throws std::domain_error at a pole.
    Rational evaluate(const Rational& s) const;

    RationalFunction operator-() const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    RatPolynomial num_;
    RatPolynomial den_;
};

/// Canonical form of num/den.
RationalFunction rf_normalize(const RatPolynomial& num, const RatPolynomial& den);

RationalFunction rf_add(const RationalFunction& f, const RationalFunction& g);
RationalFunction rf_sub(const RationalFunction& f, const RationalFunction& g);
RationalFunction rf_mul(const RationalFunction& f, const RationalFunction& g);
RationalFunction rf_scale(const RationalFunction& f, const Rational& c);

/// f^r for r >= 1.
RationalFunction rf_pow(const RationalFunction& f, unsigned r);

/// v-th derivative in s; v = 0 returns f.
RationalFunction rf_derivative(const RationalFunction& f, unsigned v);

inline RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) { return rf_add(f, g); }
inline RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) { return rf_sub(f, g); }
inline RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) { return rf_mul(f, g); }

}  // namespace zetalab
