#include "zetalab/rational_function.hpp"

namespace zetalab {

RationalFunction::RationalFunction() : num_{}, den_(RatPolynomial::constant(Rational(1))) {}

RationalFunction::RationalFunction(RatPolynomial num, RatPolynomial den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = RatPolynomial::constant(Rational(1));
        return;
    }
    RatPolynomial g = gcd(num, den);
    if (g.degree() > 0) {
        num = exact_quotient(num, g);
        den = exact_quotient(den, g);
    }
    Rational inv_lead = 1 / den.leading();
    num_ = num.scaled(inv_lead);
    den_ = den.scaled(inv_lead);
}

RationalFunction::RationalFunction(RatPolynomial poly)
    : num_(std::move(poly)), den_(RatPolynomial::constant(Rational(1))) {}

RationalFunction RationalFunction::pole(long m, unsigned order, const Rational& coeff) {
    RatPolynomial den = RatPolynomial::shifted_linear(Rational(m)).pow(order);
    return from_canonical(RatPolynomial::constant(coeff), std::move(den));
}

RationalFunction RationalFunction::from_canonical(RatPolynomial num, RatPolynomial den) {
    RationalFunction f;
    if (num.is_zero()) return f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    return f;
}

Rational RationalFunction::evaluate(const Rational& s) const {
    Rational d = den_.evaluate(s);
    if (sgn(d) == 0) throw std::domain_error("rational function evaluated at a pole");
    Rational out = num_.evaluate(s) / d;
    return out;
}

RationalFunction RationalFunction::operator-() const { return from_canonical(-num_, den_); }

RationalFunction rf_normalize(const RatPolynomial& num, const RatPolynomial& den) {
    return RationalFunction(num, den);
}

RationalFunction rf_add(const RationalFunction& f, const RationalFunction& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.denominator() == g.denominator())
        return RationalFunction(f.numerator() + g.numerator(), f.denominator());
    // Work over the lcm of the denominators to keep gcd sizes down.
    RatPolynomial common = gcd(f.denominator(), g.denominator());
    RatPolynomial fc = exact_quotient(g.denominator(), common);
    RatPolynomial gc = exact_quotient(f.denominator(), common);
    return RationalFunction(f.numerator() * fc + g.numerator() * gc, f.denominator() * fc);
}

RationalFunction rf_sub(const RationalFunction& f, const RationalFunction& g) { return rf_add(f, -g); }

RationalFunction rf_mul(const RationalFunction& f, const RationalFunction& g) {
    if (f.is_zero() || g.is_zero()) return {};
    // Cross-cancellation keeps the product canonical without a full gcd.
    RatPolynomial g1 = gcd(f.numerator(), g.denominator());
    RatPolynomial g2 = gcd(g.numerator(), f.denominator());
    RatPolynomial num = exact_quotient(f.numerator(), g1) * exact_quotient(g.numerator(), g2);
    RatPolynomial den = exact_quotient(f.denominator(), g2) * exact_quotient(g.denominator(), g1);
    Rational inv_lead = 1 / den.leading();
    return RationalFunction::from_canonical(num.scaled(inv_lead), den.scaled(inv_lead));
}

RationalFunction rf_scale(const RationalFunction& f, const Rational& c) {
    if (sgn(c) == 0) return {};
    return RationalFunction::from_canonical(f.numerator().scaled(c), f.denominator());
}

RationalFunction rf_pow(const RationalFunction& f, unsigned r) {
    if (r == 0) return RationalFunction(RatPolynomial::constant(Rational(1)));
    // Coprime parts stay coprime under powers; a monic denominator stays monic.
    return RationalFunction::from_canonical(f.numerator().pow(r), f.denominator().pow(r));
}

namespace {

// With f = N/D canonical, g = gcd(D, D'), h = D/g, k = D'/g:
//   f' = (N'h - Nk) / (D h)
// and the right side is already canonical in characteristic zero.
RationalFunction derivative_once(const RationalFunction& f) {
    const RatPolynomial& n = f.numerator();
    const RatPolynomial& d = f.denominator();
    if (d.degree() == 0) return RationalFunction(n.derivative().scaled(1 / d.leading()));
    RatPolynomial dd = d.derivative();
    RatPolynomial g = gcd(d, dd);
    RatPolynomial h = exact_quotient(d, g);
    RatPolynomial k = exact_quotient(dd, g);
    RatPolynomial num = n.derivative() * h - n * k;
    RatPolynomial den = d * h;
    Rational inv_lead = 1 / den.leading();
    return RationalFunction::from_canonical(num.scaled(inv_lead), den.scaled(inv_lead));
}

}  // namespace

RationalFunction rf_derivative(const RationalFunction& f, unsigned v) {
    RationalFunction out = f;
    for (unsigned i = 0; i < v && !out.is_zero(); ++i) out = derivative_once(out);
    return out;
}

}  // namespace zetalab
