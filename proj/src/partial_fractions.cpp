#include "zetalab/partial_fractions.hpp"

#include <algorithm>

namespace zetalab {

namespace {

// Divides p by (s + m) in place; returns the remainder p(-m).
Rational synthetic_divide(std::vector<Rational>& p, const Rational& m) {
    // p = sum c_i s^i, quotient q with p = (s + m) q + r.
    const std::size_t n = p.size();
    std::vector<Rational> q(n - 1);
    Rational carry = 0;
    for (std::size_t i = n; i-- > 1;) {
        carry = p[i] - m * carry;
        q[i - 1] = carry;
    }
    Rational rem = p[0] - m * carry;
    p = std::move(q);
    return rem;
}

}  // namespace

std::vector<std::pair<long, unsigned>> integer_pole_factorization(const RatPolynomial& den) {
    std::vector<std::pair<long, unsigned>> out;
    if (den.degree() <= 0) return out;
    if (den.leading() != 1) throw std::invalid_argument("denominator must be monic");
    std::vector<Rational> rem = den.coeffs();
    long m = 1;
    while (rem.size() > 1) {
        // All roots are -m' with m' >= m, and they sum to -rem[d-1];
        // this caps the largest candidate.
        const std::size_t d = rem.size() - 1;
        const Rational& sub = rem[d - 1];
        if (sub.get_den() != 1) throw UnsupportedPole("unsupported pole: denominator has non-integer roots");
        Integer cap = sub.get_num() - Integer(m) * static_cast<unsigned long>(d - 1);
        if (cap < m) throw UnsupportedPole("unsupported pole: denominator does not split over s = -1, -2, ...");
        unsigned e = 0;
        for (;;) {
            std::vector<Rational> trial = rem;
            if (sgn(synthetic_divide(trial, Rational(m))) != 0) break;
            rem = std::move(trial);
            ++e;
            if (rem.size() == 1) break;
        }
        if (e) out.emplace_back(m, e);
        ++m;
    }
    return out;
}

PartialFractionForm partial_fractions(const RationalFunction& f) {
    PartialFractionForm out;
    if (f.is_zero()) return out;
    if (f.numerator().degree() >= f.denominator().degree())
        throw std::invalid_argument("partial_fractions: improper fraction (degree of numerator >= degree of denominator)");

    const auto factors = integer_pole_factorization(f.denominator());
    for (const auto& [m, e] : factors) {
        // Q = den / (s+m)^e, then expand num/Q around s = -m to order e-1.
        std::vector<Rational> q = f.denominator().coeffs();
        for (unsigned i = 0; i < e; ++i) synthetic_divide(q, Rational(m));
        const RatPolynomial qt = RatPolynomial(std::move(q)).shift(Rational(-m));
        const RatPolynomial nt = f.numerator().shift(Rational(-m));

        std::vector<Rational> c(e);
        const Rational inv_q0 = 1 / qt[0];
        for (unsigned i = 0; i < e; ++i) {
            Rational acc = nt[i];
            for (unsigned k = 1; k <= i; ++k) acc -= qt[k] * c[i - k];
            c[i] = acc * inv_q0;
        }
        for (unsigned j = e; j >= 1; --j) {
            const Rational& beta = c[e - j];
            if (sgn(beta) != 0) out.terms.push_back({m, j, beta});
        }
    }
    return out;
}

RationalFunction PartialFractionForm::recombine() const {
    RationalFunction acc(polynomial_part);
    for (const auto& t : terms) acc = rf_add(acc, RationalFunction::pole(t.pole, t.order, t.coeff));
    return acc;
}

Rational PartialFractionForm::residue_sum() const {
    Rational acc = 0;
    for (const auto& t : terms)
        if (t.order == 1) acc += t.coeff;
    return acc;
}

Rational PartialFractionForm::coeff(long pole, unsigned order) const {
    auto it = std::find_if(terms.begin(), terms.end(),
                           [&](const PoleTerm& t) { return t.pole == pole && t.order == order; });
    return it == terms.end() ? Rational(0) : it->coeff;
}

}  // namespace zetalab
