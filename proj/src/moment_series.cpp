#include "zetalab/moment_series.hpp"

#include <limits>
#include <string>

namespace zetalab {

RationalFunction moment_from_coeffs(const IntPolynomial& poly) {
    if (poly.is_zero()) throw std::invalid_argument("moment of the zero polynomial");
    const auto& a = poly.coeffs();
    // Common denominator prod_l (s + l + 1); numerator sum_l a_l prod_{i != l} (s + i + 1).
    const std::size_t n = a.size();
    RatPolynomial den = RatPolynomial::constant(Rational(1));
    for (std::size_t l = 0; l < n; ++l) den *= RatPolynomial::shifted_linear(Rational(static_cast<unsigned long>(l + 1)));
    RatPolynomial num;
    std::vector<Rational> work;
    for (std::size_t l = 0; l < n; ++l) {
        if (sgn(a[l]) == 0) continue;
        // den / (s + l + 1) by synthetic division.
        const std::vector<Rational>& p = den.coeffs();
        const Rational m(static_cast<unsigned long>(l + 1));
        work.assign(p.size() - 1, Rational(0));
        Rational carry = 0;
        for (std::size_t i = p.size(); i-- > 1;) {
            carry = p[i] - m * carry;
            work[i - 1] = carry;
        }
        num += RatPolynomial(work).scaled(Rational(a[l]));
    }
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction moment_closed_form(unsigned n) {
    RatPolynomial num = RatPolynomial::constant(Rational(n % 2 ? -1 : 1));
    for (unsigned i = 0; i < n; ++i) num *= RatPolynomial::shifted_linear(Rational(-static_cast<long>(i)));
    RatPolynomial den = RatPolynomial::constant(Rational(1));
    for (unsigned i = 1; i <= n + 1; ++i) den *= RatPolynomial::shifted_linear(Rational(static_cast<long>(i)));
    // Numerator roots 0..n-1 and denominator roots -1..-(n+1) never meet.
    return RationalFunction::from_canonical(std::move(num), std::move(den));
}

SummandSpec build_summand(const IntPolynomial& poly, int r, int v) {
    if (r < 2) throw std::invalid_argument("series diverges (r must be >= 2)");
    if (v < 0) throw std::invalid_argument("v must be >= 0");
    SummandSpec spec;
    spec.poly = poly;
    spec.r = static_cast<unsigned>(r);
    spec.v = static_cast<unsigned>(v);
    spec.summand = rf_derivative(rf_pow(moment_from_coeffs(poly), spec.r), spec.v);
    if (spec.summand.is_zero()) {
        // Only possible for v > 0 with a constant M^r, which cannot happen
        // for a nonzero moment; treat it as infinitely fast decay.
        spec.decay_degree = std::numeric_limits<long>::max();
        return spec;
    }
    spec.decay_degree = spec.summand.decay_degree();
    if (spec.decay_degree < 2)
        throw std::invalid_argument("series diverges (summand decays like s^-" + std::to_string(spec.decay_degree) + ")");
    return spec;
}

Rational term_value(const SummandSpec& spec, unsigned long k) {
    return spec.summand.evaluate(Rational(k));
}

Rational series_partial_sum(const SummandSpec& spec, unsigned long K) {
    Rational acc = 0;
    for (unsigned long k = 0; k < K; ++k) acc += term_value(spec, k);
    return acc;
}

TailEnvelope::TailEnvelope(const SummandSpec& spec)
    : num_u_(spec.summand.numerator().shift(Rational(-1))),
      den_u_(spec.summand.denominator().shift(Rational(-1))),
      decay_(spec.decay_degree) {}

Rational TailEnvelope::bound(unsigned long K) const {
    if (num_u_.is_zero()) return 0;
    if (K < 1) throw IncreaseK("increase K: tail bound needs K >= 1");
    if (decay_ < 2) throw std::logic_error("tail bound requires decay degree >= 2");
    const Rational u0(K);
    const Rational inv_u0 = 1 / u0;

    // sum_i |n_i| u0^(i - deg N), accumulated from the top down.
    Rational num_env = 0;
    {
        Rational w = 1;
        const auto& n = num_u_.coeffs();
        for (std::size_t i = n.size(); i-- > 0;) {
            num_env += abs(n[i]) * w;
            w *= inv_u0;
        }
    }
    Rational den_env = den_u_.leading();
    {
        Rational w = inv_u0;
        const auto& d = den_u_.coeffs();
        for (std::size_t i = d.size() - 1; i-- > 0;) {
            if (sgn(d[i]) < 0) den_env += d[i] * w;
            w *= inv_u0;
        }
    }
    if (sgn(den_env) <= 0) throw IncreaseK("increase K: denominator envelope is not positive at K = " + std::to_string(K));

    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), K, static_cast<unsigned long>(decay_ - 1));
    Rational out = num_env / (den_env * Rational(pw * static_cast<unsigned long>(decay_ - 1)));
    return out;
}

Rational tail_bound(const SummandSpec& spec, unsigned long K) { return TailEnvelope(spec).bound(K); }

}  // namespace zetalab
