#include "zetalab/number_theory.hpp"

namespace zetalab {

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

IntPolynomial legendre_coeffs(unsigned n) {
    std::vector<Integer> cs;
    cs.reserve(n + 1);
    for (unsigned l = 0; l <= n; ++l) {
        Integer c = binomial(n, l) * binomial(n + l, l);
        if (l % 2) c = -c;
        cs.push_back(std::move(c));
    }
    return IntPolynomial(std::move(cs));
}

Rational integrate_poly_01(const RatPolynomial& p) {
    Rational acc = 0;
    const auto& cs = p.coeffs();
    for (std::size_t l = 0; l < cs.size(); ++l) acc += cs[l] / Rational(static_cast<unsigned long>(l + 1));
    return acc;
}

Integer lcm_upto(unsigned n) {
    Integer acc = 1;
    for (unsigned k = 2; k <= n; ++k) mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), k);
    return acc;
}

Rational generalized_harmonic(unsigned long m, unsigned j) {
    // Sum over a common denominator; far cheaper than m rational additions.
    if (m == 0) return 0;
    Integer den = 1;
    for (unsigned long t = 2; t <= m; ++t) mpz_lcm_ui(den.get_mpz_t(), den.get_mpz_t(), t);
    Integer den_pow;
    mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(), j);
    Integer num = 0;
    for (unsigned long t = 1; t <= m; ++t) {
        Integer q = den / t;
        Integer qp;
        mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), j);
        num += qp;
    }
    Rational out(num, den_pow);
    out.canonicalize();
    return out;
}

}  // namespace zetalab
