#include "zetalab/polynomial.hpp"

#include <numeric>

namespace zetalab {

RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return RatPolynomial(std::move(out));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {RatPolynomial{}, a};
    std::vector<Rational> rem = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Rational> quot(rem.size() - db, Rational(0));
    const Rational inv_lead = 1 / b.leading();
    for (std::size_t i = rem.size(); i-- > db;) {
        if (sgn(rem[i]) == 0) continue;
        Rational f = rem[i] * inv_lead;
        quot[i - db] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
    }
    rem.resize(db);
    return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial monic(const RatPolynomial& p) {
    if (p.is_zero()) return p;
    return p.scaled(1 / p.leading());
}

std::pair<Integer, IntPolynomial> clear_denominators(const RatPolynomial& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(c.get_num() * (l / c.get_den()));
    return {l, IntPolynomial(std::move(out))};
}

namespace {

Integer content(const IntPolynomial& p) {
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial primitive(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    Integer g = content(p);
    if (sgn(p.leading()) < 0) g = -g;
    std::vector<Integer> out(p.coeffs());
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(out));
}

// lead(b)^k * a mod b, computed over Z.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> r = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const Integer& lb = b.leading();
    while (r.size() > db) {
        const Integer lr = r.back();
        const std::size_t shift = r.size() - 1 - db;
        for (auto& c : r) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= lr * b.coeffs()[j];
        while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
    }
    return IntPolynomial(std::move(r));
}

}  // namespace

std::pair<Rational, IntPolynomial> primitive_part(const RatPolynomial& p) {
    if (p.is_zero()) return {Rational(0), IntPolynomial{}};
    auto [l, ip] = clear_denominators(p);
    IntPolynomial q = primitive(ip);
    Rational c(p.leading() / Rational(q.leading()));
    c.canonicalize();
    return {c, q};
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    IntPolynomial x = primitive_part(a).second;
    IntPolynomial y = primitive_part(b).second;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0) return RatPolynomial::constant(Rational(1));
        IntPolynomial r = primitive(pseudo_remainder(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return monic(to_rational(x));
}

RatPolynomial exact_quotient(const RatPolynomial& a, const RatPolynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_quotient: nonzero remainder");
    return q;
}

}  // namespace zetalab
