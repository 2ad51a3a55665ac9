#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace zetalab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial, lowest degree first.
///
/// The zero polynomial is the empty coefficient list; every other value keeps
/// a nonzero leading coefficient, so `==` is coefficient-wise equality.
template <typename Coeff>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Coeff> cs) : coeffs_(cs) { trim(); }
    explicit Polynomial(std::vector<Coeff> cs) : coeffs_(std::move(cs)) { trim(); }

    static Polynomial constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }

    /// x^k
    static Polynomial monomial(std::size_t k, const Coeff& c = Coeff(1)) {
        std::vector<Coeff> cs(k + 1, Coeff(0));
        cs[k] = c;
        return Polynomial(std::move(cs));
    }

    /// The linear factor (x + m).
    static Polynomial shifted_linear(const Coeff& m) { return Polynomial({m, Coeff(1)}); }

    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    Coeff operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }

    const Coeff& leading() const {
        if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    template <typename X>
    X evaluate(const X& x) const {
        X acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += X(*it);
        }
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Coeff> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
        return Polynomial(std::move(out));
    }

    /// p(x + a), by repeated synthetic division (Taylor shift).
    Polynomial shift(const Coeff& a) const {
        std::vector<Coeff> c = coeffs_;
        const std::size_t n = c.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
        return Polynomial(std::move(c));
    }

    Polynomial operator-() const {
        std::vector<Coeff> out(coeffs_);
        for (auto& c : out) c = -c;
        return Polynomial(std::move(out));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Coeff& c) const {
        std::vector<Coeff> out(coeffs_);
        for (auto& x : out) x *= c;
        return Polynomial(std::move(out));
    }

    Polynomial pow(unsigned e) const {
        Polynomial result = constant(Coeff(1));
        Polynomial base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);

/// Quotient and remainder over Q. Throws std::domain_error on a zero divisor.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);

/// Scales p to a monic polynomial; zero stays zero.
RatPolynomial monic(const RatPolynomial& p);

/// Monic gcd over Q (zero only if both inputs are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);

/// Exact division; throws std::logic_error if b does not divide a.
RatPolynomial exact_quotient(const RatPolynomial& a, const RatPolynomial& b);

/// Splits p = c * q with c rational and q an integer polynomial of content one
/// and positive leading coefficient.
std::pair<Rational, IntPolynomial> primitive_part(const RatPolynomial& p);

/// Clears denominators: returns (L, L*p) with L the lcm of coefficient denominators.
std::pair<Integer, IntPolynomial> clear_denominators(const RatPolynomial& p);

}  // namespace zetalab
