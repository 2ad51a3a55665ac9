#include "zetalab/high_precision.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <mpfr.h>

#include "zetalab/number_theory.hpp"

namespace zetalab {

namespace {

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;

    mpfr_ptr get() { return v_; }

    Rational to_rational() const {
        Rational q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }

private:
    mpfr_t v_;
};

mpfr_prec_t bits_for_digits(unsigned digits) {
    return static_cast<mpfr_prec_t>(std::ceil((digits + 20) * 3.3219280948873623)) + 64;
}

HighPrecisionValue enclosure(const Rational& lo, const Rational& hi) {
    HighPrecisionValue out;
    out.value = (lo + hi) / 2;
    out.error_bound = (hi - lo) / 2;
    return out;
}

// Rounds |a| to `digits` significant digits; returns (mantissa, exponent)
// with a ~= mantissa * 10^(exponent - digits + 1).
std::pair<Integer, long> significand(const Rational& a, unsigned digits, bool round_up) {
    long e = static_cast<long>(std::floor(log10_abs(a)));
    Integer lo, hi;
    mpz_ui_pow_ui(lo.get_mpz_t(), 10, digits - 1);
    mpz_ui_pow_ui(hi.get_mpz_t(), 10, digits);
    for (int guard = 0; guard < 8; ++guard) {
        Rational scaled = a * pow10(static_cast<long>(digits) - 1 - e);
        Integer m;
        if (round_up) {
            mpz_cdiv_q(m.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        } else {
            Rational half = scaled + Rational(1, 2);
            mpz_fdiv_q(m.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
        }
        if (m >= hi) {
            ++e;
        } else if (m < lo) {
            --e;
        } else {
            return {m, e};
        }
    }
    throw std::logic_error("significand: exponent estimate did not settle");
}

std::string render(const Rational& q, unsigned digits, bool round_up) {
    if (sgn(q) == 0) return "0";
    if (digits == 0) digits = 1;
    auto [m, e] = significand(abs(q), digits, round_up);
    std::string ds = m.get_str(10);
    std::string out;
    if (sgn(q) < 0) out += '-';
    out += ds[0];
    if (ds.size() > 1) {
        out += '.';
        out.append(ds, 1, std::string::npos);
    }
    out += 'e';
    out += e < 0 ? '-' : '+';
    std::string es = std::to_string(e < 0 ? -e : e);
    if (es.size() < 2) es.insert(0, "0");
    out += es;
    return out;
}

// Even-index Bernoulli numbers B_0, B_2, ..., extended on demand.
class EvenBernoulli {
public:
    const Rational& get(unsigned i) {
        while (b_.size() <= 2 * i) extend();
        return b_[2 * i];
    }

private:
    void extend() {
        const unsigned m = static_cast<unsigned>(b_.size());
        if (m == 0) {
            b_.emplace_back(1);
            return;
        }
        Rational acc = 0;
        for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b_[k];
        Rational bm = -acc / Rational(m + 1);
        b_.push_back(bm);
    }

    std::vector<Rational> b_;
};

Rational inv_pow(unsigned long base, unsigned long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), base, e);
    return Rational(Integer(1), p);
}

// Euler-Maclaurin: zeta(s) = sum_{k<N} k^-s + N^(1-s)/(s-1) + N^-s/2
//   + sum_{i=1}^{m} B_2i/(2i)! s(s+1)...(s+2i-2) N^(-s-2i+1) + E,
// |E| <= first omitted term for real s.
std::pair<Rational, Rational> euler_maclaurin_zeta(unsigned long s, const Rational& tol, unsigned long n_cut) {
    EvenBernoulli bern;
    for (;;) {
        Integer common = lcm_upto(static_cast<unsigned>(n_cut - 1));
        Integer common_pow;
        mpz_pow_ui(common_pow.get_mpz_t(), common.get_mpz_t(), s);
        Integer num = 0;
        for (unsigned long k = 1; k < n_cut; ++k) {
            Integer q = common / k;
            Integer qp;
            mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), s);
            num += qp;
        }
        Rational acc(num, common_pow);
        acc.canonicalize();
        acc += inv_pow(n_cut, s - 1) / Rational(s - 1);
        acc += inv_pow(n_cut, s) / 2;

        Rational rising = Rational(s);       // s(s+1)...(s+2i-2)
        Rational factorial = 2;              // (2i)!
        Rational npow = inv_pow(n_cut, s + 1);  // N^(-s-2i+1)
        const Rational inv_n2 = inv_pow(n_cut, 2);
        Rational prev_mag = -1;
        for (unsigned i = 1;; ++i) {
            Rational term = bern.get(i) / factorial * rising * npow;
            Rational mag = abs(term);
            if (mag <= tol) return {acc, mag};
            if (sgn(prev_mag) >= 0 && mag >= prev_mag) break;  // asymptotic series turned; enlarge N
            acc += term;
            prev_mag = mag;
            rising *= Rational((s + 2 * i - 1) * (s + 2 * i));
            factorial *= Rational((2 * i + 1) * (2 * i + 2));
            npow *= inv_n2;
        }
        n_cut *= 2;
    }
}

}  // namespace

Rational pow10(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

double log10_abs(const Rational& q) {
    if (sgn(q) == 0) throw std::domain_error("log10 of zero");
    long en = 0, ed = 0;
    double dn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
    double dd = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    return std::log10(std::fabs(dn / dd)) + static_cast<double>(en - ed) * 0.30102999566398120;
}

std::string format_scientific(const Rational& q, unsigned digits) { return render(q, digits, false); }
std::string format_scientific_up(const Rational& q, unsigned digits) { return render(q, digits, true); }

bool HighPrecisionValue::contains(const Rational& x) const { return abs(x - value) <= error_bound; }

HighPrecisionValue HighPrecisionValue::rounded(unsigned digits) const {
    if (sgn(value) == 0) return *this;
    auto [m, e] = significand(abs(value), digits, false);
    Rational r = Rational(m) * pow10(e - static_cast<long>(digits) + 1);
    if (sgn(value) < 0) r = -r;
    HighPrecisionValue out;
    out.error_bound = error_bound + abs(r - value);
    out.value = r;
    return out;
}

std::string HighPrecisionValue::value_string(unsigned digits) const { return format_scientific(value, digits); }

std::string HighPrecisionValue::error_string() const { return format_scientific_up(error_bound, 3); }

nlohmann::json HighPrecisionValue::to_json(unsigned digits) const {
    HighPrecisionValue r = rounded(digits);
    return {{"value", r.value_string(digits)}, {"error_bound", r.error_string()}};
}

HighPrecisionValue hp_abs(const HighPrecisionValue& a) { return {abs(a.value), a.error_bound}; }

HighPrecisionValue hp_mul(const HighPrecisionValue& a, const HighPrecisionValue& b) {
    HighPrecisionValue out;
    out.value = a.value * b.value;
    out.error_bound = abs(a.value) * b.error_bound + abs(b.value) * a.error_bound + a.error_bound * b.error_bound;
    return out;
}

HighPrecisionValue hp_div(const HighPrecisionValue& a, const HighPrecisionValue& b) {
    Rational margin = abs(b.value) - b.error_bound;
    if (sgn(margin) <= 0) throw std::domain_error("division by an enclosure containing zero");
    HighPrecisionValue out;
    out.value = a.value / b.value;
    out.error_bound = (a.error_bound + abs(out.value) * b.error_bound) / margin;
    return out;
}

HighPrecisionValue zeta_value(int j, unsigned precision) {
    if (j < 2) throw std::invalid_argument("zeta_value: j must be >= 2");
    if (precision < 10) throw std::invalid_argument("zeta_value: precision must be >= 10");
    const unsigned working = precision + 10;
    const Rational tol = pow10(-static_cast<long>(working)) / 2;
    auto [exact, em_err] = euler_maclaurin_zeta(static_cast<unsigned long>(j), tol, working + 10);

    // Round to `working` decimal places; the rounding goes into the bound.
    Rational scaled = exact * pow10(working) + Rational(1, 2);
    Integer m;
    mpz_fdiv_q(m.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    HighPrecisionValue out;
    out.value = Rational(m) * pow10(-static_cast<long>(working));
    out.error_bound = em_err + abs(out.value - exact);
    return out;
}

HighPrecisionValue eval_combination(const ZetaCombination& combo, unsigned precision) {
    if (precision < 10) throw std::invalid_argument("eval_combination: precision must be >= 10");
    HighPrecisionValue out;
    out.value = combo.constant;
    const double count = static_cast<double>(combo.zeta_coeffs.size());
    for (const auto& [j, q] : combo.zeta_coeffs) {
        const double extra = std::ceil(log10_abs(q) + std::log10(count));
        const unsigned digits = precision + static_cast<unsigned>(extra > 0 ? extra : 0);
        HighPrecisionValue z = zeta_value(j, digits);
        out.value += q * z.value;
        out.error_bound += abs(q) * z.error_bound;
    }
    return out;
}

HighPrecisionValue eval_combination_relative(const ZetaCombination& combo, unsigned digits) {
    unsigned precision = digits + 10;
    for (int attempt = 0; attempt < 64; ++attempt) {
        HighPrecisionValue h = eval_combination(combo, precision);
        if (sgn(h.error_bound) == 0) return h;
        if (sgn(h.value) != 0 && h.error_bound * pow10(digits + 2) <= abs(h.value)) return h;
        unsigned next = precision + 20;
        if (sgn(h.value) != 0) {
            const double need = digits + 6 - std::floor(log10_abs(h.value));
            if (need > next) next = static_cast<unsigned>(need);
        }
        precision = next;
    }
    throw std::runtime_error("eval_combination_relative: value indistinguishable from zero");
}

HighPrecisionValue pi_value(unsigned precision) {
    const mpfr_prec_t bits = bits_for_digits(precision);
    Mpfr lo(bits), hi(bits);
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    return enclosure(lo.to_rational(), hi.to_rational());
}

HighPrecisionValue exp_value(long x, unsigned precision) {
    const mpfr_prec_t bits = bits_for_digits(precision);
    Mpfr lo(bits), hi(bits);
    mpfr_set_si(lo.get(), x, MPFR_RNDN);
    mpfr_set_si(hi.get(), x, MPFR_RNDN);
    mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
    return enclosure(lo.to_rational(), hi.to_rational());
}

}  // namespace zetalab
