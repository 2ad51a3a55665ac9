#include "zetalab/zeta_decomposition.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "zetalab/number_theory.hpp"
#include "zetalab/serialize.hpp"

namespace zetalab {

ZetaCombination decompose(const SummandSpec& spec) {
    ZetaCombination out;
    if (spec.summand.is_zero()) return out;
    const PartialFractionForm pf = partial_fractions(spec.summand);
    if (sgn(pf.residue_sum()) != 0)
        throw InvariantViolation("decompose: order-one residues do not cancel (sum = " + to_string(pf.residue_sum()) + ")");

    std::map<std::pair<long, unsigned>, Rational> harmonic;
    auto h = [&](long m, unsigned j) -> const Rational& {
        auto key = std::make_pair(m, j);
        auto it = harmonic.find(key);
        if (it == harmonic.end())
            it = harmonic.emplace(key, generalized_harmonic(static_cast<unsigned long>(m - 1), j)).first;
        return it->second;
    };

    for (const PoleTerm& t : pf.terms) {
        if (t.order >= 2) out.add_zeta(static_cast<int>(t.order), t.coeff);
        out.constant -= t.coeff * h(t.pole, t.order);
    }
    if (spec.v % 2 == 1) {
        for (auto& [j, q] : out.zeta_coeffs) q = -q;
        out.constant = -out.constant;
    }
    return out;
}

ZetaCombination decompose(const IntPolynomial& poly, int r, int v) { return decompose(build_summand(poly, r, v)); }

namespace {

void lcm_into(Integer& acc, const Rational& q) { mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), q.get_den_mpz_t()); }

bool divides(const Integer& d, const Integer& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

Integer lcm_power(unsigned n, unsigned e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), lcm_upto(n).get_mpz_t(), e);
    return out;
}

}  // namespace

DecompositionReport build_report(unsigned n, int r, int v, ZetaCombination combo) {
    DecompositionReport rep;
    rep.n = n;
    rep.r = static_cast<unsigned>(r);
    rep.v = static_cast<unsigned>(v);
    rep.combo = std::move(combo);

    Integer d = 1;
    lcm_into(d, rep.combo.constant);
    for (const auto& [j, q] : rep.combo.zeta_coeffs) lcm_into(d, q);
    rep.D = d;
    if (r == 3 && v == 2) {
        for (const auto& [j, q] : rep.combo.zeta_coeffs)
            if (j != 4 && j != 5) rep.structure_mismatch = true;
        // pi^4 = 90 zeta(4).
        const Rational pi4 = rep.combo.coeff(4) / 90;
        Integer dp = d;
        lcm_into(dp, pi4);
        auto cleared = [&](const Rational& q) {
            Rational x = q * Rational(dp);
            return Integer(x.get_num());
        };
        rep.A = cleared(pi4);
        rep.B = cleared(rep.combo.coeff(5));
        rep.G = cleared(rep.combo.constant);
        rep.D_pi = dp;
    }
    const unsigned e = rep.r + rep.v;
    rep.divides_lcm_n = divides(d, lcm_power(n, e));
    rep.divides_lcm_n1 = divides(d, lcm_power(n + 1, e));
    return rep;
}

DecompositionReport build_report(const IntPolynomial& poly, int r, int v) {
    if (poly.is_zero()) throw std::invalid_argument("polynomial must be nonzero");
    return build_report(static_cast<unsigned>(poly.degree()), r, v, decompose(poly, r, v));
}

DecompositionReport apery_report(unsigned n, int r, int v) { return build_report(legendre_coeffs(n), r, v); }

nlohmann::json to_json(const DecompositionReport& rep) {
    nlohmann::json combo = to_json(rep.combo);
    auto opt = [](const std::optional<Integer>& z) -> nlohmann::json {
        return z ? nlohmann::json(to_string(*z)) : nlohmann::json(nullptr);
    };
    return {
        {"n", rep.n},
        {"r", rep.r},
        {"v", rep.v},
        {"zeta", combo["zeta"]},
        {"constant", combo["constant"]},
        {"A", opt(rep.A)},
        {"B", opt(rep.B)},
        {"G", opt(rep.G)},
        {"D", to_string(rep.D)},
        {"D_pi", opt(rep.D_pi)},
        {"div_lcm_n", rep.divides_lcm_n},
        {"div_lcm_n1", rep.divides_lcm_n1},
        {"structure_mismatch", rep.structure_mismatch},
    };
}

std::vector<CriterionRecord> rationality_criterion(const PolynomialFamily& family, int r, int v, unsigned n_max,
                                                   unsigned precision, const CriterionOptions& options) {
    if (precision < 10) throw std::invalid_argument("precision must be >= 10");
    if (r < 2) throw std::invalid_argument("series diverges (r must be >= 2)");
    if (v < 0) throw std::invalid_argument("v must be >= 0");
    const unsigned count = n_max + 1;
    const unsigned weight = static_cast<unsigned>(r + v);
    CombinationSource source = options.source ? options.source
                                              : CombinationSource([](const IntPolynomial& p, int rr, int vv) {
                                                    return decompose(p, rr, vv);
                                                });

    std::vector<CriterionRecord> records(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<unsigned> next{0};
    std::mutex progress_mutex;

    auto work = [&] {
        for (unsigned n = next++; n < count; n = next++) {
            try {
                CriterionRecord& rec = records[n];
                rec.n = n;
                rec.r = static_cast<unsigned>(r);
                rec.v = static_cast<unsigned>(v);
                const ZetaCombination combo = source(family(n), r, v);
                rec.abs_c = hp_abs(eval_combination_relative(combo, precision));
                mpz_pow_ui(rec.lcm_pow.get_mpz_t(), lcm_upto(n).get_mpz_t(), weight);
                rec.lcm_scaled = hp_mul(HighPrecisionValue{Rational(rec.lcm_pow), 0}, rec.abs_c);
                rec.exp_scaled = hp_mul(exp_value(static_cast<long>(weight) * n, precision + 10), rec.abs_c);
            } catch (...) {
                errors[n] = std::current_exception();
            }
            if (options.progress) {
                std::lock_guard lock(progress_mutex);
                options.progress(n);
            }
        }
    };

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, count);
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    for (unsigned n = 1; n < count; ++n) {
        const HighPrecisionValue& prev = records[n - 1].abs_c;
        if (sgn(abs(prev.value) - prev.error_bound) > 0) records[n].ratio_to_prev = hp_div(records[n].abs_c, prev);
    }
    return records;
}

}  // namespace zetalab
