#include "zetalab/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>
#include <thread>
#include <vector>

#include "zetalab/number_theory.hpp"
#include "zetalab/serialize.hpp"
#include "zetalab/zeta_decomposition.hpp"

namespace zetalab {

namespace {

using i128 = __int128;

unsigned resolve_threads(unsigned requested, unsigned long work_items) {
    unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<unsigned long>(t, std::max(1ul, work_items)));
}

i128 to_i128(const Integer& z) {
    Integer a = abs(z);
    Integer hi = a >> 64;
    Integer lo = a - (hi << 64);
    i128 out = (static_cast<i128>(mpz_get_ui(hi.get_mpz_t())) << 64) | static_cast<i128>(mpz_get_ui(lo.get_mpz_t()));
    return sgn(z) < 0 ? -out : out;
}

Integer from_i128(i128 x) {
    const bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
    Integer out(static_cast<unsigned long>(u >> 64));
    out <<= 64;
    out += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
    return neg ? Integer(-out) : out;
}

Integer envelope_at(const IntPolynomial& p, unsigned long x) {
    Integer acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc *= x;
        acc += abs(*it);
    }
    return acc;
}

bool tail_ok(const TailEnvelope& env, unsigned long K, const Rational& half) {
    try {
        return env.bound(K) <= half;
    } catch (const IncreaseK&) {
        return false;
    }
}

// sum_{k in [lo, hi)} trunc(A(k) * scale / B(k)).
Integer block_sum_mpz(const IntPolynomial& a, const IntPolynomial& b, const Integer& scale, unsigned long lo,
                      unsigned long hi) {
    Integer acc = 0, na, nb, q;
    for (unsigned long k = lo; k < hi; ++k) {
        na = a.evaluate(Integer(k));
        nb = b.evaluate(Integer(k));
        na *= scale;
        mpz_tdiv_q(q.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
        acc += q;
    }
    return acc;
}

Integer block_sum_i128(const std::vector<i128>& a, const std::vector<i128>& b, i128 scale, unsigned long lo,
                       unsigned long hi) {
    Integer acc = 0;
    i128 partial = 0;
    unsigned run = 0;
    for (unsigned long k = lo; k < hi; ++k) {
        const i128 x = static_cast<i128>(k);
        i128 na = 0, nb = 0;
        for (auto it = a.rbegin(); it != a.rend(); ++it) na = na * x + *it;
        for (auto it = b.rbegin(); it != b.rend(); ++it) nb = nb * x + *it;
        partial += (na * scale) / nb;
        if (++run == 1024) {
            acc += from_i128(partial);
            partial = 0;
            run = 0;
        }
    }
    acc += from_i128(partial);
    return acc;
}

}  // namespace

Rational reachable_direct_error(const SummandSpec& spec, unsigned long max_terms) {
    const TailEnvelope env(spec);
    try {
        return 2 * env.bound(std::max(1ul, max_terms));
    } catch (const IncreaseK& e) {
        throw UnreachableTarget(std::string("no certified tail within the term budget: ") + e.what(),
                                static_cast<double>(max_terms));
    }
}

DirectSum direct_sum_value(const IntPolynomial& poly, int r, int v, const Rational& target_error,
                           unsigned long max_terms, unsigned threads) {
    if (sgn(target_error) <= 0) throw std::invalid_argument("target error must be positive");
    const SummandSpec spec = build_summand(poly, r, v);
    const TailEnvelope env(spec);
    const Rational half = target_error / 2;

    DirectSum out;
    if (spec.summand.is_zero()) return out;

    // Least K with tail_bound(K) <= target/2: doubling, then bisection.
    unsigned long hi = 1;
    while (!tail_ok(env, hi, half)) {
        if (hi > max_terms) {
            double est = static_cast<double>(max_terms);
            try {
                const double ratio = std::exp((log10_abs(env.bound(max_terms)) - log10_abs(half)) * std::log(10.0));
                est *= std::pow(ratio, 1.0 / static_cast<double>(spec.decay_degree - 1));
            } catch (const std::exception&) {
            }
            char buf[160];
            std::snprintf(buf, sizeof buf, "target error unreachable: needs about K = %.3g terms (limit %lu)", est,
                          max_terms);
            throw UnreachableTarget(buf, est);
        }
        hi *= 2;
    }
    unsigned long lo = hi / 2;  // lo fails (or is 0), hi passes
    while (hi - lo > 1) {
        const unsigned long mid = lo + (hi - lo) / 2;
        (tail_ok(env, mid, half) ? hi : lo) = mid;
    }
    const unsigned long K = hi;
    if (K > max_terms) throw UnreachableTarget("target error unreachable within the term budget", static_cast<double>(K));

    // Fixed-point width: K * 10^-W <= target/2.
    long w = static_cast<long>(std::floor(std::log10(2.0 * static_cast<double>(K)) - log10_abs(target_error))) - 1;
    if (w < 0) w = 0;
    while (Rational(K) * pow10(-w) > half) ++w;

    // G = N/D with rational coefficients; A/B = (Nz Ld)/(Dz Ln) in integers.
    auto [ln, nz] = clear_denominators(spec.summand.numerator());
    auto [ld, dz] = clear_denominators(spec.summand.denominator());
    const IntPolynomial a = nz * IntPolynomial::constant(ld);
    const IntPolynomial b = dz * IntPolynomial::constant(ln);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(w));

    Integer two115;
    mpz_ui_pow_ui(two115.get_mpz_t(), 2, 115);
    const bool fast = envelope_at(a, K) * scale < two115 && envelope_at(b, K) < two115;

    const unsigned t = resolve_threads(threads, K / 4096 + 1);
    std::vector<Integer> partial(t);
    auto run_block = [&](unsigned i) {
        const unsigned long lo_k = K * i / t, hi_k = K * (i + 1) / t;
        if (fast) {
            std::vector<i128> ai, bi;
            for (const auto& c : a.coeffs()) ai.push_back(to_i128(c));
            for (const auto& c : b.coeffs()) bi.push_back(to_i128(c));
            partial[i] = block_sum_i128(ai, bi, to_i128(scale), lo_k, hi_k);
        } else {
            partial[i] = block_sum_mpz(a, b, scale, lo_k, hi_k);
        }
    };
    if (t == 1) {
        run_block(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < t; ++i) pool.emplace_back(run_block, i);
    }
    Integer total = 0;
    for (const auto& p : partial) total += p;

    out.terms = K;
    out.fraction_digits = static_cast<unsigned>(w);
    out.value.value = Rational(total) * pow10(-w);
    if (spec.v % 2 == 1) out.value.value = -out.value.value;
    out.value.error_bound = env.bound(K) + Rational(K) * pow10(-w);
    return out;
}

MCEstimate mc_integral(const IntPolynomial& poly, int r, int v, double z, std::uint64_t samples, std::uint64_t seed,
                       unsigned threads) {
    if (r < 2) throw std::invalid_argument("series diverges (r must be >= 2)");
    if (v < 0) throw std::invalid_argument("v must be >= 0");
    if (!(z >= 0) || !std::isfinite(z)) throw std::invalid_argument("z must be a finite nonnegative number");
    if (samples < 10'000) throw std::invalid_argument("samples must be >= 10000");
    if (poly.is_zero()) throw std::invalid_argument("polynomial must be nonzero");

    std::vector<double> coeffs;
    for (const auto& c : poly.coeffs()) coeffs.push_back(c.get_d());
    auto eval_poly = [&](double x) {
        double acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    };

    constexpr unsigned kStreams = 64;
    struct Moments {
        double count = 0, mean = 0, m2 = 0;
        std::uint64_t rejected = 0;
    };
    std::array<Moments, kStreams> stream_moments{};

    auto run_stream = [&](unsigned s) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), s};
        std::mt19937_64 gen(seq);
        const std::uint64_t n = samples / kStreams + (s < samples % kStreams ? 1 : 0);
        Moments m;
        std::vector<double> x(static_cast<std::size_t>(r));
        for (std::uint64_t i = 0; i < n;) {
            bool singular = false;
            double log_prod = 0, weight = 1;
            for (auto& xi : x) {
                xi = static_cast<double>(gen() >> 11) * 0x1.0p-53;
                if (xi == 0.0) singular = true;
            }
            if (!singular) {
                for (double xi : x) {
                    log_prod += std::log(xi);
                    weight *= eval_poly(xi);
                }
            }
            const double denom = singular ? 0.0 : -std::expm1(log_prod);
            double f = 0;
            if (denom > 0) {
                f = weight / denom;
                if (z != 0) f *= std::exp(z * log_prod);
                for (int p = 0; p < v; ++p) f *= -log_prod;
            }
            if (denom <= 0 || !std::isfinite(f)) {
                ++m.rejected;
                continue;
            }
            ++i;
            m.count += 1;
            const double delta = f - m.mean;
            m.mean += delta / m.count;
            m.m2 += delta * (f - m.mean);
        }
        stream_moments[s] = m;
    };

    const unsigned t = resolve_threads(threads, kStreams);
    if (t == 1) {
        for (unsigned s = 0; s < kStreams; ++s) run_stream(s);
    } else {
        std::atomic<unsigned> next{0};
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < t; ++i)
            pool.emplace_back([&] {
                for (unsigned s = next++; s < kStreams; s = next++) run_stream(s);
            });
    }

    // Chan et al. pairwise merge, in stream order.
    Moments total;
    for (const auto& m : stream_moments) {
        if (m.count == 0) continue;
        const double n = total.count + m.count;
        const double delta = m.mean - total.mean;
        total.mean += delta * m.count / n;
        total.m2 += m.m2 + delta * delta * total.count * m.count / n;
        total.count = n;
        total.rejected += m.rejected;
    }

    MCEstimate out;
    out.mean = total.mean;
    out.stderr_ = std::sqrt(total.m2 / (total.count - 1)) / std::sqrt(total.count);
    out.samples = samples;
    out.seed = seed;
    out.rejected = total.rejected;
    return out;
}

HighPrecisionValue shifted_series_value(const IntPolynomial& poly, int r, unsigned z, unsigned precision) {
    const SummandSpec spec = build_summand(poly, r, 0);
    HighPrecisionValue out = eval_combination(decompose(spec), precision);
    out.value -= series_partial_sum(spec, z);
    return out;
}

VerificationReport crosscheck(unsigned n, int r, int v, unsigned precision, std::uint64_t samples,
                              std::uint64_t seed, unsigned long max_terms) {
    VerificationReport rep;
    rep.n = n;
    rep.r = r;
    rep.v = v;
    rep.precision = precision;
    const IntPolynomial poly = legendre_coeffs(n);
    const SummandSpec spec = build_summand(poly, r, v);

    rep.exact = eval_combination(decompose(spec), precision);
    rep.direct_target = std::max<Rational>(pow10(-static_cast<long>(precision)), reachable_direct_error(spec, max_terms));
    rep.direct = direct_sum_value(poly, r, v, rep.direct_target, max_terms);
    rep.mc = mc_integral(poly, r, v, 0.0, samples, seed);

    rep.exact_vs_direct = abs(rep.exact.value - rep.direct.value.value) <= rep.exact.error_bound + rep.direct.value.error_bound;
    rep.exact_vs_mc = abs(rep.exact.value - Rational(rep.mc.mean)) <= 4 * Rational(rep.mc.stderr_);
    return rep;
}

namespace {

std::string g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

nlohmann::json to_json(const MCEstimate& mc) {
    return {{"mean", g17(mc.mean)},
            {"stderr", g17(mc.stderr_)},
            {"samples", mc.samples},
            {"seed", mc.seed},
            {"rejected", mc.rejected}};
}

nlohmann::json to_json(const VerificationReport& rep) {
    nlohmann::json direct = rep.direct.value.to_json(rep.precision);
    direct["terms"] = rep.direct.terms;
    direct["target"] = format_scientific_up(rep.direct_target, 3);
    return {{"n", rep.n},
            {"r", rep.r},
            {"v", rep.v},
            {"precision", rep.precision},
            {"exact", rep.exact.to_json(rep.precision)},
            {"direct", direct},
            {"mc", to_json(rep.mc)},
            {"exact_vs_direct", rep.exact_vs_direct},
            {"exact_vs_mc", rep.exact_vs_mc},
            {"pass", rep.pass()}};
}

}  // namespace zetalab
