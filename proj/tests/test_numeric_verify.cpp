#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zetalab/high_precision.hpp"
#include "zetalab/number_theory.hpp"
#include "zetalab/verify.hpp"
#include "zetalab/zeta_decomposition.hpp"

using namespace zetalab;

namespace {

Rational ten_to_minus(unsigned k) { return Rational(1) / pow10(k); }

const Rational kZeta2 = oracle::decimal("1.644934066848226436472415166646025189219");
const Rational kZeta3 = oracle::decimal("1.202056903159594285399738161511449990765");
const Rational kZeta5 = oracle::decimal("1.036927755143369926331365486457034168057");
const Rational kRef40 = ten_to_minus(39);

}  // namespace

TEST_CASE("zeta values") {
    const HighPrecisionValue z2 = zeta_value(2, 15);
    CHECK(z2.error_bound <= ten_to_minus(15));
    CHECK(z2.contains(kZeta2));
    CHECK(z2.value_string(15) == "1.64493406684823e+00");
    CHECK(zeta_value(3, 15).contains(kZeta3));
    CHECK(zeta_value(3, 15).value_string(15) == "1.20205690315959e+00");
    CHECK(zeta_value(5, 15).value_string(15) == "1.03692775514337e+00");
    const HighPrecisionValue z5 = zeta_value(5, 38);
    CHECK(abs(z5.value - kZeta5) <= z5.error_bound + kRef40);
    CHECK_THROWS_AS(zeta_value(1, 10), std::invalid_argument);
}

TEST_CASE("zeta values lie in the brute-force bracket") {
    for (int s = 2; s <= 8; ++s) {
        const auto [lo, hi] = oracle::zeta_bracket(s, 20000);
        const double z = zeta_value(s, 20).value.get_d();
        CAPTURE(s);
        CHECK(z >= lo * (1 - 1e-14));
        CHECK(z <= hi * (1 + 1e-14));
    }
}

TEST_CASE("zeta(2) equals pi^2/6") {
    for (unsigned prec : {10u, 30u, 60u}) {
        const HighPrecisionValue pi = pi_value(prec + 5);
        const HighPrecisionValue z2 = zeta_value(2, prec);
        const Rational pi2_6 = pi.value * pi.value / 6;
        // |pi^2 - p^2| <= e (2|p| + e)
        const Rational err = pi.error_bound * (2 * abs(pi.value) + pi.error_bound) / 6;
        CHECK(abs(z2.value - pi2_6) <= z2.error_bound + err);
        CHECK(z2.error_bound <= ten_to_minus(prec));
    }
}

TEST_CASE("eval_combination examples") {
    ZetaCombination c5;
    c5.add_zeta(5, 12);
    const HighPrecisionValue v5 = eval_combination(c5, 30);
    CHECK(v5.error_bound <= ten_to_minus(30));
    CHECK(abs(v5.value - 12 * kZeta5) <= v5.error_bound + 12 * kRef40);
    CHECK(v5.value_string(12) == "1.24431330617e+01");

    ZetaCombination half;
    half.constant = Rational(7, 2);
    const HighPrecisionValue h = eval_combination(half, 20);
    CHECK(h.value == Rational(7, 2));
    CHECK(h.error_bound == 0);

    ZetaCombination diff;
    diff.add_zeta(2, 1);
    diff.add_zeta(3, -1);
    const HighPrecisionValue d = eval_combination(diff, 25);
    CHECK(abs(d.value - (kZeta2 - kZeta3)) <= d.error_bound + 2 * kRef40);
    CHECK(d.value_string(10) == "4.428771637e-01");
}

TEST_CASE("relative evaluation keeps significant digits for tiny values") {
    const ZetaCombination c = decompose(legendre_coeffs(6), 2, 1);
    const HighPrecisionValue v = eval_combination_relative(c, 20);
    CHECK(sgn(v.value) != 0);
    CHECK(v.error_bound <= abs(v.value) * ten_to_minus(20));
}

TEST_CASE("high precision value rounding and formatting") {
    const HighPrecisionValue x{Rational(123456789, 1000), Rational(1, 1000000)};
    const HighPrecisionValue r = x.rounded(4);
    CHECK(r.value == 123500);
    CHECK(r.error_bound >= Rational(211, 1000));
    CHECK(r.contains(x.value));
    CHECK(format_scientific(Rational(-1, 8), 3) == "-1.25e-01");
    CHECK(format_scientific(Rational(0), 3) == "0");
    CHECK(format_scientific_up(Rational(1001, 1000), 3) == "1.01e+00");
    const nlohmann::json j = x.to_json(5);
    CHECK(j["value"] == "1.2346e+05");
}

TEST_CASE("hp arithmetic encloses the exact result") {
    const HighPrecisionValue a{Rational(3, 2), Rational(1, 1000)};
    const HighPrecisionValue b{Rational(-2, 3), Rational(1, 500)};
    const HighPrecisionValue p = hp_mul(a, b);
    const HighPrecisionValue q = hp_div(a, b);
    for (const Rational& da : {Rational(-1, 1000), Rational(1, 1000)})
        for (const Rational& db : {Rational(-1, 500), Rational(1, 500)}) {
            CHECK(p.contains((a.value + da) * (b.value + db)));
            CHECK(q.contains((a.value + da) / (b.value + db)));
        }
    CHECK(hp_abs(b).value == Rational(2, 3));
}

TEST_CASE("exp and pi") {
    const HighPrecisionValue e = exp_value(1, 30);
    CHECK(abs(e.value - oracle::decimal("2.718281828459045235360287471352662497757")) <= e.error_bound + kRef40);
    const HighPrecisionValue pi = pi_value(35);
    CHECK(abs(pi.value - oracle::decimal("3.14159265358979323846264338327950288419716939937510")) <=
          pi.error_bound + ten_to_minus(50));
    const HighPrecisionValue e10 = exp_value(10, 20);
    CHECK(abs(e10.value - oracle::decimal("22026.465794806716516957900645284244366353512618556781")) <=
          e10.error_bound + ten_to_minus(48));
}

TEST_CASE("direct sum examples") {
    {
        const DirectSum d = direct_sum_value(legendre_coeffs(0), 3, 2, ten_to_minus(12));
        CHECK(d.value.error_bound <= ten_to_minus(12));
        CHECK(abs(d.value.value - 12 * kZeta5) <= d.value.error_bound + 12 * kRef40);
    }
    {
        const DirectSum d = direct_sum_value(legendre_coeffs(1), 2, 1, ten_to_minus(10));
        const HighPrecisionValue exact = eval_combination(decompose(legendre_coeffs(1), 2, 1), 30);
        CHECK(d.value.error_bound <= ten_to_minus(10));
        CHECK(abs(d.value.value - exact.value) <= d.value.error_bound + exact.error_bound);
    }
    {
        const DirectSum d = direct_sum_value(legendre_coeffs(2), 3, 0, ten_to_minus(9));
        const HighPrecisionValue exact = eval_combination(decompose(legendre_coeffs(2), 3, 0), 30);
        CHECK(abs(d.value.value - exact.value) <= d.value.error_bound + exact.error_bound);
    }
}

TEST_CASE("direct sum of zeta(2) to 1e-8") {
    const DirectSum d = direct_sum_value(legendre_coeffs(0), 2, 0, ten_to_minus(8), 400'000'000);
    CHECK(d.terms > kDefaultMaxTerms);
    CHECK(d.value.error_bound <= ten_to_minus(8));
    CHECK(abs(d.value.value - kZeta2) <= d.value.error_bound + kRef40);
    CHECK_THROWS_AS(direct_sum_value(legendre_coeffs(0), 2, 0, ten_to_minus(8)), UnreachableTarget);
}

TEST_CASE("direct sum reports unreachable targets") {
    try {
        direct_sum_value(legendre_coeffs(0), 2, 0, ten_to_minus(30), 100000);
        FAIL("expected UnreachableTarget");
    } catch (const UnreachableTarget& e) {
        CHECK(e.k_estimate() > 1e20);
    }
    const SummandSpec s = build_summand(legendre_coeffs(0), 2, 0);
    const Rational reach = reachable_direct_error(s, 100000);
    const DirectSum d = direct_sum_value(legendre_coeffs(0), 2, 0, reach, 100000);
    CHECK(d.terms <= 100000);
    CHECK(abs(d.value.value - kZeta2) <= d.value.error_bound + kRef40);
}

TEST_CASE("direct sum is independent of the thread count") {
    const DirectSum a = direct_sum_value(legendre_coeffs(2), 2, 1, ten_to_minus(9), kDefaultMaxTerms, 1);
    const DirectSum b = direct_sum_value(legendre_coeffs(2), 2, 1, ten_to_minus(9), kDefaultMaxTerms, 3);
    CHECK(a.value.value == b.value.value);
    CHECK(a.terms == b.terms);
}

TEST_CASE("monte carlo examples") {
    {
        const MCEstimate mc = mc_integral(legendre_coeffs(0), 2, 0, 0.0, 1000000, 42);
        CHECK(std::abs(mc.mean - kZeta2.get_d()) <= 4 * mc.stderr_);
        CHECK(mc.samples == 1000000);
        CHECK(mc.seed == 42);
    }
    {
        const MCEstimate mc = mc_integral(legendre_coeffs(0), 3, 2, 0.0, 1000000, 42);
        CHECK(std::abs(mc.mean - 12 * kZeta5.get_d()) <= 4 * mc.stderr_);
    }
    {
        const MCEstimate mc = mc_integral(legendre_coeffs(0), 2, 0, 1.0, 1000000, 42);
        CHECK(std::abs(mc.mean - (kZeta2.get_d() - 1)) <= 4 * mc.stderr_);
    }
}

TEST_CASE("monte carlo is deterministic") {
    const MCEstimate a = mc_integral(legendre_coeffs(1), 2, 1, 0.0, 50000, 7, 1);
    const MCEstimate b = mc_integral(legendre_coeffs(1), 2, 1, 0.0, 50000, 7, 1);
    const MCEstimate c = mc_integral(legendre_coeffs(1), 2, 1, 0.0, 50000, 7, 4);
    const MCEstimate d = mc_integral(legendre_coeffs(1), 2, 1, 0.0, 50000, 8, 1);
    CHECK(a == b);
    CHECK(a == c);
    CHECK_FALSE(a == d);
}

TEST_CASE("monte carlo validation") {
    CHECK_THROWS_AS(mc_integral(legendre_coeffs(0), 1, 0, 0.0, 100000, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_integral(legendre_coeffs(0), 2, -1, 0.0, 100000, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_integral(legendre_coeffs(0), 2, 0, -0.5, 100000, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_integral(legendre_coeffs(0), 2, 0, 0.0, 10, 1), std::invalid_argument);
}

TEST_CASE("generating function at shifted z") {
    for (unsigned n = 0; n <= 1; ++n)
        for (unsigned z : {1u, 2u}) {
            const IntPolynomial p = legendre_coeffs(n);
            const HighPrecisionValue series = shifted_series_value(p, 2, z, 20);
            const MCEstimate mc = mc_integral(p, 2, 0, static_cast<double>(z), 400000, 1234);
            CAPTURE(n);
            CAPTURE(z);
            CHECK(std::abs(mc.mean - series.value.get_d()) <= 4 * mc.stderr_);
        }
    // z = 0 reduces to the full decomposition; z = 1 drops the first term.
    const IntPolynomial p0 = legendre_coeffs(0);
    const HighPrecisionValue s1 = shifted_series_value(p0, 2, 1, 30);
    CHECK(abs(s1.value - (kZeta2 - 1)) <= s1.error_bound + kRef40);
    const HighPrecisionValue s0 = shifted_series_value(p0, 2, 0, 30);
    CHECK(abs(s0.value - kZeta2) <= s0.error_bound + kRef40);
}

TEST_CASE("crosscheck examples") {
    for (auto [n, r, v] : {std::tuple{0u, 3, 2}, std::tuple{1u, 2, 1}, std::tuple{2u, 3, 0}}) {
        const VerificationReport rep = crosscheck(n, r, v, 30, 1000000, 42);
        CAPTURE(n);
        CAPTURE(r);
        CAPTURE(v);
        CHECK(rep.exact_vs_direct);
        CHECK(rep.exact_vs_mc);
        CHECK(rep.pass());
        const nlohmann::json j = to_json(rep);
        CHECK(j["mc"]["seed"] == 42);
        CHECK(j["mc"]["samples"] == 1000000);
        CHECK(j["pass"] == true);
    }
}
