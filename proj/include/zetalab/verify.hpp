#pragma once

#include <cstdint>
#include <stdexcept>

#include <json.hpp>

#include "zetalab/high_precision.hpp"
#include "zetalab/moment_series.hpp"

namespace zetalab {

inline constexpr unsigned long kDefaultMaxTerms = 1'000'000;

/// The requested accuracy needs more terms than allowed.
class UnreachableTarget : public std::runtime_error {
public:
    UnreachableTarget(const std::string& what, double k_estimate)
        : std::runtime_error(what), k_estimate_(k_estimate) {}
    double k_estimate() const noexcept { return k_estimate_; }

private:
    double k_estimate_;
};

struct DirectSum {
    HighPrecisionValue value;
    unsigned long terms = 0;     // K
    unsigned fraction_digits = 0;  // fixed-point digits per term
};

/// (-1)^v sum_{k<K} G(k) with each term truncated to a fixed-point decimal.
///
/// K is the least cutoff with tail_bound(K) <= target/2, and the fixed-point
/// width keeps the accumulated truncation below target/2. Never touches the
/// partial-fraction path. Throws UnreachableTarget when K would exceed
/// max_terms.
DirectSum direct_sum_value(const IntPolynomial& poly, int r, int v, const Rational& target_error,
                           unsigned long max_terms = kDefaultMaxTerms, unsigned threads = 0);

/// Smallest target_error that direct_sum_value certifies within max_terms.
Rational reachable_direct_error(const SummandSpec& spec, unsigned long max_terms);

struct MCEstimate {
    double mean = 0;
    double stderr_ = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t rejected = 0;  // draws redrawn because they hit a singular point

    friend bool operator==(const MCEstimate&, const MCEstimate&) = default;
};

/// Plain uniform Monte Carlo estimate of
///   int_[0,1]^r (prod x)^z (-log prod x)^v / (1 - prod x) prod R(x_i) dx.
///
/// Samples are split over a fixed set of substreams, each a std::mt19937_64
/// seeded from seed_seq{seed_lo, seed_hi, stream}, and reduced in stream
/// order, so the result is bit-identical for any thread count.
MCEstimate mc_integral(const IntPolynomial& poly, int r, int v, double z, std::uint64_t samples, std::uint64_t seed,
                       unsigned threads = 0);

/// sum_{k>=0} M(z+k)^r for integer z >= 0, exact up to the zeta evaluation:
/// the full decomposition minus the first z terms.
HighPrecisionValue shifted_series_value(const IntPolynomial& poly, int r, unsigned z, unsigned precision);

struct VerificationReport {
    unsigned n = 0;
    int r = 0;
    int v = 0;
    unsigned precision = 0;
    HighPrecisionValue exact;
    DirectSum direct;
    Rational direct_target;
    MCEstimate mc;
    bool exact_vs_direct = false;
    bool exact_vs_mc = false;
    bool pass() const { return exact_vs_direct && exact_vs_mc; }
};

/// Runs the decomposition, direct-sum and Monte Carlo paths for P_n and
/// compares them: exact vs direct within the sum of the certified bounds,
/// exact vs MC within 4 standard errors. The direct-sum target is
/// 10^-precision, relaxed to what max_terms can certify.
VerificationReport crosscheck(unsigned n, int r, int v, unsigned precision, std::uint64_t samples,
                              std::uint64_t seed, unsigned long max_terms = kDefaultMaxTerms);

nlohmann::json to_json(const MCEstimate& mc);
nlohmann::json to_json(const VerificationReport& report);

}  // namespace zetalab
