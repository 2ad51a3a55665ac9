#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "zetalab/high_precision.hpp"
#include "zetalab/moment_series.hpp"
#include "zetalab/partial_fractions.hpp"
#include "zetalab/zeta_combination.hpp"

namespace zetalab {

/// An internal identity failed; this is an arithmetic bug, never bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Closed form of c_v = (-1)^v sum_{k>=0} G(k) for G = d^v/ds^v [M(s)^r].
///
/// Each term beta/(s+m)^j of G's partial fractions sums to
/// beta (zeta(j) - H_{m-1}^{(j)}) for j >= 2. The order-one residues must
/// cancel, after which sum_k sum_m beta_m/(k+m) = -sum_m beta_m H_{m-1}.
ZetaCombination decompose(const IntPolynomial& poly, int r, int v);

/// Same, from an already built summand.
ZetaCombination decompose(const SummandSpec& spec);

/// Cleared-denominator form of a decomposition plus lcm divisibility facts.
///
/// D is the least common denominator of the zeta-basis combination and is
/// the subject of the divisibility flags. For (r, v) = (3, 2) the value is
/// also written as (A pi^4 + B zeta(5) + G) / D_pi with integers A, B, G,
/// where pi^4 = 90 zeta(4); D_pi = lcm(D, denominator of q_4/90), so the
/// conversion can add factors of 2, 3 and 5 that D does not have.
struct DecompositionReport {
    unsigned n = 0;
    unsigned r = 0;
    unsigned v = 0;
    ZetaCombination combo;
    // Populated for (r, v) = (3, 2) only.
    std::optional<Integer> A;
    std::optional<Integer> B;
    std::optional<Integer> G;
    std::optional<Integer> D_pi;
    Integer D = 1;
    bool divides_lcm_n = false;   // D | lcm(1..n)^(r+v)
    bool divides_lcm_n1 = false;  // D | lcm(1..n+1)^(r+v)
    /// (3, 2) combination with zeta terms other than zeta(4), zeta(5).
    bool structure_mismatch = false;
};

/// Report for the shifted Legendre polynomial P_n.
DecompositionReport apery_report(unsigned n, int r, int v);

/// Report for an arbitrary polynomial; n is taken as its degree.
DecompositionReport build_report(const IntPolynomial& poly, int r, int v);

/// Same, reusing a combination computed elsewhere (e.g. loaded from a cache).
DecompositionReport build_report(unsigned n, int r, int v, ZetaCombination combo);

nlohmann::json to_json(const DecompositionReport& report);

/// Criterion quantities for one n.
struct CriterionRecord {
    unsigned n = 0;
    unsigned r = 0;
    unsigned v = 0;
    HighPrecisionValue abs_c;
    Integer lcm_pow;  // lcm(1..n)^(r+v)
    HighPrecisionValue lcm_scaled;
    HighPrecisionValue exp_scaled;
    std::optional<HighPrecisionValue> ratio_to_prev;
};

using PolynomialFamily = std::function<IntPolynomial(unsigned)>;
using CombinationSource = std::function<ZetaCombination(const IntPolynomial&, int, int)>;

struct CriterionOptions {
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// Computes the exact combination; defaults to decompose. Lets callers
    /// put a cache in front. Must be safe to call concurrently.
    CombinationSource source;
    /// Called after each completed n (from worker threads, serialized).
    std::function<void(unsigned n)> progress;
};

/// One record per n in [0, n_max], ordered by n. |c_v(n)| comes from the
/// exact combination evaluated at `precision` significant digits.
std::vector<CriterionRecord> rationality_criterion(const PolynomialFamily& family, int r, int v, unsigned n_max,
                                                   unsigned precision, const CriterionOptions& options = {});

}  // namespace zetalab
