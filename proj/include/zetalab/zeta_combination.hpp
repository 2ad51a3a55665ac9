#pragma once

#include <map>

#include <json.hpp>

#include "zetalab/polynomial.hpp"

namespace zetalab {

/// sum_j q_j zeta(j) + q_0 with exact rational q's. Zero coefficients are
/// never stored, so equality is structural.
struct ZetaCombination {
    std::map<int, Rational> zeta_coeffs;
    Rational constant = 0;

    /// Adds q * zeta(j), dropping the entry if it cancels to zero.
    void add_zeta(int j, const Rational& q);

    Rational coeff(int j) const;
    int max_index() const;  // 0 if there are no zeta terms

    friend bool operator==(const ZetaCombination&, const ZetaCombination&) = default;
};

/// {"zeta": {"j": "p/q", ...}, "constant": "p/q"}
nlohmann::json to_json(const ZetaCombination& c);
ZetaCombination zeta_combination_from_json(const nlohmann::json& j);

}  // namespace zetalab
