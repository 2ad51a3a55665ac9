#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "zetalab/rational_function.hpp"

namespace zetalab {

/// "p/q" in lowest terms with q > 0, or "p" when q = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p" or "p/q" (optional leading '-'); throws std::invalid_argument.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Polynomials serialize as arrays of coefficient strings, lowest degree first.
nlohmann::json to_json(const RatPolynomial& p);
nlohmann::json to_json(const IntPolynomial& p);
RatPolynomial rat_polynomial_from_json(const nlohmann::json& j);
IntPolynomial int_polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RationalFunction& f);

}  // namespace zetalab
