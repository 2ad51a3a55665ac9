#include "zetalab/serialize.hpp"

#include <cctype>
#include <stdexcept>

namespace zetalab {

std::string to_string(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    return c.get_str(10);
}

std::string to_string(const Integer& z) { return z.get_str(10); }

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!is_digits(body)) throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!is_digits(den_text)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational out(num, den);
    out.canonicalize();
    return out;
}

nlohmann::json to_json(const RatPolynomial& p) {
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

nlohmann::json to_json(const IntPolynomial& p) {
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

RatPolynomial rat_polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
    std::vector<Rational> cs;
    for (const auto& e : j) cs.push_back(parse_rational(e.get<std::string>()));
    return RatPolynomial(std::move(cs));
}

IntPolynomial int_polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
    std::vector<Integer> cs;
    for (const auto& e : j) cs.push_back(parse_integer(e.get<std::string>()));
    return IntPolynomial(std::move(cs));
}

nlohmann::json to_json(const RationalFunction& f) {
    return {{"numerator", to_json(f.numerator())}, {"denominator", to_json(f.denominator())}};
}

}  // namespace zetalab
