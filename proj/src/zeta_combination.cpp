#include "zetalab/zeta_combination.hpp"

#include <string>

#include "zetalab/serialize.hpp"

namespace zetalab {

void ZetaCombination::add_zeta(int j, const Rational& q) {
    if (sgn(q) == 0) return;
    auto [it, inserted] = zeta_coeffs.try_emplace(j, q);
    if (!inserted) {
        it->second += q;
        if (sgn(it->second) == 0) zeta_coeffs.erase(it);
    }
}

Rational ZetaCombination::coeff(int j) const {
    auto it = zeta_coeffs.find(j);
    return it == zeta_coeffs.end() ? Rational(0) : it->second;
}

int ZetaCombination::max_index() const { return zeta_coeffs.empty() ? 0 : zeta_coeffs.rbegin()->first; }

nlohmann::json to_json(const ZetaCombination& c) {
    auto zeta = nlohmann::json::object();
    for (const auto& [j, q] : c.zeta_coeffs) zeta[std::to_string(j)] = to_string(q);
    return {{"zeta", zeta}, {"constant", to_string(c.constant)}};
}

ZetaCombination zeta_combination_from_json(const nlohmann::json& j) {
    ZetaCombination out;
    for (const auto& [key, value] : j.at("zeta").items()) {
        std::size_t used = 0;
        int idx = std::stoi(key, &used);
        if (used != key.size() || idx < 2) throw std::invalid_argument("bad zeta index '" + key + "'");
        out.add_zeta(idx, parse_rational(value.get<std::string>()));
    }
    out.constant = parse_rational(j.at("constant").get<std::string>());
    return out;
}

}  // namespace zetalab
