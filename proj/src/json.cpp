#include "qram/json.hpp"

#include <stdexcept>

namespace qram {

namespace {

Ring ring_from_string(const std::string& text) {
    if (text == "classical") return Ring::classical;
    if (text == "hahn") return Ring::hahn;
    throw std::invalid_argument("unknown ring '" + text + "'");
}

}  // namespace

void to_json(nlohmann::json& j, const Rational& r) { j = r.str(); }

void from_json(const nlohmann::json& j, Rational& r) { r = Rational::parse(j.get<std::string>()); }

void to_json(nlohmann::json& j, const Series& s) {
    j = nlohmann::json{{"order", s.order()}, {"coeffs", s.coeffs()}};
}

void from_json(const nlohmann::json& j, Series& s) {
    auto coeffs = j.at("coeffs").get<std::vector<Rational>>();
    const int order = j.at("order").get<int>();
    if (order + 1 != static_cast<int>(coeffs.size())) throw std::invalid_argument("series order and coeffs disagree");
    s = Series(std::move(coeffs));
}

void to_json(nlohmann::json& j, const WeightedPoly& p) {
    auto terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exps", e}, {"coeff", c}});
    j = nlohmann::json{{"ring", to_string(p.ring())}, {"terms", std::move(terms)}};
}

void from_json(const nlohmann::json& j, WeightedPoly& p) {
    WeightedPoly out(ring_from_string(j.at("ring").get<std::string>()));
    for (const auto& t : j.at("terms")) out.add_term(t.at("exps").get<Exponents>(), t.at("coeff").get<Rational>());
    p = std::move(out);
}

void to_json(nlohmann::json& j, const VerifyReport& r) {
    j = nlohmann::json{{"id", r.id},
                       {"kind", to_string(r.kind)},
                       {"status", r.passed ? "pass" : "fail"},
                       {"checked_up_to", r.checked_up_to}};
    if (r.first_failure)
        j["first_failure"] = {{"n", r.first_failure->n}, {"lhs", r.first_failure->lhs}, {"rhs", r.first_failure->rhs}};
}

void to_json(nlohmann::json& j, const NumericReport& r) {
    j = nlohmann::json{{"id", r.id},
                       {"precision_bits", r.precision_bits},
                       {"abs_err", r.abs_err.str(6)},
                       {"rel_err", r.rel_err.str(6)},
                       {"tolerance", r.tolerance.str(6)},
                       {"value", r.series_value.str(40)},
                       {"status", r.passed ? "pass" : "fail"}};
    if (!r.note.empty()) j["note"] = r.note;
}

}  // namespace qram
