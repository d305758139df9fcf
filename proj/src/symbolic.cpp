#include "qram/symbolic.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace qram {

namespace {

WeightedPoly poly(Ring ring, std::string_view text) { return WeightedPoly::parse(ring, text); }

DerivationRules scaled(Ring ring, const Rational& scale, std::array<std::string_view, 4> base) {
    DerivationRules rules{ring, scale, {WeightedPoly(ring), WeightedPoly(ring), WeightedPoly(ring), WeightedPoly(ring)}};
    for (std::size_t slot = 0; slot < 4; ++slot)
        if (!base[slot].empty()) rules.images[slot] = scale * poly(ring, base[slot]);
    return rules;
}

}  // namespace

DerivationRules DerivationRules::classical(const Rational& scale) {
    return scaled(Ring::classical, scale, {"(P^2 - Q)/12", "", "(PQ - R)/3", "(PR - Q^2)/2"});
}

DerivationRules DerivationRules::hahn(const Rational& scale) {
    return scaled(Ring::hahn, scale, {"(P^2 - Q)/4", "(EP - Q)/2", "PQ - R", "(3PR - Q^2 - 2ER)/2"});
}

WeightedPoly derive(const DerivationRules& rules, const WeightedPoly& p) {
    if (p.ring() != rules.ring) throw std::invalid_argument("derivation rules and polynomial use different rings");
    WeightedPoly out(p.ring());
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t slot = 0; slot < 4; ++slot) {
            if (e[slot] == 0) continue;
            Exponents rest = e;
            --rest[slot];
            WeightedPoly monomial(p.ring());
            monomial.add_term(rest, c * Rational(static_cast<long>(e[slot])));
            out += monomial * rules.images[slot];
        }
    }
    return out;
}

Ring ring_of(Family fam) { return (fam == Family::T || fam == Family::F) ? Ring::classical : Ring::hahn; }

WeightedPoly ratio_poly(Family fam, int n) {
    if (n < 0) throw std::invalid_argument("ratio_poly needs n >= 0");
    const Ring ring = ring_of(fam);
    const Rational scale((fam == Family::T || fam == Family::Eps) ? 24L : 8L);
    const DerivationRules rules = ring == Ring::classical ? DerivationRules::classical(scale)
                                                          : DerivationRules::hahn(scale);
    // g = 1 + D(family_0)/family_0, the first ratio.
    const WeightedPoly g = fam == Family::Eps ? poly(ring, "9P - 8E") : WeightedPoly::generator(ring, 0);

    WeightedPoly r = WeightedPoly::constant(ring, Rational(1));
    for (int k = 0; k < n; ++k) r = (r * g + derive(rules, r)).canonical();
    return r;
}

WeightedPoly phi_poly(PhiVariant variant, int r, int s) {
    if (r < 0 || s < r) throw std::invalid_argument("phi_poly needs s >= r >= 0");
    if ((r + s) % 2 == 0) throw std::invalid_argument("phi_poly needs r + s odd");
    const int gap = s - r;
    WeightedPoly p(Ring::classical);
    if (variant == PhiVariant::plain) {
        switch (gap) {
            case 1: p = poly(Ring::classical, "(1 - P)/24"); break;
            case 3: p = poly(Ring::classical, "(Q - 1)/240"); break;
            case 5: p = poly(Ring::classical, "(1 - R)/504"); break;
            default: throw std::invalid_argument("phi_poly supports s - r in {1, 3, 5}");
        }
    } else {
        switch (gap) {
            case 1: p = poly(Ring::hahn, "(P - 1)/8"); break;
            case 3: p = poly(Ring::hahn, "(1 - Q)/16"); break;
            case 5: p = poly(Ring::hahn, "(R - 1)/8"); break;
            default: throw std::invalid_argument("phi_poly supports s - r in {1, 3, 5}");
        }
    }
    const DerivationRules rules =
        variant == PhiVariant::plain ? DerivationRules::classical() : DerivationRules::hahn();
    for (int k = 0; k < r; ++k) p = derive(rules, p).canonical();
    return p;
}

WeightedPoly classical_to_hahn(const WeightedPoly& p) {
    if (p.ring() != Ring::classical) throw std::invalid_argument("classical_to_hahn expects a classical polynomial");
    const std::array<WeightedPoly, 4> image{poly(Ring::hahn, "3P - 2E"), WeightedPoly(Ring::hahn),
                                            poly(Ring::hahn, "4E^2 - 3Q"), poly(Ring::hahn, "-8E^3 + 9R")};
    WeightedPoly out(Ring::hahn);
    for (const auto& [e, c] : p.terms()) {
        WeightedPoly term = WeightedPoly::constant(Ring::hahn, c);
        for (std::size_t slot = 0; slot < 4; ++slot)
            if (e[slot] > 0) term = term * pow(image[slot], static_cast<unsigned>(e[slot]));
        out += term;
    }
    return out.canonical();
}

Series eval_as_series(const WeightedPoly& p, int order) {
    std::array<Series, 4> base{Series(order), Series(order), Series(order), Series(order)};
    if (p.ring() == Ring::classical) {
        base = {eisenstein(1, order), Series(order), eisenstein(2, order), eisenstein(3, order)};
    } else {
        base = {hahn(HahnSeries::P, order), hahn(HahnSeries::E, order), hahn(HahnSeries::Q, order),
                hahn(HahnSeries::R, order)};
    }
    // powers[slot][k] = base[slot]^k, grown on demand.
    std::array<std::vector<Series>, 4> powers;
    for (auto& row : powers) row.push_back(Series::constant(Rational(1), order));
    const auto power = [&](std::size_t slot, int k) -> const Series& {
        auto& row = powers[slot];
        while (static_cast<int>(row.size()) <= k) row.push_back(mul(row.back(), base[slot]));
        return row[static_cast<std::size_t>(k)];
    };

    Series out(order);
    for (const auto& [e, c] : p.terms()) {
        std::optional<Series> term;
        for (std::size_t slot = 0; slot < 4; ++slot) {
            if (e[slot] == 0) continue;
            term = term ? mul(*term, power(slot, e[slot])) : power(slot, e[slot]);
        }
        out += term ? scale(c, *term) : Series::constant(c, order);
    }
    return out;
}

}  // namespace qram
