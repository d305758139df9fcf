#include "qram/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "qram/divisor.hpp"
#include "qram/generators.hpp"
#include "qram/symbolic.hpp"

namespace qram {

namespace {

using SeriesFn = std::function<Series(int)>;
using ValueFn = std::function<Rational(long)>;

SeriesFn named(std::string name) {
    return [name = std::move(name)](int n) { return generate(parse_series_name(name), n); };
}

SeriesFn poly(Ring ring, std::string text) {
    const WeightedPoly p = WeightedPoly::parse(ring, text);
    return [p](int n) { return eval_as_series(p, n); };
}

SeriesFn classical(std::string text) { return poly(Ring::classical, std::move(text)); }
SeriesFn hahn_poly(std::string text) { return poly(Ring::hahn, std::move(text)); }

SeriesFn times(Rational c, SeriesFn f) {
    return [c = std::move(c), f = std::move(f)](int n) { return scale(c, f(n)); };
}
SeriesFn product(SeriesFn a, SeriesFn b) {
    return [a = std::move(a), b = std::move(b)](int n) { return mul(a(n), b(n)); };
}
SeriesFn sum(SeriesFn a, SeriesFn b) {
    return [a = std::move(a), b = std::move(b)](int n) { return add(a(n), b(n)); };
}
SeriesFn difference(SeriesFn a, SeriesFn b) {
    return [a = std::move(a), b = std::move(b)](int n) { return sub(a(n), b(n)); };
}
SeriesFn euler(SeriesFn f) {
    return [f = std::move(f)](int n) { return euler_op(f(n)); };
}
/// f(q^k) at order n.
SeriesFn at_power(SeriesFn f, int k) {
    return [f = std::move(f), k](int n) { return substitute_power(f((n + k - 1) / k), k).truncated(n); };
}
SeriesFn negated_argument(SeriesFn f) {
    return [f = std::move(f)](int n) { return substitute_negate(f(n)); };
}
/// q^k * f.
SeriesFn shifted(SeriesFn f, int k) {
    return [f = std::move(f), k](int n) { return mul(Series::monomial(Rational(1), k, n), f(n)); };
}
SeriesFn products_of(std::vector<ProductFactor> factors) {
    return [factors = std::move(factors)](int n) { return product_expansion(factors, n); };
}

Rational sigma(DivisorKind kind, unsigned s, long n) { return divisor_sum(kind, s, n); }
Rational sigma_half(DivisorKind kind, unsigned s, long n) { return divisor_sum(kind, s, Rational(n, 2)); }

ValueFn conv(std::vector<ConvolutionTerm> terms, Rational factor = Rational(1)) {
    return [terms = std::move(terms), factor = std::move(factor)](long n) {
        return factor * convolution(terms, n);
    };
}

constexpr auto plain = DivisorKind::plain;
constexpr auto tilde = DivisorKind::tilde;
constexpr auto hat = DivisorKind::hat;

Identity series_identity(std::string id, std::string statement, SeriesFn lhs, SeriesFn rhs) {
    Identity out;
    out.id = std::move(id);
    out.kind = IdentityKind::series;
    out.statement = std::move(statement);
    out.lhs_series = std::move(lhs);
    out.rhs_series = std::move(rhs);
    return out;
}

Identity convolution_identity(std::string id, std::string statement, Domain domain, ValueFn lhs, ValueFn rhs) {
    Identity out;
    out.id = std::move(id);
    out.kind = IdentityKind::convolution;
    out.statement = std::move(statement);
    out.domain = domain;
    out.lhs_value = std::move(lhs);
    out.rhs_value = std::move(rhs);
    return out;
}

void add_series_identities(std::vector<Identity>& out) {
    const auto P = named("P");
    const auto Q = named("Q");
    const auto R = named("R");
    const auto hP = named("hahnP");
    const auto hE = named("hahnE");
    const auto hQ = named("hahnQ");
    const auto hR = named("hahnR");

    // Differential equations.
    out.push_back(series_identity("ode.P", "12 qP' = P^2 - Q", times(12, euler(P)), classical("P^2 - Q")));
    out.push_back(series_identity("ode.Q", "3 qQ' = PQ - R", times(3, euler(Q)), classical("PQ - R")));
    out.push_back(series_identity("ode.R", "2 qR' = PR - Q^2", times(2, euler(R)), classical("PR - Q^2")));
    out.push_back(series_identity("ode.hP", "4 q hP' = hP^2 - hQ", times(4, euler(hP)), hahn_poly("P^2 - Q")));
    out.push_back(series_identity("ode.hE", "2 q hE' = hE hP - hQ", times(2, euler(hE)), hahn_poly("EP - Q")));
    out.push_back(series_identity("ode.hQ", "q hQ' = hP hQ - hE hQ", euler(hQ), hahn_poly("PQ - EQ")));
    out.push_back(series_identity("ode.hR", "8 q hR' = 12 hP hR - 4 hQ^2 - 8 hE hR", times(8, euler(hR)),
                                  hahn_poly("12PR - 4Q^2 - 8ER")));
    out.push_back(series_identity("hahn.R_eq_EQ", "hR = hE hQ", hR, product(hE, hQ)));

    // Classical generators in terms of Hahn's.
    out.push_back(series_identity("lemma1.P", "P = 3 hP - 2 hE", P, hahn_poly("3P - 2E")));
    out.push_back(series_identity("lemma1.Q", "Q = 4 hE^2 - 3 hQ", Q, hahn_poly("4E^2 - 3Q")));
    out.push_back(series_identity("lemma1.R", "R = -8 hE^3 + 9 hR", R, hahn_poly("-8E^3 + 9R")));

    // Ratio tables, cross-multiplied.
    const std::vector<std::pair<int, std::string>> t_table{
        {2, "P"}, {4, "3P^2 - 2Q"}, {6, "15P^3 - 30PQ + 16R"}, {8, "105P^4 - 420P^2Q + 448PR - 132Q^2"}};
    for (const auto& [index, text] : t_table) {
        const std::string name = "T" + std::to_string(index);
        out.push_back(series_identity("t1." + name, name + " = (" + text + ") T0", named(name),
                                      product(classical(text), named("T0"))));
    }
    const std::vector<std::pair<int, std::string>> f_table{{2, "P"},
                                                           {4, "(5P^2 - 2Q)/3"},
                                                           {6, "(35P^3 - 42PQ + 16R)/9"},
                                                           {8, "(35P^4 - 84P^2Q - 12Q^2 + 64PR)/3"}};
    for (const auto& [index, text] : f_table) {
        const std::string name = "F" + std::to_string(index);
        out.push_back(series_identity("t2." + name, name + " = (" + text + ") F0", named(name),
                                      product(classical(text), named("F0"))));
    }
    const std::vector<std::pair<int, std::string>> psi_table{{2, "P"}, {4, "3P^2 - 2Q"}, {6, "15P^3 - 30PQ + 16R"}};
    for (const auto& [index, text] : psi_table) {
        const std::string name = "psi" + std::to_string(index);
        out.push_back(series_identity("t3." + name, name + " = (" + text + ") psi0 [hahn generators]", named(name),
                                      product(hahn_poly(text), named("psi0"))));
    }
    const std::vector<std::pair<int, std::string>> eps_table{{3, "9P - 8E"},
                                                             {5, "135P^2 - 240PE + 64E^2 + 42Q"}};
    for (const auto& [index, text] : eps_table) {
        const std::string name = "eps" + std::to_string(index);
        out.push_back(series_identity("t4." + name, name + " = (" + text + ") eps1 [hahn generators]", named(name),
                                      product(hahn_poly(text), named("eps1"))));
    }

    // Mixed identities: 4 psi0 eps1 X2 = X0 (3 eps1 psi2 + psi0 eps3) for X = T, F.
    const auto mixed = sum(times(3, product(named("eps1"), named("psi2"))), product(named("psi0"), named("eps3")));
    out.push_back(series_identity("cor.mixed_T", "4 psi0 eps1 T2 = T0 (3 eps1 psi2 + psi0 eps3)",
                                  times(4, product(product(named("psi0"), named("eps1")), named("T2"))),
                                  product(named("T0"), mixed)));
    out.push_back(series_identity("cor.mixed_F", "4 psi0 eps1 F2 = F0 (3 eps1 psi2 + psi0 eps3)",
                                  times(4, product(product(named("psi0"), named("eps1")), named("F2"))),
                                  product(named("F0"), mixed)));

    struct PhiEntry {
        int r;
        int s;
        long factor;
        std::string text;
    };
    const std::vector<PhiEntry> phi_table{{1, 2, 288, "Q - P^2"},         {1, 4, 720, "PQ - R"},
                                          {1, 6, 1008, "Q^2 - PR"},        {2, 3, 1728, "3PQ - 2R - P^3"},
                                          {2, 5, 1728, "P^2Q - 2PR + Q^2"}, {2, 7, 1728, "2PQ^2 - P^2R - QR"}};
    for (const auto& e : phi_table) {
        const std::string suffix = std::to_string(e.r) + "_" + std::to_string(e.s);
        out.push_back(series_identity("phi." + suffix,
                                      std::to_string(e.factor) + " Phi_{" + std::to_string(e.r) + "," +
                                          std::to_string(e.s) + "} = " + e.text,
                                      times(e.factor, named("phi_" + suffix)), classical(e.text)));
    }
    const std::vector<PhiEntry> tr_table{{1, 2, 32, "P^2 - Q"},
                                         {1, 4, 16, "-PQ + R"},
                                         {1, 6, 16, "3PR - Q^2 - 2ER"},
                                         {2, 3, 64, "P^3 - 3PQ + 2R"},
                                         {2, 5, 64, "-5P^2Q - Q^2 + 10PR - 4ER"},
                                         {2, 7, 64, "21P^2R + 13QR - 14PQ^2 - 28PER + 8E^2R"}};
    for (const auto& e : tr_table) {
        const std::string suffix = std::to_string(e.r) + "_" + std::to_string(e.s);
        out.push_back(series_identity("tr." + suffix,
                                      std::to_string(e.factor) + " Phi~_{" + std::to_string(e.r) + "," +
                                          std::to_string(e.s) + "} = " + e.text + " [hahn generators]",
                                      times(e.factor, named("phi_tilde_" + suffix)), hahn_poly(e.text)));
    }

    out.push_back(series_identity("e8.square", "E8 = Q^2", named("E8"), classical("Q^2")));
    out.push_back(series_identity("e10.QR", "E10 = QR", named("E10"), classical("QR")));
    out.push_back(series_identity("e14.QQR", "E14 = Q^2 R", named("E14"), classical("Q^2R")));

    // Products and theta functions.
    out.push_back(series_identity("gauss_jacobi", "F0 = prod (1 - q^n)^3", named("F0"), products_of({{1, 1, 3}})));
    out.push_back(series_identity("pentagonal", "prod (1 - q^n) = sum (-1)^k q^{k(3k-1)/2}",
                                  products_of({{1, 1, 1}}), named("T0")));
    out.push_back(series_identity("fact_f1", "eps1 = varphi(-q)^2 f(-q)", named("eps1"),
                                  product(product(negated_argument(named("varphi")), negated_argument(named("varphi"))),
                                          named("f_minus_q"))));
    out.push_back(series_identity("eps1.product", "eps1 = prod (1 - q^n)^3 (1 - q^{2n-1})^2", named("eps1"),
                                  products_of({{1, 1, 3}, {1, 2, 2}})));
    out.push_back(series_identity("varphi_neg.product", "varphi(-q) = (q;q)_inf (q;q^2)_inf",
                                  negated_argument(named("varphi")), products_of({{1, 1, 1}, {1, 2, 1}})));
    out.push_back(series_identity("theta.psi", "f(q, q^3) = psi(q)", named("theta_+1_+3"), named("psi")));
    out.push_back(series_identity("theta.eps", "f(q, q^2) = eps0(q)", named("theta_+1_+2"), named("eps0")));
    out.push_back(series_identity("prop_p2", "psi(q) = eps0(q^3) + q psi(q^9)", named("psi"),
                                  sum(at_power(named("eps0"), 3), shifted(at_power(named("psi"), 9), 1))));
    out.push_back(series_identity(
        "prop_p2.neg", "psi(-q) = eps0(-q^3) - q psi(-q^9)", negated_argument(named("psi")),
        difference(negated_argument(at_power(named("eps0"), 3)), shifted(negated_argument(at_power(named("psi"), 9)), 1))));
    out.push_back(series_identity("lemma_lx", "f(q, q^5) eps0(q^2) = eps0(q) psi(q^3)",
                                  product(named("theta_+1_+5"), at_power(named("eps0"), 2)),
                                  product(named("eps0"), at_power(named("psi"), 3))));
    out.push_back(series_identity("cor1.q_lemma", "4 Q(q^2) + Q(q) = 5 hE^2", sum(times(4, at_power(Q, 2)), Q),
                                  hahn_poly("5E^2")));
    out.push_back(series_identity("cor1.r_lemma", "8 R(q^2) - R(q) = 7 hE^3",
                                  difference(times(8, at_power(R, 2)), R), hahn_poly("7E^3")));
    out.push_back(series_identity("t12.core", "E8(q) - 16 E8(q^2) = 15 hE^4 - 30 hE hR",
                                  difference(named("E8"), times(16, at_power(named("E8"), 2))),
                                  hahn_poly("15E^4 - 30ER")));
    out.push_back(series_identity("sigma.two_hat", "sigma(n) + sigma~(n) = 2 sigma^(n)",
                                  [](int n) { return add(lambert(plain, 1, n), lambert(tilde, 1, n)); },
                                  [](int n) { return scale(2, lambert(hat, 1, n)); }));
}

void add_convolution_identities(std::vector<Identity>& out) {
    out.push_back(convolution_identity(
        "t9", "sigma_7(n) = 120 sum_{i+j=n} sigma_3(i) sigma_3(j)", Domain::all(),
        [](long n) { return sigma(plain, 7, n); }, conv({{plain, 3}, {plain, 3}}, 120)));
    out.push_back(convolution_identity(
        "t10", "sigma~_5(n) = -48 sum_{i+j=n} sigma^(i) sigma~_3(j)", Domain::all(),
        [](long n) { return sigma(tilde, 5, n); }, conv({{hat, 1}, {tilde, 3}}, -48)));
    out.push_back(convolution_identity(
        "t11.a", "5 sigma_3(n) - sigma~_3(n) = 48 sum_{i+j=n} sigma^(i) sigma^(j)", Domain::all(),
        [](long n) { return Rational(5) * sigma(plain, 3, n) - sigma(tilde, 3, n); }, conv({{hat, 1}, {hat, 1}}, 48)));
    out.push_back(convolution_identity(
        "t11.b", "7 sigma_5(n) + sigma~_5(n) = 1536 sum_{i+j+k=n} sigma^(i) sigma^(j) sigma^(k)", Domain::all(),
        [](long n) { return Rational(7) * sigma(plain, 5, n) + sigma(tilde, 5, n); },
        conv({{hat, 1}, {hat, 1}, {hat, 1}}, 1536)));
    out.push_back(convolution_identity(
        "cor1.a", "sigma_3(n) = 12 sum_{i+j=n} sigma^(i) sigma^(j), n odd", Domain::odd(),
        [](long n) { return sigma(plain, 3, n); }, conv({{hat, 1}, {hat, 1}}, 12)));
    out.push_back(convolution_identity(
        "cor1.b", "sigma_5(n) = 192 sum_{i+j+k=n} sigma^(i) sigma^(j) sigma^(k), n odd", Domain::odd(),
        [](long n) { return sigma(plain, 5, n); }, conv({{hat, 1}, {hat, 1}, {hat, 1}}, 192)));
    out.push_back(convolution_identity(
        "t12", "sigma_7(n) = 12 (864 sum_{i+j+k+l=n} sigma^ sigma^ sigma^ sigma^ - sum_{i+j=n} sigma^(i) sigma~_5(j)), n odd",
        Domain::odd(), [](long n) { return sigma(plain, 7, n); },
        [](long n) {
            const Rational quadruple = convolution({{hat, 1}, {hat, 1}, {hat, 1}, {hat, 1}}, n);
            const Rational mixed = convolution({{hat, 1}, {tilde, 5}}, n);
            return Rational(12) * (Rational(864) * quadruple - mixed);
        }));
    out.push_back(convolution_identity(
        "cheng_williams", "sum_{m=1}^{n} sigma(4m-3) sigma(4n-(4m-3)) = 4 sigma_3(n) - 4 sigma_3(n/2)",
        Domain::positive(),
        [](long n) {
            Rational total;
            for (long m = 1; m <= n; ++m) total += sigma(plain, 1, 4 * m - 3) * sigma(plain, 1, 4 * n - (4 * m - 3));
            return total;
        },
        [](long n) { return Rational(4) * sigma(plain, 3, n) - Rational(4) * sigma_half(plain, 3, n); }));
    out.push_back(convolution_identity(
        "remark.tilde", "sigma~_3(n) = sigma_3(n) - 16 sigma_3(n/2)", Domain::positive(),
        [](long n) { return sigma(tilde, 3, n); },
        [](long n) { return sigma(plain, 3, n) - Rational(16) * sigma_half(plain, 3, n); }));
    out.push_back(convolution_identity(
        "remark.hat", "sigma^_3(n) = sigma_3(n) - 2 sigma_3(n/2)", Domain::positive(),
        [](long n) { return sigma(hat, 3, n); },
        [](long n) { return sigma(plain, 3, n) - Rational(2) * sigma_half(plain, 3, n); }));
}

std::vector<Identity> build_registry() {
    std::vector<Identity> out;
    add_series_identities(out);
    add_convolution_identities(out);
    std::sort(out.begin(), out.end(), [](const Identity& a, const Identity& b) { return a.id < b.id; });
    return out;
}

const Identity& require_kind(std::string_view id, IdentityKind kind) {
    const Identity* identity = lookup(id);
    if (identity == nullptr) throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
    if (identity->kind != kind)
        throw std::invalid_argument("identity '" + std::string(id) + "' is a " +
                                    std::string(to_string(identity->kind)) + " identity");
    return *identity;
}

}  // namespace

std::string_view to_string(IdentityKind kind) { return kind == IdentityKind::series ? "series" : "convolution"; }

std::string Domain::str() const {
    if (first == 0 && step == 1) return "all n >= 0";
    if (first == 1 && step == 1) return "all n >= 1";
    if (first == 1 && step == 2) return "odd n";
    return "n = " + std::to_string(first) + " mod " + std::to_string(step) + ", n >= " + std::to_string(first);
}

const std::vector<Identity>& registry() {
    static const std::vector<Identity> identities = build_registry();
    return identities;
}

const Identity* lookup(std::string_view id) {
    const auto& all = registry();
    const auto it = std::lower_bound(all.begin(), all.end(), id,
                                     [](const Identity& a, std::string_view key) { return a.id < key; });
    return (it != all.end() && it->id == id) ? &*it : nullptr;
}

VerifyReport verify(const Identity& identity, int order, long n_max) {
    VerifyReport report{identity.id, identity.kind, identity.statement, true, 0, std::nullopt};
    if (identity.kind == IdentityKind::series) {
        const Series lhs = identity.lhs_series(order);
        const Series rhs = identity.rhs_series(order);
        report.checked_up_to = std::min({order, lhs.order(), rhs.order()});
        const int n = first_difference(lhs, rhs);
        if (n >= 0) {
            report.passed = false;
            report.first_failure = Failure{n, lhs[n], rhs[n]};
        }
        return report;
    }
    report.checked_up_to = n_max;
    for (long n = identity.domain.first; n <= n_max; n += identity.domain.step) {
        Rational lhs = identity.lhs_value(n);
        Rational rhs = identity.rhs_value(n);
        if (lhs != rhs) {
            report.passed = false;
            report.first_failure = Failure{n, std::move(lhs), std::move(rhs)};
            break;
        }
    }
    return report;
}

VerifyReport verify_series(std::string_view id, int order) {
    return verify(require_kind(id, IdentityKind::series), order, 0);
}

VerifyReport verify_convolution(std::string_view id, long n_max) {
    return verify(require_kind(id, IdentityKind::convolution), 0, n_max);
}

std::vector<VerifyReport> verify_all(int order, long n_max) {
    std::vector<VerifyReport> reports;
    for (const auto& identity : registry()) reports.push_back(verify(identity, order, n_max));
    return reports;
}

}  // namespace qram
