#include "qram/generators.hpp"

#include <charconv>
#include <optional>
#include <stdexcept>

namespace qram {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

// Adds coefficient(k) * q^exponent(k) for all k in Z (or k >= 0) with
// exponent <= order. Exponents must grow without bound in |k| on each side.
template <class Exponent, class Coefficient>
void add_theta_terms(Series& out, bool bilateral, Exponent exponent, Coefficient coefficient) {
    for (long k = 0;; ++k) {
        const long e = exponent(k);
        if (e > out.order()) break;
        out[static_cast<int>(e)] += coefficient(k);
    }
    if (!bilateral) return;
    for (long k = -1;; --k) {
        const long e = exponent(k);
        if (e > out.order()) break;
        out[static_cast<int>(e)] += coefficient(k);
    }
}

long triangular(long k) { return k * (k + 1) / 2; }
long pentagonal(long k) { return k * (3 * k + 1) / 2; }
long sign_of_parity(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

std::string_view to_string(HahnSeries which) {
    switch (which) {
        case HahnSeries::P: return "hahnP";
        case HahnSeries::E: return "hahnE";
        case HahnSeries::Q: return "hahnQ";
        case HahnSeries::R: return "hahnR";
    }
    return "?";
}

std::string_view to_string(Family fam) {
    switch (fam) {
        case Family::T: return "T";
        case Family::F: return "F";
        case Family::Psi: return "psi";
        case Family::Eps: return "eps";
    }
    return "?";
}

Family family_from_string(std::string_view text) {
    if (text == "T") return Family::T;
    if (text == "F") return Family::F;
    if (text == "psi") return Family::Psi;
    if (text == "eps") return Family::Eps;
    throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected T, F, psi or eps)");
}

Series eisenstein(int k, int order) {
    require(k >= 1, "eisenstein needs k >= 1");
    const unsigned s = static_cast<unsigned>(2 * k - 1);
    const Rational factor = -Rational(4L * k) / bernoulli(static_cast<unsigned>(2 * k));
    Series out = scale(factor, lambert(DivisorKind::plain, s, order));
    out[0] = Rational(1);
    return out;
}

Series hahn(HahnSeries which, int order) {
    DivisorKind kind = DivisorKind::tilde;
    unsigned s = 1;
    long factor = 8;
    switch (which) {
        case HahnSeries::P: break;
        case HahnSeries::E: kind = DivisorKind::hat; factor = 24; break;
        case HahnSeries::Q: s = 3; factor = -16; break;
        case HahnSeries::R: s = 5; factor = 8; break;
    }
    Series out = scale(Rational(factor), lambert(kind, s, order));
    out[0] = Rational(factor) * boundary_value(kind, s);
    return out;
}

Series family(Family fam, int index, int order) {
    require(index >= 0, "family index must be nonnegative");
    Series out(order);
    const auto power = [](long base, int e) { return Rational(ipow(base, static_cast<unsigned long>(e))); };
    switch (fam) {
        case Family::T:
            require(index % 2 == 0, "T family takes an even index");
            add_theta_terms(out, true, pentagonal,
                            [&](long k) { return Rational(sign_of_parity(k)) * power(6 * k + 1, index); });
            break;
        case Family::F:
            add_theta_terms(out, false, triangular,
                            [&](long k) { return Rational(sign_of_parity(k)) * power(2 * k + 1, index + 1); });
            break;
        case Family::Psi:
            add_theta_terms(out, false, triangular, [&](long k) { return power(2 * k + 1, index); });
            break;
        case Family::Eps:
            add_theta_terms(out, true, pentagonal, [&](long k) { return power(6 * k + 1, index); });
            break;
    }
    return out;
}

Series theta_f(int sa, int u, int sb, int v, int order) {
    require((sa == 1 || sa == -1) && (sb == 1 || sb == -1), "theta signs must be +1 or -1");
    require(u >= 1 && v >= 1, "theta exponents u, v must be positive");
    Series out(order);
    add_theta_terms(
        out, true, [&](long k) { return u * triangular(k) + v * triangular(k - 1); },
        [&](long k) {
            long sign = 1;
            if (sa < 0 && triangular(k) % 2 != 0) sign = -sign;
            if (sb < 0 && triangular(k - 1) % 2 != 0) sign = -sign;
            return Rational(sign);
        });
    return out;
}

Series varphi(int order) {
    Series out(order);
    out[0] = Rational(1);
    for (long k = 1; k * k <= order; ++k) out[static_cast<int>(k * k)] += Rational(2);
    return out;
}

Series psi(int order) {
    Series out(order);
    add_theta_terms(out, false, triangular, [](long) { return Rational(1); });
    return out;
}

Series f_minus_q(int order) { return theta_f(-1, 1, -1, 2, order); }

Series qpochhammer(int order) { return product_expansion({{1, 1, 1}}, order); }

Series phi_series(PhiVariant variant, int r, int s, int order) {
    require(r >= 0 && s >= 0, "phi series needs r, s >= 0");
    const DivisorKind kind = variant == PhiVariant::plain ? DivisorKind::plain : DivisorKind::tilde;
    Series out(order);
    for (long n = 1; n <= order; ++n) {
        Rational c;
        if (s >= r) {
            // sum_{d|n} (n/d)^r d^s = n^r sigma_{s-r}(n); the sign only depends on d.
            c = Rational(mpz_class(ipow(n, static_cast<unsigned long>(r)) *
                         divisor_sum_positive(kind, static_cast<unsigned>(s - r), n)));
        } else {
            mpz_class acc = 0;
            for (long d = 1; d <= n; ++d) {
                if (n % d != 0) continue;
                mpz_class term = ipow(n / d, static_cast<unsigned long>(r)) * ipow(d, static_cast<unsigned long>(s));
                if (kind == DivisorKind::tilde && d % 2 == 0) term = -term;
                acc += term;
            }
            c = Rational(acc);
        }
        out[static_cast<int>(n)] = c;
    }
    return out;
}

std::string to_string(const SeriesName& name) {
    return std::visit(
        overloaded{
            [](const names::Eisenstein& e) { return "E" + std::to_string(2 * e.k); },
            [](const names::Classical& c) { return std::string(1, c.which); },
            [](const names::Hahn& h) { return std::string(to_string(h.which)); },
            [](const names::FamilyMember& f) { return std::string(to_string(f.fam)) + std::to_string(f.index); },
            [](const names::Phi& p) {
                return std::string(p.variant == PhiVariant::plain ? "phi_" : "phi_tilde_") + std::to_string(p.r) +
                       "_" + std::to_string(p.s);
            },
            [](const names::Theta& t) {
                return std::string("theta_") + (t.sa > 0 ? "+" : "-") + std::to_string(t.u) + "_" +
                       (t.sb > 0 ? "+" : "-") + std::to_string(t.v);
            },
            [](const names::Named& n) -> std::string {
                switch (n.which) {
                    case NamedTheta::varphi: return "varphi";
                    case NamedTheta::psi: return "psi";
                    case NamedTheta::f_minus_q: return "f_minus_q";
                    case NamedTheta::qpochhammer: return "qpoch";
                }
                return "?";
            },
        },
        name);
}

namespace {

bool parse_int(std::string_view text, int& out) {
    if (text.empty()) return false;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc() && ptr == end;
}

bool parse_signed_exponent(std::string_view text, int& sign, int& value) {
    if (text.size() < 2 || (text[0] != '+' && text[0] != '-')) return false;
    sign = text[0] == '+' ? 1 : -1;
    return parse_int(text.substr(1), value) && value >= 1;
}

}  // namespace

std::vector<std::string> series_name_patterns() {
    return {"E<2k>",   "P",        "Q",      "R",          "hahnP",     "hahnE",           "hahnQ",
            "hahnR",   "T<2n>",    "F<n>",   "psi<n>",     "eps<n>",    "phi_<r>_<s>",     "phi_tilde_<r>_<s>",
            "theta_<+|-><u>_<+|-><v>", "varphi", "psi", "f_minus_q", "qpoch"};
}

SeriesName parse_series_name(std::string_view text) {
    const auto fail = [&]() -> std::invalid_argument {
        std::string valid;
        for (const auto& p : series_name_patterns()) valid += (valid.empty() ? "" : ", ") + p;
        return std::invalid_argument("unknown series name '" + std::string(text) + "'; valid forms: " + valid);
    };
    int value = 0;
    if (text == "P" || text == "Q" || text == "R") return names::Classical{text[0]};
    if (text == "hahnP") return names::Hahn{HahnSeries::P};
    if (text == "hahnE") return names::Hahn{HahnSeries::E};
    if (text == "hahnQ") return names::Hahn{HahnSeries::Q};
    if (text == "hahnR") return names::Hahn{HahnSeries::R};
    if (text == "varphi") return names::Named{NamedTheta::varphi};
    if (text == "psi") return names::Named{NamedTheta::psi};
    if (text == "f_minus_q") return names::Named{NamedTheta::f_minus_q};
    if (text == "qpoch") return names::Named{NamedTheta::qpochhammer};

    if (text.starts_with("E") && parse_int(text.substr(1), value) && value >= 2 && value % 2 == 0)
        return names::Eisenstein{value / 2};
    if (text.starts_with("T") && parse_int(text.substr(1), value) && value >= 0 && value % 2 == 0)
        return names::FamilyMember{Family::T, value};
    if (text.starts_with("F") && parse_int(text.substr(1), value) && value >= 0)
        return names::FamilyMember{Family::F, value};
    if (text.starts_with("psi") && parse_int(text.substr(3), value) && value >= 0)
        return names::FamilyMember{Family::Psi, value};
    if (text.starts_with("eps") && parse_int(text.substr(3), value) && value >= 0)
        return names::FamilyMember{Family::Eps, value};

    const auto parse_pair = [&](std::string_view rest, PhiVariant variant) -> std::optional<SeriesName> {
        const auto sep = rest.find('_');
        int r = 0;
        int s = 0;
        if (sep == std::string_view::npos || !parse_int(rest.substr(0, sep), r) ||
            !parse_int(rest.substr(sep + 1), s) || r < 0 || s < 0)
            return std::nullopt;
        return names::Phi{variant, r, s};
    };
    if (text.starts_with("phi_tilde_")) {
        if (auto n = parse_pair(text.substr(10), PhiVariant::tilde)) return *n;
        throw fail();
    }
    if (text.starts_with("phi_")) {
        if (auto n = parse_pair(text.substr(4), PhiVariant::plain)) return *n;
        throw fail();
    }
    if (text.starts_with("theta_")) {
        const std::string_view rest = text.substr(6);
        const auto sep = rest.find('_');
        names::Theta t{};
        if (sep != std::string_view::npos && parse_signed_exponent(rest.substr(0, sep), t.sa, t.u) &&
            parse_signed_exponent(rest.substr(sep + 1), t.sb, t.v))
            return t;
    }
    throw fail();
}

Series generate(const SeriesName& name, int order) {
    return std::visit(
        overloaded{
            [&](const names::Eisenstein& e) { return eisenstein(e.k, order); },
            [&](const names::Classical& c) { return eisenstein(c.which == 'P' ? 1 : (c.which == 'Q' ? 2 : 3), order); },
            [&](const names::Hahn& h) { return hahn(h.which, order); },
            [&](const names::FamilyMember& f) { return family(f.fam, f.index, order); },
            [&](const names::Phi& p) { return phi_series(p.variant, p.r, p.s, order); },
            [&](const names::Theta& t) { return theta_f(t.sa, t.u, t.sb, t.v, order); },
            [&](const names::Named& n) {
                switch (n.which) {
                    case NamedTheta::varphi: return varphi(order);
                    case NamedTheta::psi: return psi(order);
                    case NamedTheta::f_minus_q: return f_minus_q(order);
                    case NamedTheta::qpochhammer: return qpochhammer(order);
                }
                return Series(order);
            },
        },
        name);
}

}  // namespace qram
