// Acceptance suite: one pass/fail line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qram/divisor.hpp"
#include "qram/generators.hpp"
#include "qram/identities.hpp"
#include "qram/numeric.hpp"
#include "qram/series.hpp"
#include "qram/symbolic.hpp"
#include "support.hpp"

using qram::DerivationRules;
using qram::DivisorKind;
using qram::Family;
using qram::PhiVariant;
using qram::Rational;
using qram::Ring;
using qram::Series;
using qram::WeightedPoly;

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void fail(const std::string& what) {
        if (!passed) detail << "; ";
        else detail.str("");
        passed = false;
        detail << what;
    }
};

struct TableEntry {
    Family fam;
    int n;
    const char* text;
};

const std::vector<TableEntry>& ratio_table() {
    static const std::vector<TableEntry> table{
        {Family::T, 1, "P"},
        {Family::T, 2, "3P^2 - 2Q"},
        {Family::T, 3, "15P^3 - 30PQ + 16R"},
        {Family::T, 4, "105P^4 - 420P^2Q + 448PR - 132Q^2"},
        {Family::F, 1, "P"},
        {Family::F, 2, "(5P^2 - 2Q)/3"},
        {Family::F, 3, "(35P^3 - 42PQ + 16R)/9"},
        {Family::F, 4, "(35P^4 - 84P^2Q - 12Q^2 + 64PR)/3"},
        {Family::Psi, 1, "P"},
        {Family::Psi, 2, "3P^2 - 2Q"},
        {Family::Psi, 3, "15P^3 - 30PQ + 16R"},
        {Family::Eps, 1, "9P - 8E"},
        {Family::Eps, 2, "135P^2 - 240PE + 64E^2 + 42Q"},
    };
    return table;
}

struct PhiEntry {
    PhiVariant variant;
    int r;
    int s;
    long factor;
    const char* text;
};

const std::vector<PhiEntry>& phi_table() {
    static const std::vector<PhiEntry> table{
        {PhiVariant::plain, 1, 2, 288, "Q - P^2"},
        {PhiVariant::plain, 1, 4, 720, "PQ - R"},
        {PhiVariant::plain, 1, 6, 1008, "Q^2 - PR"},
        {PhiVariant::plain, 2, 3, 1728, "3PQ - 2R - P^3"},
        {PhiVariant::plain, 2, 5, 1728, "P^2Q - 2PR + Q^2"},
        {PhiVariant::plain, 2, 7, 1728, "2PQ^2 - P^2R - QR"},
        {PhiVariant::tilde, 1, 2, 32, "P^2 - Q"},
        {PhiVariant::tilde, 1, 4, 16, "-PQ + R"},
        {PhiVariant::tilde, 1, 6, 16, "3PR - Q^2 - 2ER"},
        {PhiVariant::tilde, 2, 3, 64, "P^3 - 3PQ + 2R"},
        {PhiVariant::tilde, 2, 5, 64, "-5P^2Q - Q^2 + 10PR - 4ER"},
        {PhiVariant::tilde, 2, 7, 64, "21P^2R + 13QR - 14PQ^2 - 28PER + 8E^2R"},
    };
    return table;
}

std::string label(Family fam, int n) {
    const int index = fam == Family::Eps ? 2 * n + 1 : 2 * n;
    return std::string(qram::to_string(fam)) + std::to_string(index);
}

int base_index(Family fam) { return fam == Family::Eps ? 1 : 0; }
int top_index(Family fam, int n) { return fam == Family::Eps ? 2 * n + 1 : 2 * n; }

// eval_as_series(ratio) * base == family series at the derived index.
bool cross_validates(Family fam, int n, const WeightedPoly& ratio, int order) {
    const Series lhs = qram::mul(qram::eval_as_series(ratio, order), qram::family(fam, base_index(fam), order));
    return lhs == qram::family(fam, top_index(fam, n), order);
}

void criterion_tables(Outcome& o) {
    int checked = 0;
    for (const auto& e : ratio_table()) {
        const WeightedPoly expected = WeightedPoly::parse(qram::ring_of(e.fam), e.text).canonical();
        if (qram::ratio_poly(e.fam, e.n).canonical() != expected) o.fail(label(e.fam, e.n) + " table mismatch");
        ++checked;
    }
    for (const auto& e : phi_table()) {
        const Ring ring = e.variant == PhiVariant::plain ? Ring::classical : Ring::hahn;
        const WeightedPoly expected = WeightedPoly::parse(ring, e.text).canonical();
        const WeightedPoly got = (Rational(e.factor) * qram::phi_poly(e.variant, e.r, e.s)).canonical();
        if (got != expected)
            o.fail(std::string(e.variant == PhiVariant::plain ? "Phi" : "Phi~") + "_{" + std::to_string(e.r) + "," +
                   std::to_string(e.s) + "} mismatch");
        ++checked;
    }
    if (o.passed) o.detail << checked << " table entries equal exactly";
}

void criterion_series_identities(Outcome& o) {
    int count = 0;
    for (const auto& identity : qram::registry()) {
        if (identity.kind != qram::IdentityKind::series) continue;
        const auto r = qram::verify(identity, 200, 0);
        ++count;
        if (!r.passed) o.fail(identity.id + " differs at q^" + std::to_string(r.first_failure->n));
    }
    for (const char* required : {"prop_p2", "fact_f1", "eps1.product", "lemma_lx", "t12.core", "cor1.q_lemma",
                                 "cor1.r_lemma", "e8.square", "e10.QR", "e14.QQR", "cor.mixed_T", "cor.mixed_F"})
        if (qram::lookup(required) == nullptr) o.fail(std::string("missing ") + required);
    if (o.passed) o.detail << count << " series identities agree to order 200";
}

void criterion_convolutions(Outcome& o) {
    int count = 0;
    for (const char* id : {"t9", "t10", "t11.a", "t11.b"}) {
        const auto r = qram::verify_convolution(id, 100);
        ++count;
        if (!r.passed) o.fail(std::string(id) + " fails at n = " + std::to_string(r.first_failure->n));
    }
    for (const char* id : {"cor1.a", "cor1.b", "t12"}) {
        const auto r = qram::verify_convolution(id, 99);
        ++count;
        if (!r.passed) o.fail(std::string(id) + " fails at n = " + std::to_string(r.first_failure->n));
    }
    const auto expect = [&](const char* what, const Rational& got, const Rational& want) {
        if (got != want) o.fail(std::string(what) + " = " + got.str() + ", want " + want.str());
    };
    expect("t10 rhs(4)", qram::lookup("t10")->rhs_value(4), Rational(-1055));
    expect("cor1.a rhs(5)", qram::lookup("cor1.a")->rhs_value(5), Rational(126));
    expect("cor1.b rhs(3)", qram::lookup("cor1.b")->rhs_value(3), Rational(244));
    expect("t12 rhs(3)", qram::lookup("t12")->rhs_value(3), Rational(2188));
    constexpr auto hat = DivisorKind::hat;
    expect("S4(3)", qram::convolution({{hat, 1}, {hat, 1}, {hat, 1}, {hat, 1}}, 3), Rational(163, 864));
    expect("S2(3)", qram::convolution({{hat, 1}, {DivisorKind::tilde, 5}}, 3), Rational(-58, 3));
    if (o.passed) o.detail << count << " convolution identities hold; worked values -1055, 126, 244, 2188 reproduced";
}

void criterion_dual_path(Outcome& o) {
    const int order = 100;
    int count = 0;
    for (const auto& e : ratio_table()) {
        if (!cross_validates(e.fam, e.n, qram::ratio_poly(e.fam, e.n), order))
            o.fail(label(e.fam, e.n) + " series mismatch");
        ++count;
    }
    for (const auto& e : phi_table()) {
        const Series lhs = qram::eval_as_series(qram::phi_poly(e.variant, e.r, e.s), order);
        if (lhs != qram::phi_series(e.variant, e.r, e.s, order))
            o.fail("phi(" + std::to_string(e.r) + "," + std::to_string(e.s) + ") series mismatch");
        ++count;
    }
    if (o.passed) o.detail << count << " polynomials match their series to order 100";
}

void criterion_numeric(Outcome& o) {
    const unsigned p = 256;
    const qram::BigFloat bound = qram::exp2(-224, p);
    double worst = -1e9;
    int count = 0;
    for (const auto& v : qram::special_values()) {
        const auto r = qram::check_special(v, p);
        ++count;
        if (!r.passed || !(r.rel_err < bound)) o.fail(v.id + " rel_err " + r.rel_err.str(6));
        if (!r.rel_err.is_zero()) worst = std::max(worst, r.rel_err.log2_abs());
    }
    if (o.passed) o.detail << count << " special values; worst rel_err 2^" << static_cast<long>(worst) << " < 2^-224";
}

void criterion_general(Outcome& o) {
    int count = 0;
    for (Family fam : {Family::T, Family::F, Family::Psi, Family::Eps}) {
        // 2n up to 24; the eps family is indexed 2n + 1.
        for (int n = 1; n <= 12; ++n) {
            const WeightedPoly p = qram::ratio_poly(fam, n);
            if (!p.is_homogeneous() || p.max_weight() != 2 * n) o.fail(label(fam, n) + " not homogeneous of weight 2n");
            if (!cross_validates(fam, n, p, 60)) o.fail(label(fam, n) + " series mismatch");
            ++count;
        }
    }
    if (o.passed) o.detail << count << " ratio polynomials homogeneous and cross-validated at order 60";
}

void criterion_properties(Outcome& o) {
    qram::test::Gen gen(0xacce97);
    const int order = 40;
    for (int trial = 0; trial < 40; ++trial) {
        const Series a = gen.series(order), b = gen.series(order), c = gen.series(order);
        if (qram::mul(a, qram::add(b, c)) != qram::add(qram::mul(a, b), qram::mul(a, c))) o.fail("distributivity");
        if (qram::mul(qram::mul(a, b), c) != qram::mul(a, qram::mul(b, c))) o.fail("associativity");
        if (qram::mul(a, b) != qram::mul(b, a)) o.fail("commutativity");
        const Series u = gen.series(order, true);
        if (qram::mul(qram::div(a, u), u) != a) o.fail("div o mul");
        for (int k : {2, 3, 5})
            if (qram::substitute_power(qram::mul(a, b), k) !=
                qram::mul(qram::substitute_power(a, k), qram::substitute_power(b, k)))
                o.fail("substitute_power homomorphism");
        if (qram::euler_op(qram::mul(a, b)) !=
            qram::add(qram::mul(qram::euler_op(a), b), qram::mul(a, qram::euler_op(b))))
            o.fail("euler operator Leibniz");
    }
    for (Ring ring : {Ring::classical, Ring::hahn}) {
        const DerivationRules rules = ring == Ring::classical ? DerivationRules::classical() : DerivationRules::hahn();
        for (int trial = 0; trial < 30; ++trial) {
            const WeightedPoly a = gen.poly(ring, 3), b = gen.poly(ring, 3);
            if (qram::derive(rules, a * b) != qram::derive(rules, a) * b + a * qram::derive(rules, b))
                o.fail("derivation Leibniz");
        }
    }
    for (unsigned s = 0; s <= 5; ++s) {
        const Rational two_s1(qram::ipow(2, s + 1));
        for (long n = 1; n <= 10000; ++n) {
            const Rational plain = qram::divisor_sum(DivisorKind::plain, s, n);
            const Rational half = qram::divisor_sum(DivisorKind::plain, s, Rational(n, 2));
            if (qram::divisor_sum(DivisorKind::tilde, s, n) != plain - two_s1 * half ||
                qram::divisor_sum(DivisorKind::hat, s, n) != plain - Rational(2) * half) {
                o.fail("reduction formula at s = " + std::to_string(s) + ", n = " + std::to_string(n));
                break;
            }
        }
    }
    const int big = 500;
    Series pentagonal(big), cube(big);
    for (long k = -40; k <= 40; ++k) {
        const long e = k * (3 * k - 1) / 2;
        if (e <= big) pentagonal[static_cast<int>(e)] += Rational(k % 2 == 0 ? 1 : -1);
    }
    for (long k = 0; k * (k + 1) / 2 <= big; ++k)
        cube[static_cast<int>(k * (k + 1) / 2)] = Rational((k % 2 == 0 ? 1 : -1) * (2 * k + 1));
    if (qram::product_expansion({{1, 1, 1}}, big) != pentagonal) o.fail("pentagonal");
    if (qram::product_expansion({{1, 1, 3}}, big) != cube) o.fail("Gauss-Jacobi");
    if (o.passed) o.detail << "ring axioms, Leibniz, div o mul, substitute_power, reductions to 10^4, products at 500";
}

void criterion_negative_controls(Outcome& o) {
    for (const char* id : {"t1.T6", "tr.2_7", "e14.QQR"}) {
        for (int at : {0, 17, 150}) {
            qram::Identity broken = *qram::lookup(id);
            const auto rhs = broken.rhs_series;
            broken.rhs_series = [rhs, at](int n) {
                Series s = rhs(n);
                if (at <= s.order()) s[at] += Rational(1, 7);
                return s;
            };
            const auto r = qram::verify(broken, 200, 0);
            if (r.passed || !r.first_failure || r.first_failure->n != at)
                o.fail(std::string(id) + " corruption at " + std::to_string(at) + " not located");
        }
    }
    for (const char* id : {"t10", "t12"}) {
        qram::Identity broken = *qram::lookup(id);
        const auto rhs = broken.rhs_value;
        broken.rhs_value = [rhs](long n) { return n == 33 ? rhs(n) - Rational(1) : rhs(n); };
        const auto r = qram::verify(broken, 0, 99);
        if (r.passed || !r.first_failure || r.first_failure->n != 33)
            o.fail(std::string(id) + " corruption at 33 not located");
    }
    int pairs = 0;
    for (const auto& v : qram::special_values()) {
        for (unsigned p : {128u, 256u, 512u}) {
            const auto low = qram::check_special(v, p);
            const auto high = qram::check_special(v, 2 * p);
            ++pairs;
            if (!(high.abs_err < low.abs_err))
                o.fail(v.id + " error did not shrink from " + std::to_string(p) + " to " + std::to_string(2 * p) +
                       " bits");
        }
    }
    if (o.passed) o.detail << "corruptions located; " << pairs << " precision doublings all reduce the error";
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
        {"polynomial tables", criterion_tables},
        {"series identities at N = 200", criterion_series_identities},
        {"convolution identities", criterion_convolutions},
        {"dual-path cross-validation", criterion_dual_path},
        {"numeric special values at 256 bits", criterion_numeric},
        {"general ratio polynomials to 2n = 24", criterion_general},
        {"property suites", criterion_properties},
        {"negative controls", criterion_negative_controls},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += o.passed ? 0 : 1;
        std::printf("[%s] %d. %s (%.2fs): %s\n", o.passed ? "PASS" : "FAIL", index, name, secs, o.detail.str().c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed;
}
