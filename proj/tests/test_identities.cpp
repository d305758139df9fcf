#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qram/divisor.hpp"
#include "qram/generators.hpp"
#include "qram/identities.hpp"

using qram::Identity;
using qram::IdentityKind;
using qram::Rational;
using qram::Series;

namespace {

// Copy of a registered identity with one coefficient or value nudged.
Identity corrupted_series(const std::string& id, int at) {
    Identity broken = *qram::lookup(id);
    broken.id += ".corrupt";
    const auto rhs = broken.rhs_series;
    broken.rhs_series = [rhs, at](int n) {
        Series s = rhs(n);
        if (at <= s.order()) s[at] += Rational(1);
        return s;
    };
    return broken;
}

Identity corrupted_convolution(const std::string& id, long at) {
    Identity broken = *qram::lookup(id);
    broken.id += ".corrupt";
    const auto rhs = broken.rhs_value;
    broken.rhs_value = [rhs, at](long n) { return n == at ? rhs(n) + Rational(1, 3) : rhs(n); };
    return broken;
}

}  // namespace

TEST_CASE("registry contents") {
    const auto& all = qram::registry();
    CHECK(all.size() >= 45);
    CHECK(std::is_sorted(all.begin(), all.end(), [](const Identity& a, const Identity& b) { return a.id < b.id; }));
    std::set<std::string> ids;
    for (const auto& identity : all) {
        ids.insert(identity.id);
        CHECK_FALSE(identity.statement.empty());
        if (identity.kind == IdentityKind::series) {
            CHECK(identity.lhs_series);
            CHECK(identity.rhs_series);
        } else {
            CHECK(identity.lhs_value);
            CHECK(identity.rhs_value);
        }
    }
    CHECK(ids.size() == all.size());
    for (const char* required :
         {"ode.P", "ode.Q", "ode.R", "ode.hP", "ode.hE", "ode.hQ", "hahn.R_eq_EQ", "lemma1.P", "lemma1.Q", "lemma1.R",
          "t1.T2", "t1.T4", "t1.T6", "t1.T8", "t2.F2", "t2.F4", "t2.F6", "t2.F8", "t3.psi2", "t3.psi4", "t3.psi6",
          "t4.eps3", "t4.eps5", "cor.mixed_T", "cor.mixed_F", "phi.1_2", "phi.1_4", "phi.1_6", "phi.2_3", "phi.2_5",
          "phi.2_7", "tr.1_2", "tr.1_4", "tr.1_6", "tr.2_3", "tr.2_5", "tr.2_7", "e8.square", "e10.QR", "e14.QQR",
          "gauss_jacobi", "pentagonal", "fact_f1", "eps1.product", "prop_p2", "prop_p2.neg", "lemma_lx",
          "cor1.q_lemma", "cor1.r_lemma", "t12.core", "sigma.two_hat", "t9", "t10", "t11.a", "t11.b", "cor1.a",
          "cor1.b", "t12", "cheng_williams", "remark.tilde", "remark.hat"}) {
        CAPTURE(required);
        CHECK(ids.count(required) == 1);
    }
}

TEST_CASE("lookup") {
    const Identity* psi6 = qram::lookup("t3.psi6");
    REQUIRE(psi6 != nullptr);
    CHECK(psi6->kind == IdentityKind::series);
    CHECK(psi6->statement.find("15P^3 - 30PQ + 16R") != std::string::npos);
    CHECK(psi6->lhs_series(60) == qram::family(qram::Family::Psi, 6, 60));
    CHECK(qram::lookup("nonexistent") == nullptr);
    CHECK(qram::lookup("t9")->domain.str() == "all n >= 0");
    CHECK(qram::lookup("t12")->domain.str() == "odd n");
}

TEST_CASE("series identities") {
    auto r = qram::verify_series("t1.T2", 100);
    CHECK(r.passed);
    CHECK(r.checked_up_to == 100);
    CHECK_FALSE(r.first_failure);
    CHECK(qram::verify_series("prop_p2", 200).passed);
    CHECK(qram::verify_series("lemma_lx", 200).passed);

    // 1 + q + q^3 + q^6 + q^10 = (1 + q^3 + q^6) + (q + q^10)
    const Identity& p2 = *qram::lookup("prop_p2");
    CHECK(p2.lhs_series(10) == p2.rhs_series(10));

    CHECK_THROWS_AS(qram::verify_series("t9", 10), std::invalid_argument);
    CHECK_THROWS_AS(qram::verify_series("nope", 10), std::invalid_argument);
}

TEST_CASE("corrupted series identity fails at the corrupted order") {
    for (int at : {0, 3, 7, 10}) {
        const auto r = qram::verify(corrupted_series("t1.T4", at), 10, 0);
        CAPTURE(at);
        CHECK_FALSE(r.passed);
        REQUIRE(r.first_failure);
        CHECK(r.first_failure->n == at);
        CHECK(r.first_failure->lhs + Rational(1) == r.first_failure->rhs);
    }
    // Beyond the requested order the corruption is invisible.
    CHECK(qram::verify(corrupted_series("t1.T4", 11), 10, 0).passed);
}

TEST_CASE("comparison is symmetric") {
    for (const auto& identity : qram::registry()) {
        if (identity.kind != IdentityKind::series) continue;
        Identity swapped = identity;
        std::swap(swapped.lhs_series, swapped.rhs_series);
        CAPTURE(identity.id);
        CHECK(qram::verify(swapped, 40, 0).passed == qram::verify(identity, 40, 0).passed);
    }
    const auto swapped_fail = [] {
        Identity broken = corrupted_series("t2.F4", 5);
        std::swap(broken.lhs_series, broken.rhs_series);
        return qram::verify(broken, 20, 0);
    }();
    CHECK(swapped_fail.first_failure->n == 5);
}

TEST_CASE("convolution identities") {
    const auto t9 = qram::verify_convolution("t9", 50);
    CHECK(t9.passed);
    CHECK(t9.checked_up_to == 50);
    CHECK(qram::lookup("t9")->lhs_value(0) == Rational(1, 480));
    CHECK(qram::lookup("t9")->rhs_value(0) == Rational(120) * Rational(1, 240) * Rational(1, 240));

    CHECK(qram::verify_convolution("t12", 99).passed);
    CHECK(qram::lookup("t12")->rhs_value(3) == Rational(2188));
    CHECK(qram::lookup("t10")->rhs_value(4) == Rational(-1055));
    CHECK(qram::lookup("cor1.a")->rhs_value(5) == Rational(126));
    CHECK(qram::lookup("cor1.b")->rhs_value(3) == Rational(244));

    const auto cw = qram::verify_convolution("cheng_williams", 40);
    CHECK(cw.passed);
    CHECK(qram::lookup("cheng_williams")->lhs_value(1) == Rational(4));
    CHECK(qram::lookup("cheng_williams")->rhs_value(1) == Rational(4));

    CHECK_THROWS_AS(qram::verify_convolution("t1.T2", 10), std::invalid_argument);
}

TEST_CASE("corrupted convolution identity fails at the corrupted n") {
    const auto r = qram::verify(corrupted_convolution("t11.a", 17), 0, 30);
    CHECK_FALSE(r.passed);
    REQUIRE(r.first_failure);
    CHECK(r.first_failure->n == 17);
    // Odd domains never visit even n.
    CHECK(qram::verify(corrupted_convolution("cor1.a", 18), 0, 30).passed);
    CHECK(qram::verify(corrupted_convolution("cor1.a", 19), 0, 30).first_failure->n == 19);
}

TEST_CASE("odd-n specializations agree across identities") {
    // For odd n, sigma~_3 = sigma_3, so the t11.a left side is 4 sigma_3(n)
    // and its right side is four times the cor1.a right side.
    const Identity& t11a = *qram::lookup("t11.a");
    const Identity& cor1a = *qram::lookup("cor1.a");
    for (long n = 1; n <= 99; n += 2) {
        REQUIRE(t11a.lhs_value(n) == Rational(4) * cor1a.lhs_value(n));
        REQUIRE(t11a.rhs_value(n) == Rational(4) * cor1a.rhs_value(n));
    }
}

TEST_CASE("verify_all") {
    const auto reports = qram::verify_all(100, 50);
    CHECK(reports.size() == qram::registry().size());
    for (const auto& r : reports) {
        CAPTURE(r.id);
        CHECK(r.passed);
    }
    const auto vacuous = qram::verify_all(0, 0);
    for (const auto& r : vacuous) {
        CHECK(r.passed);
        CHECK(r.checked_up_to == 0);
    }
}

TEST_CASE("a suite with one corrupted entry has exactly one failure") {
    std::vector<Identity> suite(qram::registry().begin(), qram::registry().end());
    for (auto& identity : suite)
        if (identity.id == "e10.QR") identity = corrupted_series("e10.QR", 9);
    int failures = 0;
    for (const auto& identity : suite) failures += qram::verify(identity, 30, 20).passed ? 0 : 1;
    CHECK(failures == 1);
}
