#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "qram/generators.hpp"
#include "qram/series.hpp"
#include "support.hpp"

using qram::Rational;
using qram::Series;
using qram::test::ints;

TEST_CASE("ring operations") {
    CHECK(qram::mul(ints({1, 1}, 4), ints({1, -1}, 4)) == ints({1, 0, -1}, 4));
    const Series p = qram::eisenstein(1, 30);
    CHECK(qram::add(p, qram::scale(Rational(-1), p)).is_zero());
    CHECK((p - p).is_zero());
    CHECK(qram::neg(p) == qram::scale(Rational(-1), p));
    CHECK(qram::pow(ints({1, 1}, 5), 3) == ints({1, 3, 3, 1}, 5));
    CHECK(qram::pow(p, 0) == Series::constant(Rational(1), 30));
}

TEST_CASE("mixed orders truncate to the smaller order") {
    const Series a = ints({1, 2, 3, 4, 5}, 4);
    const Series b = ints({1, 1}, 2);
    CHECK((a + b).order() == 2);
    CHECK(qram::mul(a, b).order() == 2);
    CHECK(qram::mul(a, b) == ints({1, 3, 5}, 2));
}

TEST_CASE("division by units") {
    CHECK(qram::div(Series::constant(Rational(1), 3), ints({1, -1}, 3)) == ints({1, 1, 1, 1}, 3));
    const Series eps = qram::family(qram::Family::Eps, 0, 40);
    CHECK(qram::div(eps, eps) == Series::constant(Rational(1), 40));

    const Series eps_q2 = qram::substitute_power(qram::family(qram::Family::Eps, 0, 5), 2).truncated(10);
    CHECK(qram::div(eps.truncated(10), eps_q2) == ints({1, 1, 0, -1, -1, 1, 1, 1, 0, -2, -2}, 10));

    CHECK_THROWS_AS(qram::div(eps, ints({0, 1}, 40)), std::domain_error);
    CHECK(qram::div(ints({2}, 3), ints({2}, 3)) == ints({1}, 3));
}

TEST_CASE("euler operator") {
    CHECK(qram::euler_op(ints({1, 1, 1}, 2)) == ints({0, 1, 2}, 2));
    CHECK(qram::euler_op(Series::constant(Rational(7), 9)).is_zero());
    const Series p = qram::eisenstein(1, 50);
    const Series q = qram::eisenstein(2, 50);
    CHECK(qram::scale(Rational(12), qram::euler_op(p)) == qram::mul(p, p) - q);
}

TEST_CASE("substitute q -> q^k") {
    CHECK(qram::substitute_power(ints({1, 1}, 1), 3) == ints({1, 0, 0, 1}, 3));
    const Series a = ints({3, -1, 4, 1, -5}, 4);
    CHECK(qram::substitute_power(a, 1) == a);
    CHECK(qram::substitute_power(a, 2).order() == 8);
    CHECK_THROWS_AS(qram::substitute_power(a, 0), std::invalid_argument);

    // psi(q^9) straight from its exponents 9 k(k+1)/2.
    const int order = 300;
    Series direct(order * 9);
    for (long k = 0; 9 * k * (k + 1) / 2 <= order * 9; ++k) direct[static_cast<int>(9 * k * (k + 1) / 2)] = Rational(1);
    CHECK(qram::substitute_power(qram::psi(order), 9) == direct);
}

TEST_CASE("substitute q -> -q") {
    CHECK(qram::substitute_negate(ints({1, 1, 1}, 2)) == ints({1, -1, 1}, 2));
    const Series e = qram::eisenstein(3, 25);
    CHECK(qram::substitute_negate(qram::substitute_negate(e)) == e);
    CHECK(qram::substitute_negate(qram::varphi(200)) == qram::product_expansion({{1, 1, 1}, {1, 2, 1}}, 200));
}

TEST_CASE("lambert series") {
    using qram::DivisorKind;
    CHECK(qram::lambert(DivisorKind::plain, 1, 4) == ints({0, 1, 3, 4, 7}, 4));
    CHECK(qram::lambert(DivisorKind::tilde, 1, 3) == ints({0, 1, -1, 4}, 3));
    CHECK(qram::lambert(DivisorKind::hat, 1, 0).is_zero());
    CHECK(qram::lambert(DivisorKind::hat, 1, 0).order() == 0);
}

TEST_CASE("product expansions") {
    CHECK(qram::product_expansion({{1, 1, 1}}, 7) == ints({1, -1, -1, 0, 0, 1, 0, 1}, 7));
    CHECK(qram::product_expansion({{1, 1, 3}}, 100) == qram::family(qram::Family::F, 0, 100));
    CHECK(qram::mul(qram::product_expansion({{1, 1, 2}}, 60), qram::product_expansion({{1, 1, -2}}, 60)) ==
          Series::constant(Rational(1), 60));
    CHECK(qram::product_expansion({{1, 1, 2}, {1, 1, -2}}, 60) == Series::constant(Rational(1), 60));
    CHECK(qram::product_expansion(std::vector<qram::ProductFactor>{}, 5) == Series::constant(Rational(1), 5));
    CHECK(qram::product_expansion({{2, 1, 0}}, 5) == Series::constant(Rational(1), 5));
    CHECK_THROWS_AS(qram::product_expansion({{0, 1, 1}}, 5), std::domain_error);
    CHECK_THROWS_AS(qram::product_expansion({{1, 0, 1}}, 5), std::invalid_argument);
}

TEST_CASE("first_difference locates the first disagreement") {
    const Series a = ints({1, 2, 3, 4}, 3);
    Series b = a;
    CHECK(qram::first_difference(a, b) == -1);
    b[2] += Rational(1, 2);
    CHECK(qram::first_difference(a, b) == 2);
}

TEST_CASE("ring axioms on random series") {
    qram::test::Gen gen(0x5eed0001);
    for (int trial = 0; trial < 40; ++trial) {
        const int order = static_cast<int>(gen.integer(0, 32));
        const Series a = gen.series(order);
        const Series b = gen.series(order);
        const Series c = gen.series(order);
        CHECK(a + b == b + a);
        CHECK(qram::mul(a, b) == qram::mul(b, a));
        CHECK(qram::mul(qram::mul(a, b), c) == qram::mul(a, qram::mul(b, c)));
        CHECK(qram::mul(a, b + c) == qram::mul(a, b) + qram::mul(a, c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(qram::mul(a, Series::constant(Rational(1), order)) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("div inverts mul for unit divisors") {
    qram::test::Gen gen(0x5eed0002);
    for (int trial = 0; trial < 40; ++trial) {
        const int order = static_cast<int>(gen.integer(0, 32));
        const Series a = gen.series(order);
        const Series b = gen.series(order, true);
        CHECK(qram::mul(b, qram::div(a, b)) == a);
        CHECK(qram::div(qram::mul(a, b), b) == a);
    }
}

TEST_CASE("euler operator is a derivation") {
    qram::test::Gen gen(0x5eed0003);
    for (int trial = 0; trial < 40; ++trial) {
        const int order = static_cast<int>(gen.integer(0, 32));
        const Series a = gen.series(order);
        const Series b = gen.series(order);
        CHECK(qram::euler_op(qram::mul(a, b)) == qram::mul(qram::euler_op(a), b) + qram::mul(a, qram::euler_op(b)));
    }
}

TEST_CASE("substitute_power is a ring homomorphism") {
    qram::test::Gen gen(0x5eed0004);
    for (int trial = 0; trial < 40; ++trial) {
        const int order = static_cast<int>(gen.integer(0, 20));
        const int k = static_cast<int>(gen.integer(1, 5));
        const Series a = gen.series(order);
        const Series b = gen.series(order);
        const auto sub = [k](const Series& s) { return qram::substitute_power(s, k); };
        CHECK(sub(a + b) == sub(a) + sub(b));
        CHECK(sub(qram::mul(a, b)) == qram::mul(sub(a), sub(b)));
    }
}

TEST_CASE("pentagonal number theorem at order 500") {
    const int order = 500;
    Series sum(order);
    for (long k = -40; k <= 40; ++k) {
        const long e = k * (3 * k - 1) / 2;
        if (e <= order) sum[static_cast<int>(e)] += Rational(k % 2 == 0 ? 1 : -1);
    }
    CHECK(qram::product_expansion({{1, 1, 1}}, order) == sum);
}

TEST_CASE("Gauss-Jacobi cube at order 500") {
    const int order = 500;
    Series sum(order);
    for (long k = 0; k * (k + 1) / 2 <= order; ++k)
        sum[static_cast<int>(k * (k + 1) / 2)] = Rational((k % 2 == 0 ? 1 : -1) * (2 * k + 1));
    CHECK(qram::product_expansion({{1, 1, 3}}, order) == sum);
}
