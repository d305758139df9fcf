#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "qram/rational.hpp"
#include "qram/series.hpp"
#include "qram/weighted_poly.hpp"

namespace qram::test {

/// Integer-coefficient series, padded with zeros up to `order`.
inline Series ints(std::initializer_list<long> coeffs, int order) {
    Series out(order);
    int n = 0;
    for (long c : coeffs) {
        if (n > order) break;
        out[n++] = Rational(c);
    }
    return out;
}

/// Seeded generator of small random values for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational() {
        const long den = integer(1, 6);
        return Rational(integer(-9, 9), den);
    }

    Series series(int order, bool unit = false) {
        Series out(order);
        for (int n = 0; n <= order; ++n) out[n] = integer(0, 3) == 0 ? Rational(0) : rational();
        if (unit && out[0].is_zero()) out[0] = Rational(1 + integer(0, 4));
        return out;
    }

    WeightedPoly poly(Ring ring, int terms, int max_exp = 2) {
        WeightedPoly out(ring);
        for (int t = 0; t < terms; ++t) {
            Exponents e{static_cast<int>(integer(0, max_exp)), 0, static_cast<int>(integer(0, max_exp)),
                        static_cast<int>(integer(0, max_exp))};
            if (ring == Ring::hahn) e[1] = static_cast<int>(integer(0, max_exp));
            out.add_term(e, rational());
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace qram::test
