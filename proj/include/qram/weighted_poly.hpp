#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "qram/rational.hpp"

namespace qram {

/// Which generators a polynomial is written in.
///   classical: P, Q, R in slots 0, 2, 3 (slot 1 is always 0)
///   hahn:      the Hahn series P, E, Q, R in slots 0, 1, 2, 3
enum class Ring { classical, hahn };

std::string_view to_string(Ring ring);

using Exponents = std::array<int, 4>;

/// Weight of a monomial: 2i + 2j + 4k + 6l.
int weight(const Exponents& e);

enum class PrettyStyle { unicode, ascii };

/// Polynomial with rational coefficients in four graded generators. No
/// zero coefficients are stored.
class WeightedPoly {
public:
    explicit WeightedPoly(Ring ring) : ring_(ring) {}

    static WeightedPoly constant(Ring ring, const Rational& c);
    /// The generator in `slot` (0..3); slot 1 is rejected for the classical ring.
    static WeightedPoly generator(Ring ring, int slot);
    /// Parses sums of terms like "15P^3 - 30PQ + 16R", "5/3P^2", "(5P^2 - 2Q)/3".
    /// Letters are P, Q, R (classical) or P, E, Q, R (hahn); the script
    /// letters used by the pretty-printer are accepted too.
    static WeightedPoly parse(Ring ring, std::string_view text);

    Ring ring() const { return ring_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Exponents& e) const;

    /// Adds c * monomial(e), dropping the entry if it cancels.
    void add_term(const Exponents& e, const Rational& c);

    /// All monomials share one weight (the zero polynomial counts as homogeneous).
    bool is_homogeneous() const;
    /// Weight of the leading monomial, or -1 for zero.
    int max_weight() const;
    bool has_integer_coefficients() const;

    /// Rewrites every E^j Q^k (j, k >= 1) into E^(j-m) Q^(k-m) R^m with
    /// m = min(j, k). No-op on the classical ring.
    WeightedPoly canonical() const;

    std::string str(PrettyStyle style = PrettyStyle::unicode) const;

    WeightedPoly& operator+=(const WeightedPoly& o);
    WeightedPoly& operator-=(const WeightedPoly& o);
    WeightedPoly& operator*=(const Rational& c);

    friend bool operator==(const WeightedPoly& a, const WeightedPoly& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

private:
    Ring ring_;
    std::map<Exponents, Rational> terms_;
};

WeightedPoly operator+(WeightedPoly a, const WeightedPoly& b);
WeightedPoly operator-(WeightedPoly a, const WeightedPoly& b);
WeightedPoly operator-(const WeightedPoly& a);
WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b);
WeightedPoly operator*(const Rational& c, WeightedPoly a);
WeightedPoly pow(const WeightedPoly& a, unsigned exponent);

}  // namespace qram
