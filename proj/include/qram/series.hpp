#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "qram/divisor.hpp"
#include "qram/rational.hpp"

namespace qram {

/// Truncated power series sum_{n=0}^{order} c_n q^n over the rationals.
///
/// The truncation order is inclusive: coeffs().size() == order() + 1.
/// Binary operations truncate to the smaller operand order.
class Series {
public:
    /// Zero series of the given order.
    explicit Series(int order);
    explicit Series(std::vector<Rational> coeffs);
    Series(std::initializer_list<Rational> coeffs, int order);

    static Series constant(const Rational& c, int order);
    /// c * q^k (zero if k > order).
    static Series monomial(const Rational& c, int k, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    Rational& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }

    bool is_zero() const;
    bool is_integral() const;
    /// Copy truncated to a lower (or equal) order.
    Series truncated(int order) const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Rational& c);

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rational& c, const Series& a);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series mul(const Series& a, const Series& b);
Series scale(const Rational& c, const Series& a);
/// Repeated Cauchy product; pow(a, 0) is the constant 1.
Series pow(const Series& a, unsigned exponent);

/// c with b * c = a to the truncation order. Throws std::domain_error
/// ("non-unit divisor") if b has zero constant term.
Series div(const Series& a, const Series& b);

/// q d/dq: the q^n coefficient becomes n * a_n.
Series euler_op(const Series& a);

/// a(q^k); the result has order k * a.order().
Series substitute_power(const Series& a, int k);

/// a(-q).
Series substitute_negate(const Series& a);

/// sum_{n=1}^{order} divisor_sum(kind, s, n) q^n.
Series lambert(DivisorKind kind, unsigned s, int order);

/// One factor family prod_{n>=0} (1 - q^(offset + modulus*n))^exponent.
struct ProductFactor {
    int offset;
    int modulus;
    int exponent;
};

/// Product of the factor families truncated at `order`. Negative exponents
/// are expanded as a positive power and divided out with div(). Throws
/// std::domain_error ("vanishing factor") when offset is 0 and
/// std::invalid_argument when modulus < 1 or offset < 0.
Series product_expansion(std::span<const ProductFactor> factors, int order);
Series product_expansion(std::initializer_list<ProductFactor> factors, int order);

/// Index of the first coefficient where a and b differ, compared up to the
/// smaller order; -1 if they agree.
int first_difference(const Series& a, const Series& b);

}  // namespace qram
