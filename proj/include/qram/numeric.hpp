#pragma once

#include <mpfr.h>

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qram/generators.hpp"
#include "qram/rational.hpp"
#include "qram/series.hpp"

namespace qram {

/// Real number at a fixed binary precision. Owns an mpfr_t.
///
/// Binary operations produce a result at the larger of the two precisions,
/// rounded to nearest.
class BigFloat {
public:
    explicit BigFloat(unsigned precision = 256);
    BigFloat(long value, unsigned precision);
    BigFloat(const Rational& value, unsigned precision);
    /// Parses a decimal string.
    BigFloat(std::string_view decimal, unsigned precision);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    unsigned precision() const;
    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// log2 |x|, or -infinity for zero.
    double log2_abs() const;
    /// Scientific notation with `digits` significant decimal digits.
    std::string str(int digits = 20) const;

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
    friend BigFloat operator-(const BigFloat& a);

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

    friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

private:
    mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
/// x^e for an exact rational exponent; x must be positive unless e is an integer.
BigFloat pow(const BigFloat& x, const Rational& e);
/// x^e for an integer exponent.
BigFloat pow(const BigFloat& x, long e);
/// 2^e at the given precision.
BigFloat exp2(long e, unsigned precision);

/// Arithmetic-geometric mean of two positive numbers.
BigFloat agm(const BigFloat& a, const BigFloat& b);

/// Cached per precision; precision must be >= 64.
BigFloat const_pi(unsigned precision);
/// Gamma(1/4) = sqrt((2 pi)^(3/2) / AGM(sqrt 2, 1)).
BigFloat const_gamma14(unsigned precision);
/// Gamma(3/4) = pi sqrt(2) / Gamma(1/4).
BigFloat const_gamma34(unsigned precision);

/// Sums the defining series of `name` at x directly: Lambert forms for the
/// Eisenstein, Hahn and Phi series, exponent sums for theta types, the
/// product for qpoch. Stops once two consecutive terms are below
/// 2^(-p-16) max(1, |sum|). Throws std::domain_error unless |x| < 1.
BigFloat eval_point(const SeriesName& name, const BigFloat& x, unsigned precision);

/// Horner evaluation of a truncated exact series.
BigFloat eval_series(const Series& series, const BigFloat& x, unsigned precision);

/// A real expression in pi, Gamma(3/4), exact rationals, roots and exp.
class Expr {
public:
    using Eval = std::function<BigFloat(unsigned)>;

    explicit Expr(Eval eval) : eval_(std::move(eval)) {}
    Expr(const Rational& value);  // NOLINT(google-explicit-constructor)
    Expr(long value) : Expr(Rational(value)) {}  // NOLINT(google-explicit-constructor)

    static Expr pi();
    static Expr gamma34();

    BigFloat operator()(unsigned precision) const { return eval_(precision); }

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);

private:
    Eval eval_;
};

Expr pow(const Expr& base, const Rational& e);
Expr sqrt(const Expr& x);
Expr exp(const Expr& x);

/// A tabulated value of a series at a point, with its closed form.
struct SpecialValue {
    std::string id;
    SeriesName series;
    std::string point;  // e.g. "-exp(-pi)"
    Expr x;
    std::string closed_form;  // e.g. "pi^2/Gamma(3/4)^8"
    Expr value;
    std::string note;  // empty unless there is something to flag
};

/// Every registered special value, sorted by id.
const std::vector<SpecialValue>& special_values();
/// nullptr when absent.
const SpecialValue* find_special(std::string_view id);

struct NumericReport {
    std::string id;
    unsigned precision_bits;
    BigFloat series_value;
    BigFloat closed_value;
    BigFloat abs_err;
    /// abs_err / |closed_value|, or abs_err when the closed value is 0.
    BigFloat rel_err;
    /// 2^(-(p - 32)).
    BigFloat tolerance;
    bool passed;
    std::string note;
};

/// Evaluates both sides at precision p. Throws std::invalid_argument for
/// unknown ids and for p < 64.
NumericReport check_special(std::string_view id, unsigned precision);
NumericReport check_special(const SpecialValue& value, unsigned precision);

}  // namespace qram
