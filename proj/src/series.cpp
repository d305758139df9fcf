#include "qram/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qram {

namespace {

// Clears denominators: returns integer coefficients and the common denominator.
std::pair<std::vector<mpz_class>, mpz_class> integerize(const Series& a, int order) {
    mpz_class den = 1;
    for (int n = 0; n <= order; ++n) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a[n].raw().get_den_mpz_t());
    std::vector<mpz_class> ints(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        const auto& q = a[n].raw();
        ints[static_cast<std::size_t>(n)] = q.get_num() * (den / q.get_den());
    }
    return {std::move(ints), std::move(den)};
}

void require_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative, got " + std::to_string(order));
}

}  // namespace

Series::Series(int order) {
    require_order(order);
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

Series::Series(std::initializer_list<Rational> coeffs, int order) : Series(order) {
    int n = 0;
    for (const auto& c : coeffs) {
        if (n > order) break;
        coeffs_[static_cast<std::size_t>(n++)] = c;
    }
}

Series Series::constant(const Rational& c, int order) {
    Series out(order);
    out[0] = c;
    return out;
}

Series Series::monomial(const Rational& c, int k, int order) {
    Series out(order);
    if (k >= 0 && k <= order) out[k] = c;
    return out;
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool Series::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

Series Series::truncated(int order) const {
    require_order(order);
    if (order >= this->order()) return *this;
    return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series& Series::operator+=(const Series& o) {
    if (o.order() < order()) coeffs_.resize(o.coeffs_.size());
    for (int n = 0; n <= order(); ++n) (*this)[n] += o[n];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    if (o.order() < order()) coeffs_.resize(o.coeffs_.size());
    for (int n = 0; n <= order(); ++n) (*this)[n] -= o[n];
    return *this;
}

Series& Series::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Series operator+(const Series& a, const Series& b) { return add(a, b); }
Series operator-(const Series& a, const Series& b) { return sub(a, b); }
Series operator-(const Series& a) { return neg(a); }
Series operator*(const Series& a, const Series& b) { return mul(a, b); }
Series operator*(const Rational& c, const Series& a) { return scale(c, a); }

Series add(const Series& a, const Series& b) {
    Series out = a.truncated(std::min(a.order(), b.order()));
    out += b;
    return out;
}

Series sub(const Series& a, const Series& b) {
    Series out = a.truncated(std::min(a.order(), b.order()));
    out -= b;
    return out;
}

Series neg(const Series& a) { return scale(Rational(-1), a); }

Series scale(const Rational& c, const Series& a) {
    Series out = a;
    out *= c;
    return out;
}

Series mul(const Series& a, const Series& b) {
    const int order = std::min(a.order(), b.order());
    const auto [ia, da] = integerize(a, order);
    const auto [ib, db] = integerize(b, order);
    const mpz_class den = da * db;

    // Skip zero runs on the left operand; theta-type series are sparse.
    std::vector<int> support;
    for (int i = 0; i <= order; ++i)
        if (ia[static_cast<std::size_t>(i)] != 0) support.push_back(i);

    std::vector<mpz_class> acc(static_cast<std::size_t>(order) + 1);
    for (const int i : support) {
        const mpz_class& x = ia[static_cast<std::size_t>(i)];
        for (int j = 0; i + j <= order; ++j) {
            const mpz_class& y = ib[static_cast<std::size_t>(j)];
            if (y == 0) continue;
            mpz_addmul(acc[static_cast<std::size_t>(i + j)].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        }
    }
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (auto& c : acc) out.emplace_back(c, den);
    return Series(std::move(out));
}

Series pow(const Series& a, unsigned exponent) {
    Series result = Series::constant(Rational(1), a.order());
    Series base = a;
    while (exponent > 0) {
        if (exponent & 1U) result = mul(result, base);
        exponent >>= 1U;
        if (exponent > 0) base = mul(base, base);
    }
    return result;
}

Series div(const Series& a, const Series& b) {
    if (b[0].is_zero()) throw std::domain_error("non-unit divisor: constant term is zero");
    const int order = std::min(a.order(), b.order());
    const Rational inv = Rational(1) / b[0];
    Series c(order);
    for (int n = 0; n <= order; ++n) {
        Rational acc = a[n];
        for (int k = 1; k <= n; ++k) {
            if (b[k].is_zero() || c[n - k].is_zero()) continue;
            acc -= b[k] * c[n - k];
        }
        c[n] = acc * inv;
    }
    return c;
}

Series euler_op(const Series& a) {
    Series out = a;
    for (int n = 0; n <= out.order(); ++n) out[n] *= Rational(static_cast<long>(n));
    return out;
}

Series substitute_power(const Series& a, int k) {
    if (k < 1) throw std::invalid_argument("substitute_power needs k >= 1");
    Series out(a.order() * k);
    for (int n = 0; n <= a.order(); ++n) out[n * k] = a[n];
    return out;
}

Series substitute_negate(const Series& a) {
    Series out = a;
    for (int n = 1; n <= out.order(); n += 2) out[n] = -out[n];
    return out;
}

Series lambert(DivisorKind kind, unsigned s, int order) {
    Series out(order);
    for (int n = 1; n <= order; ++n) out[n] = Rational(divisor_sum_positive(kind, s, n));
    return out;
}

namespace {

// In-place multiplication by (1 - q^m), m >= 1.
void times_binomial(std::vector<mpz_class>& c, int m) {
    for (int n = static_cast<int>(c.size()) - 1; n >= m; --n)
        c[static_cast<std::size_t>(n)] -= c[static_cast<std::size_t>(n - m)];
}

}  // namespace

Series product_expansion(std::span<const ProductFactor> factors, int order) {
    require_order(order);
    std::vector<mpz_class> numerator(static_cast<std::size_t>(order) + 1);
    std::vector<mpz_class> denominator(static_cast<std::size_t>(order) + 1);
    numerator[0] = 1;
    denominator[0] = 1;
    bool has_denominator = false;
    for (const auto& f : factors) {
        if (f.modulus < 1) throw std::invalid_argument("product factor modulus must be >= 1");
        if (f.offset < 0) throw std::invalid_argument("product factor offset must be >= 0");
        if (f.offset == 0) throw std::domain_error("vanishing factor: (1 - q^0) = 0");
        auto& target = f.exponent >= 0 ? numerator : denominator;
        has_denominator = has_denominator || f.exponent < 0;
        const int times = f.exponent >= 0 ? f.exponent : -f.exponent;
        for (int m = f.offset; m <= order; m += f.modulus)
            for (int e = 0; e < times; ++e) times_binomial(target, m);
    }
    const auto to_series = [](const std::vector<mpz_class>& v) {
        std::vector<Rational> out;
        out.reserve(v.size());
        for (const auto& x : v) out.emplace_back(x);
        return Series(std::move(out));
    };
    Series num = to_series(numerator);
    if (!has_denominator) return num;
    return div(num, to_series(denominator));
}

Series product_expansion(std::initializer_list<ProductFactor> factors, int order) {
    return product_expansion(std::span<const ProductFactor>(factors.begin(), factors.size()), order);
}

int first_difference(const Series& a, const Series& b) {
    const int order = std::min(a.order(), b.order());
    for (int n = 0; n <= order; ++n)
        if (a[n] != b[n]) return n;
    return -1;
}

}  // namespace qram
