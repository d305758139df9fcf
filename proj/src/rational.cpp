#include "qram/rational.hpp"

#include <stdexcept>

namespace qram {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
    const auto valid_int = [](std::string_view s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto to_mpz = [](std::string_view s) {
        if (!s.empty() && s[0] == '+') s.remove_prefix(1);
        return mpz_class(std::string(s), 10);
    };

    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!valid_int(num)) throw bad();
    if (slash == std::string_view::npos) return Rational(to_mpz(num));
    const std::string_view den = text.substr(slash + 1);
    if (!valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
    return Rational(to_mpz(num), to_mpz(den));
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

mpz_class ipow(long base, unsigned long exponent) {
    mpz_class out;
    mpz_class b(base);
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
    return out;
}

Rational pow(const Rational& base, unsigned long exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

}  // namespace qram
