#include "qram/divisor.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace qram {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table{Rational(1)};

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

mpz_class compute_divisor_sum(DivisorKind kind, unsigned s, long n) {
    mpz_class total = 0;
    const auto add = [&](long d) {
        mpz_class term = ipow(d, s);
        const long sign_index = kind == DivisorKind::tilde ? d : (kind == DivisorKind::hat ? n / d : 1);
        if (sign_index % 2 == 0 && kind != DivisorKind::plain)
            total -= term;
        else
            total += term;
    };
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        add(d);
        if (d != n / d) add(n / d);
    }
    return total;
}

struct MemoTable {
    std::mutex mutex;
    std::map<std::pair<DivisorKind, unsigned>, std::vector<mpz_class>> values;  // index n-1
};

MemoTable& memo() {
    static MemoTable table;
    return table;
}

}  // namespace

Rational bernoulli(unsigned n) {
    std::lock_guard lock(bernoulli_mutex);
    while (bernoulli_table.size() <= n) {
        const unsigned long m = bernoulli_table.size();
        Rational acc;
        for (unsigned long k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * bernoulli_table[k];
        bernoulli_table.push_back(-acc / Rational(static_cast<long>(m + 1)));
    }
    return bernoulli_table[n];
}

std::string_view to_string(DivisorKind kind) {
    switch (kind) {
        case DivisorKind::plain: return "plain";
        case DivisorKind::tilde: return "tilde";
        case DivisorKind::hat: return "hat";
    }
    return "?";
}

DivisorKind divisor_kind_from_string(std::string_view text) {
    if (text == "plain") return DivisorKind::plain;
    if (text == "tilde") return DivisorKind::tilde;
    if (text == "hat") return DivisorKind::hat;
    throw std::invalid_argument("unknown divisor kind '" + std::string(text) + "'");
}

mpz_class divisor_sum_positive(DivisorKind kind, unsigned s, long n) {
    if (n < 1) throw std::invalid_argument("divisor_sum_positive requires n >= 1");
    auto& table = memo();
    std::lock_guard lock(table.mutex);
    auto& row = table.values[{kind, s}];
    while (static_cast<long>(row.size()) < n) {
        const long next = static_cast<long>(row.size()) + 1;
        row.push_back(compute_divisor_sum(kind, s, next));
    }
    return row[static_cast<std::size_t>(n - 1)];
}

Rational divisor_sum(DivisorKind kind, unsigned s, long n) {
    if (n < 0) return Rational(0);
    if (n == 0) return boundary_value(kind, s);
    return Rational(divisor_sum_positive(kind, s, n));
}

Rational divisor_sum(DivisorKind kind, unsigned s, const Rational& n) {
    if (!n.is_integer()) return Rational(0);
    const mpz_class value = n.numerator();
    if (!value.fits_slong_p()) throw std::out_of_range("divisor_sum argument too large");
    return divisor_sum(kind, s, value.get_si());
}

bool has_boundary_value(DivisorKind kind, unsigned s) {
    switch (kind) {
        case DivisorKind::plain: return s == 3 || s == 5 || s == 7;
        case DivisorKind::tilde: return s == 1 || s == 3 || s == 5;
        case DivisorKind::hat: return s == 1;
    }
    return false;
}

Rational boundary_value(DivisorKind kind, unsigned s) {
    if (kind == DivisorKind::plain) {
        if (s == 3) return {1, 240};
        if (s == 5) return {-1, 504};
        if (s == 7) return {1, 480};
    } else if (kind == DivisorKind::tilde) {
        if (s == 1) return {1, 8};
        if (s == 3) return {-1, 16};
        if (s == 5) return {1, 8};
    } else if (s == 1) {
        return {1, 24};
    }
    throw std::domain_error("no boundary value defined for " + std::string(to_string(kind)) +
                            " divisor sum with s = " + std::to_string(s));
}

Rational extrapolated_plain_boundary(unsigned s) {
    if (s % 2 == 0) throw std::domain_error("extrapolated boundary needs odd s");
    return -bernoulli(s + 1) / Rational(2 * static_cast<long>(s + 1));
}

namespace {

// Sum over i_k + ... + i_last = remaining, factored by the distributive law;
// the number of innermost products is the number of tuples.
Rational convolve_from(const std::vector<std::vector<Rational>>& values, std::size_t k, long remaining) {
    if (k + 1 == values.size()) return values[k][static_cast<std::size_t>(remaining)];
    Rational total;
    for (long i = 0; i <= remaining; ++i) {
        const Rational& head = values[k][static_cast<std::size_t>(i)];
        if (head.is_zero()) continue;
        total += head * convolve_from(values, k + 1, remaining - i);
    }
    return total;
}

}  // namespace

Rational convolution(std::span<const ConvolutionTerm> terms, long n) {
    if (terms.empty()) throw std::invalid_argument("convolution needs at least one term");
    if (n < 0) return Rational(0);
    std::vector<std::vector<Rational>> values;
    values.reserve(terms.size());
    for (const auto& term : terms) {
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(n) + 1);
        row.push_back(term.at_zero ? *term.at_zero : boundary_value(term.kind, term.s));
        for (long i = 1; i <= n; ++i) row.emplace_back(divisor_sum_positive(term.kind, term.s, i));
        values.push_back(std::move(row));
    }
    return convolve_from(values, 0, n);
}

Rational convolution(std::initializer_list<ConvolutionTerm> terms, long n) {
    return convolution(std::span<const ConvolutionTerm>(terms.begin(), terms.size()), n);
}

}  // namespace qram
