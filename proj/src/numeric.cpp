#include "qram/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "qram/divisor.hpp"

namespace qram {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr unsigned guard_bits = 16;
constexpr long max_terms = 1'000'000;

unsigned wider(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

// Tracks the stopping rule: two consecutive terms below 2^(-p-16) max(1, |sum|).
class Convergence {
public:
    explicit Convergence(unsigned precision) : precision_(precision) {}

    bool done(const BigFloat& term, const BigFloat& sum) {
        const double scale = std::max(0.0, sum.log2_abs());
        const bool small = term.is_zero() || term.log2_abs() < scale - precision_ - 16.0;
        quiet_ = small ? quiet_ + 1 : 0;
        if (++count_ > max_terms) throw std::runtime_error("series did not converge");
        return quiet_ >= 2;
    }

private:
    unsigned precision_;
    int quiet_ = 0;
    long count_ = 0;
};

BigFloat from_mpz(const mpz_class& z, unsigned precision) {
    BigFloat out(precision);
    mpfr_set_z(out.get(), z.get_mpz_t(), MPFR_RNDN);
    return out;
}

// Eulerian numbers A(r, k), k = 0..max(r-1, 0).
std::vector<mpz_class> eulerian_row(int r) {
    std::vector<mpz_class> row{1};
    for (int n = 1; n <= r; ++n) {
        std::vector<mpz_class> next(static_cast<std::size_t>(n), 0);
        for (int k = 0; k < n; ++k) {
            if (k < static_cast<int>(row.size())) next[k] += (k + 1) * row[k];
            if (k >= 1 && k - 1 < static_cast<int>(row.size())) next[k] += (n - k) * row[k - 1];
        }
        row = std::move(next);
    }
    return row;
}

// sum_{m>=1} m^r y^m = y A_r(y) / (1 - y)^(r+1).
class PowerSum {
public:
    PowerSum(int r, unsigned precision) : r_(r), precision_(precision) {
        for (const auto& a : eulerian_row(r)) coeffs_.push_back(from_mpz(a, precision));
    }

    BigFloat operator()(const BigFloat& y) const {
        BigFloat poly(0L, precision_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) poly = poly * y + *it;
        const BigFloat one(1L, precision_);
        return y * poly / pow(one - y, static_cast<long>(r_ + 1));
    }

private:
    int r_;
    unsigned precision_;
    std::vector<BigFloat> coeffs_;
};

// sum_{d>=1} w(d) d^s M_r(x^d), where M_r is the inner sum over m:
//   plain, tilde: sum_m m^r y^m, with w(d) = 1 or (-1)^(d-1)
//   hat:          sum_m (-1)^(m-1) m^r y^m
// This is sum_n c_n x^n with c_n = sum_{md=n} (n/d)^r d^s and the kind's sign.
BigFloat divisor_lambert(DivisorKind kind, int r, int s, const BigFloat& x, unsigned precision) {
    const PowerSum inner(r, precision);
    BigFloat sum(0L, precision);
    BigFloat y = x;
    Convergence conv(precision);
    for (long d = 1;; ++d, y *= x) {
        BigFloat term = kind == DivisorKind::hat ? -inner(-y) : inner(y);
        term *= from_mpz(ipow(d, static_cast<unsigned long>(s)), precision);
        if (kind == DivisorKind::tilde && d % 2 == 0) term = -term;
        sum += term;
        if (conv.done(term, sum)) break;
    }
    return sum;
}

// sum over k >= 0 (and k < 0 when bilateral) of coefficient(k) x^exponent(k).
template <class Exponent, class Coefficient>
BigFloat exponent_sum(bool bilateral, const BigFloat& x, unsigned precision, Exponent exponent,
                      Coefficient coefficient) {
    BigFloat sum(0L, precision);
    const auto run = [&](long start, long step) {
        Convergence conv(precision);
        for (long k = start;; k += step) {
            const BigFloat term = coefficient(k) * pow(x, exponent(k));
            sum += term;
            if (conv.done(term, sum)) break;
        }
    };
    run(0, 1);
    if (bilateral) run(-1, -1);
    return sum;
}

long triangular(long k) { return k * (k + 1) / 2; }
long pentagonal(long k) { return k * (3 * k + 1) / 2; }

BigFloat eval_family(Family fam, int index, const BigFloat& x, unsigned p) {
    const auto power = [p](long base, int e) { return from_mpz(ipow(base, static_cast<unsigned long>(e)), p); };
    const auto signed_power = [&](long k, long base, int e) {
        BigFloat v = power(base, e);
        return k % 2 == 0 ? v : -v;
    };
    switch (fam) {
        case Family::T:
            if (index % 2 != 0) throw std::invalid_argument("T family takes an even index");
            return exponent_sum(true, x, p, pentagonal, [&](long k) { return signed_power(k, 6 * k + 1, index); });
        case Family::F:
            return exponent_sum(false, x, p, triangular,
                                [&](long k) { return signed_power(k, 2 * k + 1, index + 1); });
        case Family::Psi:
            return exponent_sum(false, x, p, triangular, [&](long k) { return power(2 * k + 1, index); });
        case Family::Eps:
            return exponent_sum(true, x, p, pentagonal, [&](long k) { return power(6 * k + 1, index); });
    }
    throw std::logic_error("unhandled family");
}

BigFloat eval_theta(int sa, int u, int sb, int v, const BigFloat& x, unsigned p) {
    if ((sa != 1 && sa != -1) || (sb != 1 && sb != -1)) throw std::invalid_argument("theta signs must be +1 or -1");
    if (u < 1 || v < 1) throw std::invalid_argument("theta exponents u, v must be positive");
    return exponent_sum(
        true, x, p, [&](long k) { return u * triangular(k) + v * triangular(k - 1); },
        [&](long k) {
            long sign = 1;
            if (sa < 0 && triangular(k) % 2 != 0) sign = -sign;
            if (sb < 0 && triangular(k - 1) % 2 != 0) sign = -sign;
            return BigFloat(sign, p);
        });
}

BigFloat eval_named(NamedTheta which, const BigFloat& x, unsigned p) {
    switch (which) {
        case NamedTheta::varphi: {
            BigFloat out = exponent_sum(false, x, p, [](long k) { return (k + 1) * (k + 1); },
                                        [p](long) { return BigFloat(2L, p); });
            return out + BigFloat(1L, p);
        }
        case NamedTheta::psi:
            return exponent_sum(false, x, p, triangular, [p](long) { return BigFloat(1L, p); });
        case NamedTheta::f_minus_q: return eval_theta(-1, 1, -1, 2, x, p);
        case NamedTheta::qpochhammer: {
            const BigFloat one(1L, p);
            BigFloat out = one;
            BigFloat y = x;
            Convergence conv(p);
            for (;; y *= x) {
                out *= one - y;
                if (conv.done(y, out)) break;
            }
            return out;
        }
    }
    throw std::logic_error("unhandled named theta");
}

BigFloat eval_hahn(HahnSeries which, const BigFloat& x, unsigned p) {
    DivisorKind kind = DivisorKind::tilde;
    int s = 1;
    long factor = 8;
    switch (which) {
        case HahnSeries::P: break;
        case HahnSeries::E: kind = DivisorKind::hat; factor = 24; break;
        case HahnSeries::Q: s = 3; factor = -16; break;
        case HahnSeries::R: s = 5; factor = 8; break;
    }
    const BigFloat boundary(boundary_value(kind, static_cast<unsigned>(s)), p);
    return BigFloat(factor, p) * (boundary + divisor_lambert(kind, 0, s, x, p));
}

BigFloat eval_eisenstein(int k, const BigFloat& x, unsigned p) {
    if (k < 1) throw std::invalid_argument("eisenstein needs k >= 1");
    const Rational factor = -Rational(4L * k) / bernoulli(static_cast<unsigned>(2 * k));
    return BigFloat(1L, p) + BigFloat(factor, p) * divisor_lambert(DivisorKind::plain, 0, 2 * k - 1, x, p);
}

int classical_index(char which) {
    switch (which) {
        case 'P': return 1;
        case 'Q': return 2;
        case 'R': return 3;
    }
    throw std::invalid_argument("unknown classical series");
}

// Cached constants, keyed by precision.
class ConstantCache {
public:
    BigFloat get(unsigned precision, const std::function<BigFloat(unsigned)>& compute) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = values_.find(precision); it != values_.end()) return it->second;
        }
        BigFloat value = compute(precision);
        std::lock_guard lock(mutex_);
        return values_.emplace(precision, std::move(value)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<unsigned, BigFloat> values_;
};

void require_precision(unsigned precision) {
    if (precision < 64) throw std::invalid_argument("precision must be at least 64 bits");
}

}  // namespace

// BigFloat

BigFloat::BigFloat(unsigned precision) {
    mpfr_init2(value_, static_cast<mpfr_prec_t>(precision));
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, unsigned precision) : BigFloat(precision) { mpfr_set_si(value_, value, MPFR_RNDN); }

BigFloat::BigFloat(const Rational& value, unsigned precision) : BigFloat(precision) {
    mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(std::string_view decimal, unsigned precision) : BigFloat(precision) {
    const std::string text(decimal);
    if (mpfr_set_str(value_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("malformed number '" + text + "'");
}

BigFloat::BigFloat(const BigFloat& other) : BigFloat(other.precision()) { mpfr_set(value_, other.value_, MPFR_RNDN); }

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(other.precision()) { mpfr_swap(value_, other.value_); }

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

unsigned BigFloat::precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }

double BigFloat::log2_abs() const {
    if (is_zero()) return -INFINITY;
    long exponent = 0;
    const double mantissa = mpfr_get_d_2exp(&exponent, value_, MPFR_RNDN);
    return static_cast<double>(exponent) + std::log2(std::fabs(mantissa));
}

std::string BigFloat::str(int digits) const {
    if (is_zero()) return "0";
    std::vector<char> buffer(static_cast<std::size_t>(digits) + 64);
    const std::string format = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
    mpfr_snprintf(buffer.data(), buffer.size(), format.c_str(), value_);
    return buffer.data();
}

#define QRAM_BIGFLOAT_OP(op, fn)                                   \
    BigFloat& BigFloat::operator op(const BigFloat& o) {           \
        if (o.precision() > precision()) mpfr_prec_round(value_, mpfr_get_prec(o.value_), MPFR_RNDN); \
        fn(value_, value_, o.value_, MPFR_RNDN);                   \
        return *this;                                              \
    }
QRAM_BIGFLOAT_OP(+=, mpfr_add)
QRAM_BIGFLOAT_OP(-=, mpfr_sub)
QRAM_BIGFLOAT_OP(*=, mpfr_mul)
QRAM_BIGFLOAT_OP(/=, mpfr_div)
#undef QRAM_BIGFLOAT_OP

BigFloat operator-(const BigFloat& a) {
    BigFloat out(a.precision());
    mpfr_neg(out.get(), a.get(), MPFR_RNDN);
    return out;
}

BigFloat abs(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_abs(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat sqrt(const BigFloat& x) {
    if (x.sign() < 0) throw std::domain_error("sqrt of a negative number");
    BigFloat out(x.precision());
    mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat exp(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_exp(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat log(const BigFloat& x) {
    if (x.sign() <= 0) throw std::domain_error("log of a nonpositive number");
    BigFloat out(x.precision());
    mpfr_log(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat pow(const BigFloat& x, long e) {
    BigFloat out(x.precision());
    mpfr_pow_si(out.get(), x.get(), e, MPFR_RNDN);
    return out;
}

BigFloat pow(const BigFloat& x, const Rational& e) {
    if (e.is_integer()) return pow(x, e.numerator().get_si());
    if (x.sign() <= 0) throw std::domain_error("fractional power of a nonpositive number");
    BigFloat root(x.precision() + guard_bits);
    mpfr_rootn_ui(root.get(), x.get(), e.denominator().get_ui(), MPFR_RNDN);
    BigFloat out = pow(root, e.numerator().get_si());
    mpfr_prec_round(out.get(), static_cast<mpfr_prec_t>(x.precision()), MPFR_RNDN);
    return out;
}

BigFloat exp2(long e, unsigned precision) {
    BigFloat out(1L, precision);
    mpfr_mul_2si(out.get(), out.get(), e, MPFR_RNDN);
    return out;
}

BigFloat agm(const BigFloat& a0, const BigFloat& b0) {
    if (a0.sign() <= 0 || b0.sign() <= 0) throw std::domain_error("agm needs positive arguments");
    const unsigned p = wider(a0, b0);
    BigFloat a = a0;
    BigFloat b = b0;
    const BigFloat half(Rational(1, 2), p);
    const BigFloat tol = exp2(-static_cast<long>(p), p);
    for (int i = 0; i < 64; ++i) {
        BigFloat next_a = (a + b) * half;
        b = sqrt(a * b);
        a = std::move(next_a);
        if (abs(a - b) <= tol * a) break;
    }
    return a;
}

BigFloat const_pi(unsigned precision) {
    require_precision(precision);
    static ConstantCache cache;
    return cache.get(precision, [](unsigned p) {
        BigFloat out(p);
        mpfr_const_pi(out.get(), MPFR_RNDN);
        return out;
    });
}

BigFloat const_gamma14(unsigned precision) {
    require_precision(precision);
    static ConstantCache cache;
    return cache.get(precision, [](unsigned p) {
        const unsigned w = p + guard_bits;
        const BigFloat two_pi = BigFloat(2L, w) * const_pi(w);
        const BigFloat m = agm(sqrt(BigFloat(2L, w)), BigFloat(1L, w));
        BigFloat out = sqrt(pow(two_pi, Rational(3, 2)) / m);
        mpfr_prec_round(out.get(), static_cast<mpfr_prec_t>(p), MPFR_RNDN);
        return out;
    });
}

BigFloat const_gamma34(unsigned precision) {
    require_precision(precision);
    static ConstantCache cache;
    return cache.get(precision, [](unsigned p) {
        const unsigned w = p + guard_bits;
        BigFloat out = const_pi(w) * sqrt(BigFloat(2L, w)) / const_gamma14(w);
        mpfr_prec_round(out.get(), static_cast<mpfr_prec_t>(p), MPFR_RNDN);
        return out;
    });
}

BigFloat eval_point(const SeriesName& name, const BigFloat& x0, unsigned precision) {
    require_precision(precision);
    BigFloat x = x0;
    mpfr_prec_round(x.get(), static_cast<mpfr_prec_t>(precision + guard_bits), MPFR_RNDN);
    if (abs(x) >= BigFloat(1L, precision)) throw std::domain_error("series diverges for |x| >= 1");
    const unsigned w = precision + guard_bits;
    BigFloat out = std::visit(
        overloaded{
            [&](const names::Eisenstein& e) { return eval_eisenstein(e.k, x, w); },
            [&](const names::Classical& c) { return eval_eisenstein(classical_index(c.which), x, w); },
            [&](const names::Hahn& h) { return eval_hahn(h.which, x, w); },
            [&](const names::FamilyMember& f) { return eval_family(f.fam, f.index, x, w); },
            [&](const names::Phi& ph) {
                if (ph.r < 0 || ph.s < 0) throw std::invalid_argument("phi series needs r, s >= 0");
                const DivisorKind kind = ph.variant == PhiVariant::plain ? DivisorKind::plain : DivisorKind::tilde;
                return divisor_lambert(kind, ph.r, ph.s, x, w);
            },
            [&](const names::Theta& t) { return eval_theta(t.sa, t.u, t.sb, t.v, x, w); },
            [&](const names::Named& n) { return eval_named(n.which, x, w); },
        },
        name);
    mpfr_prec_round(out.get(), static_cast<mpfr_prec_t>(precision), MPFR_RNDN);
    return out;
}

BigFloat eval_series(const Series& series, const BigFloat& x, unsigned precision) {
    BigFloat out(0L, precision);
    for (int n = series.order(); n >= 0; --n) out = out * x + BigFloat(series[n], precision);
    return out;
}

// Expr

Expr::Expr(const Rational& value) : eval_([value](unsigned p) { return BigFloat(value, p); }) {}

Expr Expr::pi() { return Expr([](unsigned p) { return const_pi(p); }); }
Expr Expr::gamma34() { return Expr([](unsigned p) { return const_gamma34(p); }); }

Expr operator+(const Expr& a, const Expr& b) { return Expr([a, b](unsigned p) { return a(p) + b(p); }); }
Expr operator-(const Expr& a, const Expr& b) { return Expr([a, b](unsigned p) { return a(p) - b(p); }); }
Expr operator*(const Expr& a, const Expr& b) { return Expr([a, b](unsigned p) { return a(p) * b(p); }); }
Expr operator/(const Expr& a, const Expr& b) { return Expr([a, b](unsigned p) { return a(p) / b(p); }); }
Expr operator-(const Expr& a) { return Expr([a](unsigned p) { return -a(p); }); }

Expr pow(const Expr& base, const Rational& e) { return Expr([base, e](unsigned p) { return pow(base(p), e); }); }
Expr sqrt(const Expr& x) { return Expr([x](unsigned p) { return sqrt(x(p)); }); }
Expr exp(const Expr& x) { return Expr([x](unsigned p) { return exp(x(p)); }); }

// Special values

namespace {

std::vector<SpecialValue> build_special_values() {
    const Expr pi = Expr::pi();
    const Expr g = Expr::gamma34();
    const Expr r2 = sqrt(Expr(2));
    const Expr r3 = sqrt(Expr(3));
    const Expr r6 = sqrt(Expr(6));
    const Expr c = pow(pi, Rational(1, 4)) / g;  // pi^(1/4) / Gamma(3/4)
    const Expr three_34 = pow(Expr(3), Rational(3, 4));
    const Expr a = Expr(1) + r3 + r2 * three_34;
    const Expr b = Expr(1) + r3 + r2 * pow(Expr(3), Rational(1, 4));
    const Expr m = Expr(2) + r3 + (r2 + r6) / Expr(2) * three_34;
    const Expr den = pow(Expr(3), Rational(3, 8)) * pow(r3 + Expr(1), Rational(5, 6)) * pow(a, Rational(2, 3));
    const Expr g8 = pow(g, Rational(8));
    const Expr g16 = pow(g, Rational(16));
    const auto e_pi = [&](const Rational& k) { return exp(Expr(k) * pi); };

    const Expr minus_e_pi = -e_pi(-1);
    const Expr e_2pi = e_pi(-2);
    const Expr e_3pi = e_pi(-3);
    const std::string at_minus_e_pi = "-exp(-pi)";

    const auto phi_tilde = [](int r, int s) { return SeriesName(names::Phi{PhiVariant::tilde, r, s}); };
    const auto hahn_name = [](HahnSeries h) { return SeriesName(names::Hahn{h}); };
    const auto classical = [](char w) { return SeriesName(names::Classical{w}); };
    const SeriesName eps0 = names::FamilyMember{Family::Eps, 0};
    const SeriesName psi = names::Named{NamedTheta::psi};

    const std::string q_note =
        "Q(-exp(-pi)) = -4 Q(exp(-2pi)); the value 3 pi^2/(4 Gamma(3/4)^8) belongs to Q(exp(-2pi)), "
        "not to Q(-exp(-pi)) as the chained form Q(-exp(-pi)) = -4Q(exp(-2pi)) = 3pi^2/(4Gamma(3/4)^8) reads";

    std::vector<SpecialValue> out{
        {"ct5.phi01", phi_tilde(0, 1), at_minus_e_pi, minus_e_pi, "1/(4 pi) - 1/8",
         Expr(1) / (Expr(4) * pi) - Expr(Rational(1, 8)), ""},
        {"ct5.phi05", phi_tilde(0, 5), at_minus_e_pi, minus_e_pi, "-1/8", Expr(Rational(-1, 8)), ""},
        {"ct5.phi16", phi_tilde(1, 6), at_minus_e_pi, minus_e_pi, "-pi^4/(16 Gamma(3/4)^16)",
         -pow(pi, Rational(4)) / (Expr(16) * g16), ""},
        {"ct5.phi27", phi_tilde(2, 7), at_minus_e_pi, minus_e_pi, "-7 pi^3/(16 Gamma(3/4)^16)",
         -Expr(7) * pow(pi, Rational(3)) / (Expr(16) * g16), ""},
        {"ct5b.phi09", phi_tilde(0, 9), at_minus_e_pi, minus_e_pi, "-31/8", Expr(Rational(-31, 8)), ""},
        {"ct5b.phi013", phi_tilde(0, 13), at_minus_e_pi, minus_e_pi, "-5461/8", Expr(Rational(-5461, 8)), ""},
        {"hahn.P", hahn_name(HahnSeries::P), at_minus_e_pi, minus_e_pi, "2/pi", Expr(2) / pi, ""},
        {"hahn.E", hahn_name(HahnSeries::E), at_minus_e_pi, minus_e_pi, "0", Expr(Rational(0)), ""},
        {"hahn.Q", hahn_name(HahnSeries::Q), at_minus_e_pi, minus_e_pi, "pi^2/Gamma(3/4)^8",
         pow(pi, Rational(2)) / g8, ""},
        {"hahn.R", hahn_name(HahnSeries::R), at_minus_e_pi, minus_e_pi, "0", Expr(Rational(0)), ""},
        {"classical.P.neg", classical('P'), at_minus_e_pi, minus_e_pi, "6/pi", Expr(6) / pi, ""},
        {"classical.P.2pi", classical('P'), "exp(-2pi)", e_2pi, "3/pi", Expr(3) / pi, ""},
        {"classical.Q.neg", classical('Q'), at_minus_e_pi, minus_e_pi, "-3 pi^2/Gamma(3/4)^8",
         -Expr(3) * pow(pi, Rational(2)) / g8, q_note},
        {"classical.Q.2pi", classical('Q'), "exp(-2pi)", e_2pi, "3 pi^2/(4 Gamma(3/4)^8)",
         Expr(3) * pow(pi, Rational(2)) / (Expr(4) * g8), q_note},
        {"classical.R.neg", classical('R'), at_minus_e_pi, minus_e_pi, "0", Expr(Rational(0)), ""},
        {"classical.R.2pi", classical('R'), "exp(-2pi)", e_2pi, "0", Expr(Rational(0)), ""},
        {"t6.eps_plus", eps0, "exp(-pi)", e_pi(-1),
         "2^(-9/8) 3^(-3/8) exp(pi/24) (1 + sqrt3 + sqrt2 3^(3/4)) / sqrt(1 + sqrt3 + sqrt2 3^(1/4)) "
         "pi^(1/4)/Gamma(3/4)",
         pow(Expr(2), Rational(-9, 8)) * pow(Expr(3), Rational(-3, 8)) * e_pi(Rational(1, 24)) * a / sqrt(b) * c, ""},
        {"t6.eps_minus", eps0, at_minus_e_pi, minus_e_pi,
         "2^(-3/4) 3^(-1/2) exp(pi/24) (1 + sqrt3) (2 sqrt3 - 3)^(1/4) pi^(1/4)/Gamma(3/4)",
         pow(Expr(2), Rational(-3, 4)) * pow(Expr(3), Rational(-1, 2)) * e_pi(Rational(1, 24)) * (Expr(1) + r3) *
             pow(Expr(2) * r3 - Expr(3), Rational(1, 4)) * c,
         ""},
        {"t7.eps_2pi", eps0, "exp(-2pi)", e_2pi,
         "exp(pi/12) (2 + sqrt3 + (sqrt2 + sqrt6)/2 3^(3/4)) / (3^(3/8) (sqrt3 + 1)^(5/6) "
         "(1 + sqrt3 + sqrt2 3^(3/4))^(2/3)) pi^(1/4)/Gamma(3/4)",
         e_pi(Rational(1, 12)) * m / den * c, ""},
        {"t8.f15", names::Theta{1, 1, 1, 5}, "exp(-pi)", e_pi(-1),
         "2^(-5/4) 3^(-3/8) exp(pi/3) (sqrt3 + 1)^(5/6) (1 + sqrt3 + sqrt2 3^(3/4))^(5/3) / "
         "((1 + sqrt3 + sqrt2 3^(1/4)) (2 + sqrt3 + (sqrt2 + sqrt6)/2 3^(3/4))) pi^(1/4)/Gamma(3/4)",
         pow(Expr(2), Rational(-5, 4)) * pow(Expr(3), Rational(-3, 8)) * e_pi(Rational(1, 3)) *
             pow(r3 + Expr(1), Rational(5, 6)) * pow(a, Rational(5, 3)) / (b * m) * c,
         ""},
        {"l2.psi3pi", psi, "exp(-3pi)", e_3pi,
         "2^(-1/8) 3^(-3/8) exp(3pi/8) (1 + sqrt2 3^(1/4) + sqrt3)^(-1/2) pi^(1/4)/Gamma(3/4)",
         pow(Expr(2), Rational(-1, 8)) * pow(Expr(3), Rational(-3, 8)) * e_pi(Rational(3, 8)) *
             pow(b, Rational(-1, 2)) * c,
         ""},
        {"l2.psi3pi_neg", psi, "-exp(-3pi)", -e_3pi,
         "2^(-3/4) 3^(-1/2) exp(3pi/8) (2 sqrt3 - 3)^(1/4) pi^(1/4)/Gamma(3/4)",
         pow(Expr(2), Rational(-3, 4)) * pow(Expr(3), Rational(-1, 2)) * e_pi(Rational(3, 8)) *
             pow(Expr(2) * r3 - Expr(3), Rational(1, 4)) * c,
         ""},
        {"l3.psi6pi", psi, "exp(-6pi)", e_pi(-6),
         "exp(3pi/4) / (3^(3/8) (sqrt3 + 1)^(5/6) (1 + sqrt3 + sqrt2 3^(3/4))^(2/3)) pi^(1/4)/Gamma(3/4)",
         e_pi(Rational(3, 4)) / den * c, ""},
    };
    std::sort(out.begin(), out.end(), [](const SpecialValue& l, const SpecialValue& r) { return l.id < r.id; });
    return out;
}

}  // namespace

const std::vector<SpecialValue>& special_values() {
    static const std::vector<SpecialValue> values = build_special_values();
    return values;
}

const SpecialValue* find_special(std::string_view id) {
    const auto& all = special_values();
    const auto it = std::find_if(all.begin(), all.end(), [&](const SpecialValue& v) { return v.id == id; });
    return it == all.end() ? nullptr : &*it;
}

NumericReport check_special(const SpecialValue& value, unsigned precision) {
    require_precision(precision);
    const unsigned w = precision + guard_bits;
    NumericReport report{value.id, precision, BigFloat(precision), BigFloat(precision), BigFloat(precision),
                         BigFloat(precision), exp2(-static_cast<long>(precision - 32), precision), false,
                         value.note};
    // The closed form is the reference, so it is evaluated well beyond p.
    const unsigned reference = 2 * precision + 64;
    report.series_value = eval_point(value.series, value.x(w), w);
    report.closed_value = value.value(reference);
    report.abs_err = BigFloat(reference);
    mpfr_sub(report.abs_err.get(), report.series_value.get(), report.closed_value.get(), MPFR_RNDN);
    report.abs_err = abs(report.abs_err);
    report.rel_err = report.closed_value.is_zero() ? report.abs_err : report.abs_err / abs(report.closed_value);
    report.passed = report.rel_err < report.tolerance;
    return report;
}

NumericReport check_special(std::string_view id, unsigned precision) {
    const SpecialValue* value = find_special(id);
    if (value == nullptr) throw std::invalid_argument("unknown special value '" + std::string(id) + "'");
    return check_special(*value, precision);
}

}  // namespace qram
