#include "qram/weighted_poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace qram {

namespace {

constexpr std::array<int, 4> kWeights{2, 2, 4, 6};

// Pretty-printer letters per ring and style; empty means the slot is unused.
constexpr std::array<std::string_view, 4> kClassicalLetters{"P", "", "Q", "R"};
constexpr std::array<std::string_view, 4> kHahnAscii{"P", "E", "Q", "R"};
constexpr std::array<std::string_view, 4> kHahnUnicode{"\xF0\x9D\x92\xAB", "\xE2\x84\xB0", "\xF0\x9D\x92\xAC",
                                                       "\xE2\x84\x9B"};

const std::array<std::string_view, 4>& letters(Ring ring, PrettyStyle style) {
    if (ring == Ring::classical) return kClassicalLetters;
    return style == PrettyStyle::unicode ? kHahnUnicode : kHahnAscii;
}

void check_slot(Ring ring, int slot) {
    if (slot < 0 || slot > 3 || (ring == Ring::classical && slot == 1))
        throw std::invalid_argument("no generator slot " + std::to_string(slot) + " in the " +
                                    std::string(to_string(ring)) + " ring");
}

void require_same_ring(const WeightedPoly& a, const WeightedPoly& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("weighted polynomials from different rings");
}

class Parser {
public:
    Parser(Ring ring, std::string_view text) : ring_(ring), text_(text) {}

    WeightedPoly parse() {
        skip_ws();
        // "(sum)/den"
        if (pos_ < text_.size() && text_[pos_] == '(') {
            const auto close = text_.rfind(')');
            if (close == std::string_view::npos) fail("unbalanced parenthesis");
            std::string_view tail = text_.substr(close + 1);
            while (!tail.empty() && std::isspace(static_cast<unsigned char>(tail.front()))) tail.remove_prefix(1);
            WeightedPoly inner = Parser(ring_, text_.substr(pos_ + 1, close - pos_ - 1)).parse();
            if (tail.empty()) return inner;
            if (tail.front() != '/') fail("expected '/' after ')'");
            tail.remove_prefix(1);
            while (!tail.empty() && std::isspace(static_cast<unsigned char>(tail.front()))) tail.remove_prefix(1);
            inner *= Rational(1) / Rational::parse(tail);
            return inner;
        }
        WeightedPoly out(ring_);
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) break;
            Rational sign(1);
            if (text_[pos_] == '+' || text_[pos_] == '-') {
                if (text_[pos_] == '-') sign = Rational(-1);
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            parse_term(out, sign);
        }
        if (first) fail("empty polynomial");
        return out;
    }

private:
    void parse_term(WeightedPoly& out, const Rational& sign) {
        Rational coeff(1);
        bool seen_anything = false;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
            coeff = Rational::parse(text_.substr(start, pos_ - start));
            seen_anything = true;
        }
        Exponents e{0, 0, 0, 0};
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
            }
            const int slot = match_letter();
            if (slot < 0) break;
            int power = 1;
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                const std::size_t start = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                if (start == pos_) fail("expected exponent after '^'");
                power = std::stoi(std::string(text_.substr(start, pos_ - start)));
            }
            e[static_cast<std::size_t>(slot)] += power;
            seen_anything = true;
        }
        if (!seen_anything) fail("expected a term");
        out.add_term(e, sign * coeff);
    }

    int match_letter() {
        for (const auto* table : {&kHahnUnicode, &kHahnAscii}) {
            for (int slot = 0; slot < 4; ++slot) {
                const std::string_view letter = (*table)[static_cast<std::size_t>(slot)];
                if (text_.substr(pos_).starts_with(letter)) {
                    if (ring_ == Ring::classical && (slot == 1 || table == &kHahnUnicode)) continue;
                    pos_ += letter.size();
                    return slot;
                }
            }
        }
        return -1;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("cannot parse polynomial '" + std::string(text_) + "' at offset " +
                                    std::to_string(pos_) + ": " + why);
    }

    Ring ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string_view to_string(Ring ring) { return ring == Ring::classical ? "classical" : "hahn"; }

int weight(const Exponents& e) {
    int w = 0;
    for (std::size_t i = 0; i < 4; ++i) w += kWeights[i] * e[i];
    return w;
}

WeightedPoly WeightedPoly::constant(Ring ring, const Rational& c) {
    WeightedPoly p(ring);
    p.add_term({0, 0, 0, 0}, c);
    return p;
}

WeightedPoly WeightedPoly::generator(Ring ring, int slot) {
    check_slot(ring, slot);
    WeightedPoly p(ring);
    Exponents e{0, 0, 0, 0};
    e[static_cast<std::size_t>(slot)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

WeightedPoly WeightedPoly::parse(Ring ring, std::string_view text) { return Parser(ring, text).parse(); }

Rational WeightedPoly::coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void WeightedPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    for (const int x : e)
        if (x < 0) throw std::invalid_argument("negative exponent in weighted polynomial");
    if (ring_ == Ring::classical && e[1] != 0) throw std::invalid_argument("classical ring has no slot 1");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool WeightedPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int w = weight(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return weight(t.first) == w; });
}

int WeightedPoly::max_weight() const {
    int w = -1;
    for (const auto& [e, c] : terms_) w = std::max(w, weight(e));
    return w;
}

bool WeightedPoly::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_integer(); });
}

WeightedPoly WeightedPoly::canonical() const {
    if (ring_ == Ring::classical) return *this;
    WeightedPoly out(ring_);
    for (const auto& [e, c] : terms_) {
        const int m = std::min(e[1], e[2]);
        out.add_term({e[0], e[1] - m, e[2] - m, e[3] + m}, c);
    }
    return out;
}

std::string WeightedPoly::str(PrettyStyle style) const {
    if (terms_.empty()) return "0";
    mpz_class den = 1;
    for (const auto& [e, c] : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
    const auto& names = letters(ring_, style);

    std::string body;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const mpz_class scaled = (c * Rational(den)).numerator();
        const bool negative = scaled < 0;
        const mpz_class magnitude = abs(scaled);
        if (first)
            body += negative ? "-" : "";
        else
            body += negative ? " - " : " + ";
        first = false;

        std::string monomial;
        for (std::size_t slot = 0; slot < 4; ++slot) {
            if (e[slot] == 0) continue;
            monomial += names[slot];
            if (e[slot] > 1) monomial += "^" + std::to_string(e[slot]);
        }
        if (magnitude != 1 || monomial.empty()) body += magnitude.get_str();
        body += monomial;
    }
    if (den == 1) return body;
    return "(" + body + ")/" + den.get_str();
}

WeightedPoly& WeightedPoly::operator+=(const WeightedPoly& o) {
    require_same_ring(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

WeightedPoly& WeightedPoly::operator-=(const WeightedPoly& o) {
    require_same_ring(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

WeightedPoly& WeightedPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

WeightedPoly operator+(WeightedPoly a, const WeightedPoly& b) { return a += b; }
WeightedPoly operator-(WeightedPoly a, const WeightedPoly& b) { return a -= b; }
WeightedPoly operator-(const WeightedPoly& a) { return Rational(-1) * a; }
WeightedPoly operator*(const Rational& c, WeightedPoly a) { return a *= c; }

WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b) {
    require_same_ring(a, b);
    WeightedPoly out(a.ring());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
    return out;
}

WeightedPoly pow(const WeightedPoly& a, unsigned exponent) {
    WeightedPoly out = WeightedPoly::constant(a.ring(), Rational(1));
    for (unsigned i = 0; i < exponent; ++i) out = out * a;
    return out;
}

}  // namespace qram
