#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qram/rational.hpp"

namespace qram {

/// Signed Bernoulli number B_n with B_1 = -1/2, from x/(e^x - 1).
Rational bernoulli(unsigned n);

/// Which divisor-sum function:
///   plain  sigma_s(n)  = sum_{d|n} d^s
///   tilde  sigma~_s(n) = sum_{d|n} (-1)^(d-1) d^s
///   hat    sigma^_s(n) = sum_{d|n} (-1)^(n/d-1) d^s  (s-th powers of odd divisors)
enum class DivisorKind { plain, tilde, hat };

std::string_view to_string(DivisorKind kind);
DivisorKind divisor_kind_from_string(std::string_view text);

/// Literal divisor sum for n >= 1. Memoized per (kind, s); safe to call
/// concurrently.
mpz_class divisor_sum_positive(DivisorKind kind, unsigned s, long n);

/// Divisor sum under the extended convention: 0 for negative or non-integer
/// arguments, the tabulated boundary value at n = 0.
Rational divisor_sum(DivisorKind kind, unsigned s, long n);
Rational divisor_sum(DivisorKind kind, unsigned s, const Rational& n);

/// The fixed constants assigned to the n = 0 argument. Only the pairs
///   plain s in {3,5,7}, tilde s in {1,3,5}, hat s = 1
/// are defined; anything else throws std::domain_error.
Rational boundary_value(DivisorKind kind, unsigned s);
bool has_boundary_value(DivisorKind kind, unsigned s);

/// -B_{s+1} / (2(s+1)) for odd s: the constant that turns
/// 1 - (2(s+1)/B_{s+1}) sum sigma_s(n) q^n into a sum starting at n = 0.
/// Agrees with boundary_value on the tabulated plain entries; not used by it.
Rational extrapolated_plain_boundary(unsigned s);

struct ConvolutionTerm {
    DivisorKind kind;
    unsigned s;
    /// Value used at argument 0; boundary_value(kind, s) when empty.
    std::optional<Rational> at_zero = std::nullopt;
};

/// Sum over all tuples (i_1, ..., i_k) of nonnegative integers with
/// i_1 + ... + i_k = n of prod_j sigma_{terms[j]}(i_j). Direct enumeration.
Rational convolution(std::span<const ConvolutionTerm> terms, long n);
Rational convolution(std::initializer_list<ConvolutionTerm> terms, long n);

}  // namespace qram
