#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qram/rational.hpp"
#include "qram/series.hpp"

namespace qram {

enum class IdentityKind { series, convolution };

std::string_view to_string(IdentityKind kind);

/// Arguments n = first, first + step, ... at which a convolution identity is claimed.
struct Domain {
    long first = 0;
    long step = 1;

    static Domain all() { return {0, 1}; }
    static Domain positive() { return {1, 1}; }
    static Domain odd() { return {1, 2}; }
    std::string str() const;
};

/// A named identity with two independently built sides.
///
/// Series identities compare lhs_series(N) and rhs_series(N) coefficientwise;
/// convolution identities compare lhs_value(n) and rhs_value(n) for n in domain.
struct Identity {
    std::string id;
    IdentityKind kind = IdentityKind::series;
    std::string statement;
    std::function<Series(int)> lhs_series;
    std::function<Series(int)> rhs_series;
    std::function<Rational(long)> lhs_value;
    std::function<Rational(long)> rhs_value;
    Domain domain;
};

struct Failure {
    long n;
    Rational lhs;
    Rational rhs;
};

struct VerifyReport {
    std::string id;
    IdentityKind kind;
    std::string statement;
    bool passed;
    long checked_up_to;
    std::optional<Failure> first_failure;  // present iff !passed
};

/// Every registered identity, sorted by id.
const std::vector<Identity>& registry();
/// nullptr when absent.
const Identity* lookup(std::string_view id);

/// Verifies an arbitrary identity (registered or not). `order` applies to
/// series identities, `n_max` to convolution identities.
VerifyReport verify(const Identity& identity, int order, long n_max);

/// Throw std::invalid_argument for unknown ids or the wrong kind.
VerifyReport verify_series(std::string_view id, int order);
VerifyReport verify_convolution(std::string_view id, long n_max);

/// Runs the whole registry in id order.
std::vector<VerifyReport> verify_all(int order, long n_max);

}  // namespace qram
