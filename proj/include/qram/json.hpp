#pragma once

#include <json.hpp>

#include "qram/identities.hpp"
#include "qram/numeric.hpp"
#include "qram/rational.hpp"
#include "qram/series.hpp"
#include "qram/weighted_poly.hpp"

namespace qram {

// Rationals serialize as "num/den" strings ("5" for integers); BigFloats as
// decimal strings.
// Objects use nlohmann's default sorted keys, so output is byte-stable.

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

/// {"order": N, "coeffs": ["1", "-24", ...]}
void to_json(nlohmann::json& j, const Series& s);
void from_json(const nlohmann::json& j, Series& s);

/// {"ring": "classical", "terms": [{"exps": [a, b, c, d], "coeff": "p/q"}, ...]}
void to_json(nlohmann::json& j, const WeightedPoly& p);
void from_json(const nlohmann::json& j, WeightedPoly& p);

/// {"id", "status": "pass"|"fail", "checked_up_to", "first_failure"?: {"n", "lhs", "rhs"}}
void to_json(nlohmann::json& j, const VerifyReport& r);

/// {"id", "precision_bits", "abs_err", "rel_err", "tolerance", "status", "note"?}
void to_json(nlohmann::json& j, const NumericReport& r);

}  // namespace qram
