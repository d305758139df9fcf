#pragma once

#include <array>

#include "qram/generators.hpp"
#include "qram/series.hpp"
#include "qram/weighted_poly.hpp"

namespace qram {

/// Images of the generators under scale * q d/dq.
///
/// Base (scale 1) rules:
///   classical  qP' = (P^2 - Q)/12     qQ' = (PQ - R)/3      qR' = (PR - Q^2)/2
///   hahn       qP' = (P^2 - Q)/4      qE' = (EP - Q)/2      qQ' = PQ - R
///              qR' = (3PR - Q^2 - 2ER)/2
/// The hahn Q and R images use the relation R = EQ; both are consistent
/// with it (the derivation of R - EQ is zero after canonicalization).
struct DerivationRules {
    Ring ring;
    Rational scale;
    std::array<WeightedPoly, 4> images;

    static DerivationRules classical(const Rational& scale = Rational(1));
    static DerivationRules hahn(const Rational& scale = Rational(1));
};

/// Leibniz extension of the generator rules. Throws std::invalid_argument
/// on a ring mismatch.
WeightedPoly derive(const DerivationRules& rules, const WeightedPoly& p);

/// Ratio polynomial of a theta family, by r_{k+1} = r_k g + D(r_k), r_0 = 1:
///   T:   T_{2n}/T_0,      D = 24 q d/dq, g = P          (classical)
///   F:   F_{2n}/F_0,      D = 8 q d/dq,  g = P          (classical)
///   Psi: psi_{2n}/psi_0,  D = 8 q d/dq,  g = hahn P     (hahn)
///   Eps: eps_{2n+1}/eps_1, D = 24 q d/dq, g = 9P - 8E   (hahn)
/// Hahn results are in canonical form.
WeightedPoly ratio_poly(Family fam, int n);

/// The ring a family's ratio polynomial lives in.
Ring ring_of(Family fam);

/// Phi_{r,s} (classical) or Phi~_{r,s} (hahn) as a polynomial, from the
/// base case at (0, s - r) and r applications of q d/dq. Needs s >= r >= 0,
/// r + s odd and s - r in {1, 3, 5}; throws std::invalid_argument otherwise.
WeightedPoly phi_poly(PhiVariant variant, int r, int s);

/// Substitutes P -> 3P - 2E, Q -> 4E^2 - 3Q, R -> -8E^3 + 9R (right-hand
/// sides in the hahn ring). Result is canonical.
WeightedPoly classical_to_hahn(const WeightedPoly& p);

/// Substitutes the generator series (eisenstein or hahn) and expands.
Series eval_as_series(const WeightedPoly& p, int order);

}  // namespace qram
