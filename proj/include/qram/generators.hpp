#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qram/series.hpp"

namespace qram {

enum class HahnSeries { P, E, Q, R };
enum class Family { T, F, Psi, Eps };
enum class PhiVariant { plain, tilde };
enum class NamedTheta { varphi, psi, f_minus_q, qpochhammer };

std::string_view to_string(HahnSeries which);
std::string_view to_string(Family fam);
Family family_from_string(std::string_view text);

/// E_{2k} = 1 - (4k / B_{2k}) sum sigma_{2k-1}(n) q^n. P, Q, R are k = 1, 2, 3.
Series eisenstein(int k, int order);

/// Hahn's series, each with constant term 1 from the boundary values:
///   P = sum 8 sigma~(n) q^n       E = sum 24 sigma^(n) q^n
///   Q = sum -16 sigma~_3(n) q^n   R = sum 8 sigma~_5(n) q^n
Series hahn(HahnSeries which, int order);

/// Theta-type families, indexed by their literal subscript:
///   T_{2n} = sum_{k in Z} (-1)^k (6k+1)^{2n} q^{k(3k+1)/2}   (index must be even)
///   F_n    = sum_{k>=0} (-1)^k (2k+1)^{n+1} q^{k(k+1)/2}
///   psi_n  = sum_{k>=0} (2k+1)^n q^{k(k+1)/2}
///   eps_n  = sum_{k in Z} (6k+1)^n q^{k(3k+1)/2}
Series family(Family fam, int index, int order);

/// Ramanujan's f(a, b) at a = sa q^u, b = sb q^v (sa, sb = +1 or -1):
/// sum_{k in Z} a^{k(k+1)/2} b^{k(k-1)/2}. Coinciding exponents are summed.
Series theta_f(int sa, int u, int sb, int v, int order);

/// phi(q) = 1 + 2 sum q^{k^2}.
Series varphi(int order);
/// psi(q) = sum_{k>=0} q^{k(k+1)/2}, from the one-sided sum.
Series psi(int order);
/// f(-q) = f(-q, -q^2).
Series f_minus_q(int order);
/// (q;q)_inf as a product.
Series qpochhammer(int order);

/// Phi_{r,s} = sum_{m,d>=1} m^r d^s q^{md};
/// Phi~_{r,s} = sum_{m,d>=1} (-1)^{d-1} m^r d^s q^{md}.
/// Built from divisor-sum coefficients.
Series phi_series(PhiVariant variant, int r, int s, int order);

namespace names {
struct Eisenstein { int k; };  // E_{2k}
struct Classical { char which; };  // 'P', 'Q' or 'R'
struct Hahn { HahnSeries which; };
struct FamilyMember { Family fam; int index; };
struct Phi { PhiVariant variant; int r; int s; };
struct Theta { int sa; int u; int sb; int v; };
struct Named { NamedTheta which; };
}  // namespace names

/// Every named series the engine can build. Canonical strings:
///   E<2k>  P Q R  hahnP hahnE hahnQ hahnR  T<2n> F<n> psi<n> eps<n>
///   phi_<r>_<s>  phi_tilde_<r>_<s>  theta_<+|-><u>_<+|-><v>
///   varphi psi f_minus_q qpoch
using SeriesName = std::variant<names::Eisenstein, names::Classical, names::Hahn, names::FamilyMember,
                                names::Phi, names::Theta, names::Named>;

std::string to_string(const SeriesName& name);
/// Throws std::invalid_argument naming the accepted forms.
SeriesName parse_series_name(std::string_view text);
/// Human-readable list of accepted name patterns.
std::vector<std::string> series_name_patterns();

Series generate(const SeriesName& name, int order);

}  // namespace qram
