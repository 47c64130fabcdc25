#pragma once

// Both sides of the finite reciprocal-binomial identities, evaluated exactly.
// Every function returns the left and right sides as computed independently
// from their own formulas; `equal` is exact structural equality.

#include "binetkit/bigseq.hpp"
#include "binetkit/number.hpp"
#include "binetkit/quadfield.hpp"

namespace binetkit {

enum class SeqKind { F, L };

enum class AltVariant { plain, alternating };

/// Which left-side weight to use for the halved-golden-ratio identity:
/// `proof` uses 2^{j+1} (the form that holds for every s), `printed` uses
/// 2^{j+s}, which only agrees with the right side at s = 1.
enum class HalvedWeight { proof, printed };

template <class T>
struct SidePair {
    T lhs;
    T rhs;
    bool equal = false;
};

template <class T>
SidePair<T> make_sides(T lhs, T rhs)
{
    const bool eq = (lhs == rhs);
    return {std::move(lhs), std::move(rhs), eq};
}

/// X_j for X = F or L.
Integer seq_value(SeqKind kind, long j);

/// sum_{j=0}^n 1/C(n,j)  vs  (n+1)/2^n sum_{j=0}^n 2^j/(j+1).
SidePair<Rational> eq1_sides(long n);

/// sum_{j=0}^n z^j/C(n,j)  vs  (n+1) (z/(1+z))^n (1/(1+z)) sum_{j=0}^n (1+z^{j+1})/(j+1) ((1+z)/z)^j.
/// The right side is evaluated as (n+1)/(1+z) sum_j (1+z^{j+1})/(j+1) (z/(1+z))^{n-j},
/// which is the same expression with the z^n/z^j cancellation done, so z = 0 is allowed.
/// Throws std::domain_error for z = -1 or n < 0.
SidePair<Rational> gould_check(const Rational& z, long n);
SidePair<QuadElement> gould_check(const QuadElement& z, long n);

/// sum_{j=0}^n X_{j+n+s}/C(n,j)  vs  (n+1) sum_{j=0}^n (X_{j+s-2} + X_{2j+s-1})/(j+1).
SidePair<Rational> thm1_sides(long n, long s, SeqKind kind);

/// sum_{j=0}^{2n} X_{j+s}/(2^{j+1} C(2n,j)) against the split sums over powers of 5.
SidePair<Rational> thm2_sides(long n, long s, SeqKind kind, HalvedWeight weight = HalvedWeight::proof);

/// sum_{j=0}^n (-1)^{rj} X_{2rj+s}/C(n,j)
///   vs  (n+1) X_{rn+s}/L_r^{n+1} sum_{j=0}^n (-1)^{rj} L_r^j L_{r(j+1)}/(j+1).
SidePair<Rational> thm3_sides(long n, long r, long s, SeqKind kind);

/// sum_{j=0}^n w_{2rj+s}/(q^{rj} C(n,j))
///   vs  (n+1) w_{rn+s}/v_r^{n+1} sum_{j=0}^n v_r^j v_{r(j+1)}/(q^{rj}(j+1)).
/// Throws std::domain_error when p^2 - 4q <= 0 or v_r = 0, std::invalid_argument when q = 0.
SidePair<Rational> horadam_sides(long n, long r, long s, const HoradamParams& params);

/// Same, reading w and v from prebuilt tables; throws std::out_of_range
/// if a needed index falls outside either window.
SidePair<Rational> horadam_sides(long n, long r, long s, const HoradamTable& w, const HoradamTable& v);

/// Plain:        sum_{j=0}^n X_{3j+s-n}/C(n,j)
///                 vs (n+1)/2^{n+1} sum_j 2^j/(j+1) (X_{s+2j+1} + X_{s-j-2}).
/// Alternating:  sum_{j=0}^n (-1)^j X_{3j+s-2n}/C(n,j)
///                 vs (n+1)/2^{n+1} sum_j 2^j (-1)^j/(j+1) (X_{s+j+2} + (-1)^{j-1} X_{s-2j-1}).
SidePair<Rational> thm4_sides(long n, long s, AltVariant variant, SeqKind kind);

}  // namespace binetkit
