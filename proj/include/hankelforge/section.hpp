#pragma once

#include "hankelforge/laurent.hpp"

namespace hankelforge {

/// Half-integer weight m, stored as 2m so that m = 1/2 stays exact.
struct HalfWeight {
    int twice = 0;

    static HalfWeight of_int(int m) { return HalfWeight{2 * m}; }
    static HalfWeight half() { return HalfWeight{1}; }

    friend bool operator==(HalfWeight a, HalfWeight b) { return a.twice == b.twice; }
    friend bool operator!=(HalfWeight a, HalfWeight b) { return a.twice != b.twice; }
};

/// Weighted differential f(z)(dz)^m: a Laurent coefficient function tagged
/// with its weight. Weight 1/2 supported on exponents >= 0 models the disk
/// Hardy space, exponents <= -1 the space at infinity; weight -s with
/// nonnegative support models the s-fold vector fields x(z)(d/dz)^s.
struct Section {
    HalfWeight weight;
    LaurentPoly coeff;

    bool is_zero() const { return coeff.is_zero(); }

    friend bool operator==(const Section& a, const Section& b) {
        // all zero sections of a given weight coincide; distinct weights don't
        return a.weight == b.weight && a.coeff == b.coeff;
    }
};

inline Section section_monomial(HalfWeight w, long exp, const Rational& c = Rational(1)) {
    return Section{w, LaurentPoly::monomial(exp, c)};
}

/// The three generators of sl(2,C): lowering A-, raising A+, Cartan E.
enum class Sl2Generator { Lower, Raise, Cartan };

/// Infinitesimal sl(2,C) action on weight-m sections:
///   A- : f -> -f'
///   A+ : f -> z^2 f' + 2m z f
///   E  : f -> 2z f' + 2m f
/// The weight is unchanged.
Section act_sl2(Sl2Generator X, const Section& u);

/// Projections onto nonnegative / negative Fourier modes of a weight-1/2
/// section. proj_plus keeps exponents >= 0, proj_minus exponents <= -1,
/// and they sum to the identity.
Section proj_plus(const Section& u);
Section proj_minus(const Section& u);

/// Lie derivative of a half-density along a vector field:
/// for x(z) d/dz (weight -1) and f(z)(dz)^{1/2}, returns
/// ((1/2) x' f + x f')(dz)^{1/2}.
Section lie_half(const Section& x, const Section& u);

}  // namespace hankelforge
