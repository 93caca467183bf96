#pragma once

#include <optional>
#include <vector>

#include "hankelforge/laurent.hpp"
#include "hankelforge/section.hpp"

namespace hankelforge {

/// Transvectant of two disk functions at weight (1/2, 1/2):
///   tau_{s+1}(f,g) = sum_{j=0}^s (-1)^j C(s,j)^2 f^{(s-j)} g^{(j)},
/// a section of weight s+1. from_j1 reproduces the variant whose sum starts
/// at j = 1 instead of the classical j = 0.
Section transvect(int s, const LaurentPoly& f, const LaurentPoly& g, bool from_j1 = false);

/// Residue pairing on weight-1 densities: the coefficient of z^{-1}
/// (the contour integral with the 2*pi*i dropped).
Rational residue_pair(const Section& u);

/// Conjugate of the symbol x(z)(d/dz)^s restricted to the circle:
/// monomial rule z^k (d/dz)^s -> (-1)^s z^{2s-k} (d/dz)^s, extended linearly.
Section conj_symbol(int s, const LaurentPoly& x);

/// Hankel form of order s+1 with symbol x:
///   K_{s+1}(x)[f,g] = residue of conj(x) * tau_{s+1}(f,g),
/// a weight-1 density (weights -s and s+1 add to 1).
Rational form_K(int s, const LaurentPoly& x, const LaurentPoly& f, const LaurentPoly& g);

/// The tensor-square pairing of B_{s+1}(x) against the basis element
/// b_i (x) b_j, i.e. that coefficient of b_as_tensor(s, x).
Rational form_Ktilde(int s, const LaurentPoly& x, int i, int j);

struct AdjointSample {
    int k = 0;  // symbol exponent
    int i = 0;  // tensor indices of the K-tilde side
    int j = 0;
    Rational K;
    Rational Ktilde;
};

/// Proportionality report between the two forms. When lambda is set,
/// Ktilde = lambda * K on every sample; otherwise `offending` holds the
/// first sample breaking proportionality.
struct BilinearReport {
    int s = 0;
    std::optional<Rational> lambda;
    std::vector<AdjointSample> samples;
    std::optional<AdjointSample> offending;

    bool consistent() const { return !offending.has_value(); }
};

/// Sweeps monomial symbols z^k, 2s+1 <= k <= k_max, and all index pairs on
/// the matching antidiagonal. K is evaluated at (f, g) = (z^a, z^b) and
/// compared against K-tilde at tensor indices (i, j) = (b, a); lambda is
/// fitted from the first sample with K != 0 and checked on all others.
BilinearReport adjointness_report(int s, int k_max);

}  // namespace hankelforge
