#pragma once

#include <vector>

#include "hankelforge/rational.hpp"

namespace hankelforge {

enum class IdentityFamily { A, B };

struct IdentityResult {
    IdentityFamily family;
    std::vector<long> params;
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

/// First binomial identity, for s >= 1, k >= 2s+1, 0 <= l <= k-s:
///   sum_j (-1)^j C(s+j,j) C(k,s-j) [ C(l+j,j)(k-s) - C(l+j-1,j-1) l ]
///   = sum_j (-1)^j C(s+j,j) C(k+1,s-j) C(l+j,j) (k-2s),
/// both sides summed over j = 0..s. The j = 0 term of the bracket uses the
/// C(.,-1) = 0 convention.
IdentityResult identity_A(int s, int k, int l);

/// Second binomial identity, for s >= 1 and i+j >= s:
///   sum_l (-1)^l C(s+l,l) C(j+l,l) C(i+j+s+1,s-l)
///   = sum_l (-1)^l C(s,l) C(j,l) C(i,s-l).
IdentityResult identity_B(int s, int i, int j);

/// Recomputes the operator equation behind identity A,
///   B_{s+1}(A+ z^k) = pi_x(A+) B_{s+1}(z^k),
/// through the tensor machinery, and checks that the expansion of both
/// sides in the basis b_i (x) b_j reproduces identity_A(s, k, l) for every
/// l = 0..k-s coefficient by coefficient. Requires k >= 2s+1.
bool equivariance_expansion_A(int s, int k);

}  // namespace hankelforge
