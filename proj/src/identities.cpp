#include "hankelforge/identities.hpp"

#include <stdexcept>

#include "hankelforge/binomial.hpp"
#include "hankelforge/hankel.hpp"

namespace hankelforge {

IdentityResult identity_A(int s, int k, int l) {
    if (s < 1) throw std::invalid_argument("identity_A: requires s >= 1");
    if (k < 2 * s + 1) throw std::invalid_argument("identity_A: requires k >= 2s+1");
    if (l < 0 || l > k - s) throw std::invalid_argument("identity_A: requires 0 <= l <= k-s");

    Rational lhs(0), rhs(0);
    for (int j = 0; j <= s; ++j) {
        Rational common = binom(s + j, j);
        if (j % 2 != 0) common = -common;
        Rational bracket = binom(l + j, j) * Rational(k - s) - binom(l + j - 1, j - 1) * Rational(l);
        lhs += common * binom(k, s - j) * bracket;
        rhs += common * binom(k + 1, s - j) * binom(l + j, j) * Rational(k - 2 * s);
    }
    return IdentityResult{IdentityFamily::A, {s, k, l}, lhs, rhs, lhs == rhs};
}

IdentityResult identity_B(int s, int i, int j) {
    if (s < 1) throw std::invalid_argument("identity_B: requires s >= 1");
    if (i < 0 || j < 0 || i + j < s) throw std::invalid_argument("identity_B: requires i+j >= s");

    Rational lhs(0), rhs(0);
    for (int l = 0; l <= s; ++l) {
        Rational sign(l % 2 == 0 ? 1 : -1);
        lhs += sign * binom(s + l, l) * binom(j + l, l) * binom(i + j + s + 1, s - l);
        rhs += sign * binom(s, l) * binom(j, l) * binom(i, s - l);
    }
    return IdentityResult{IdentityFamily::B, {s, i, j}, lhs, rhs, lhs == rhs};
}

bool equivariance_expansion_A(int s, int k) {
    if (s < 1 || k < 2 * s + 1)
        throw std::invalid_argument("equivariance_expansion_A: requires s >= 1, k >= 2s+1");

    // B(A+ z^k): the raising action at weight -s sends z^k to (k-2s) z^{k+1}
    const TensorElt lhs_tensor =
        b_as_tensor(s, LaurentPoly::monomial(k + 1, Rational(k - 2 * s)));
    const TensorElt rhs_tensor =
        tensor_act(Sl2Generator::Raise, b_as_tensor(s, LaurentPoly::monomial(k)));
    if (!(lhs_tensor == rhs_tensor)) return false;

    // both sides live on the antidiagonal i + j = k - s
    for (const auto& [key, c] : lhs_tensor.terms())
        if (key.first + key.second != k - s) return false;
    for (int l = 0; l <= k - s; ++l) {
        const IdentityResult id = identity_A(s, k, l);
        if (rhs_tensor.coeff(k - s - l, l) != id.lhs) return false;
        if (lhs_tensor.coeff(k - s - l, l) != id.rhs) return false;
    }
    return true;
}

}  // namespace hankelforge
