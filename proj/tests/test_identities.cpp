#include <doctest.h>

#include "hankelforge/identities.hpp"

using namespace hankelforge;

TEST_CASE("first identity on the quoted samples") {
    const IdentityResult r130 = identity_A(1, 3, 0);
    CHECK(r130.lhs == Rational(2));
    CHECK(r130.rhs == Rational(2));
    CHECK(r130.equal);

    CHECK(identity_A(1, 3, 2).equal);
    CHECK(identity_A(2, 5, 1).equal);
}

TEST_CASE("first identity parameter validation") {
    CHECK_THROWS_WITH_AS(identity_A(0, 3, 0), "identity_A: requires s >= 1",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(identity_A(1, 2, 0), "identity_A: requires k >= 2s+1",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(identity_A(1, 3, 3), "identity_A: requires 0 <= l <= k-s",
                         std::invalid_argument);
}

TEST_CASE("second identity on the quoted samples") {
    const IdentityResult r110 = identity_B(1, 1, 0);
    CHECK(r110.lhs == Rational(1));
    CHECK(r110.rhs == Rational(1));
    CHECK(r110.equal);

    CHECK(identity_B(1, 0, 1).equal);
    CHECK(identity_B(3, 2, 2).equal);

    CHECK_THROWS_WITH_AS(identity_B(2, 1, 0), "identity_B: requires i+j >= s",
                         std::invalid_argument);
}

TEST_CASE("both identity grids hold") {
    for (int s = 1; s <= 8; ++s) {
        for (int k = 2 * s + 1; k <= 2 * s + 12; ++k)
            for (int l = 0; l <= k - s; ++l) CHECK(identity_A(s, k, l).equal);
        for (int i = 0; i <= 12; ++i)
            for (int j = 0; j <= 12; ++j) {
                if (i + j < s) continue;
                CHECK(identity_B(s, i, j).equal);
            }
    }
}

TEST_CASE("identity A is the coefficient expansion of raising equivariance") {
    CHECK(equivariance_expansion_A(1, 3));
    CHECK(equivariance_expansion_A(2, 5));
    CHECK(equivariance_expansion_A(3, 7));
    for (int s = 1; s <= 4; ++s)
        for (int k = 2 * s + 1; k <= 2 * s + 8; ++k) CHECK(equivariance_expansion_A(s, k));
}
