#include <doctest.h>

#include <numeric>
#include <random>

#include "hankelforge/binomial.hpp"
#include "hankelforge/sym_tensor.hpp"

using namespace hankelforge;

namespace {

// independent oracle for C_s: push z^0 up the weight -s chain instead of
// raising the tensor, giving prod_{q=0}^{2s-1} (q - 2s) = (2s)!
Rational chain_oracle_Cs(int s) {
    Rational c(1);
    for (int q = 0; q < 2 * s; ++q) c *= Rational(q - 2 * s);
    return c;
}

SymTensor random_sym(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<int> power(0, 6);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> count(1, 4);
    SymTensor t(degree);
    const int n = count(rng);
    for (int term = 0; term < n; ++term) {
        PowerKey key(degree);
        for (int& p : key) p = power(rng);
        t.add_term(std::move(key), Rational(coeff(rng)));
    }
    return t;
}

}  // namespace

TEST_CASE("Leibniz action on symmetric monomials") {
    // raising (d_0)^{(.)2} gives -4 d_1 (.) d_0
    SymTensor d0d0 = SymTensor::pure_power(2, 0);
    CHECK(sym_act(Sl2Generator::Raise, d0d0) ==
          SymTensor::monomial(2, {1, 0}, Rational(-4)));

    for (int s = 1; s <= 6; ++s)
        CHECK(sym_act(Sl2Generator::Raise, SymTensor::pure_power(s, 2)).is_zero());

    CHECK(sym_act(Sl2Generator::Cartan, SymTensor::monomial(2, {3, 2})) ==
          SymTensor::monomial(2, {3, 2}, Rational(6)));
}

TEST_CASE("projection onto H^{-s}") {
    CHECK(project_Ps(SymTensor::monomial(2, {3, 2})) ==
          section_monomial(HalfWeight::of_int(-2), 5));
    CHECK(project_Ps(SymTensor::pure_power(3, 0)) ==
          section_monomial(HalfWeight::of_int(-3), 0));
    SymTensor cancels = SymTensor::monomial(2, {4, 1});
    cancels -= SymTensor::monomial(2, {3, 2});
    CHECK(project_Ps(cancels).is_zero());
}

TEST_CASE("C_s from repeated raising") {
    CHECK(compute_Cs(1) == Rational(2));
    CHECK(compute_Cs(2) == Rational(24));
    CHECK(compute_Cs(3) == Rational(720));
    for (int s = 1; s <= 8; ++s) {
        CHECK(compute_Cs(s) == chain_oracle_Cs(s));
        CHECK(compute_Cs(s) == Rational(factorial(2 * s)));
    }
}

TEST_CASE("recursion table values and shape") {
    CHECK(build_recursion(1).entries.empty());

    const RecursionTable t2 = build_recursion(2);
    CHECK(t2.at(4, 1) == Rational(-4));
    CHECK(t2.at(5, 0) == Rational(4, 5));
    CHECK(t2.entries.size() == 2);

    const RecursionTable t3 = build_recursion(3);
    CHECK(t3.at(4, 1) == Rational(-240));  // -C_3 (s-1)/6 = -2*720/6

    for (int s = 2; s <= 8; ++s) {
        const RecursionTable table = build_recursion(s);
        for (const auto& [pn, value] : table.entries) {
            const auto [p, n] = pn;
            CHECK(!value.is_zero());
            CHECK(p >= 4);
            CHECK(p <= 2 * s + 1);
            CHECK((p + n) % 2 == 1);
            CHECK(n >= 0);
            CHECK(n <= std::min(p - 3, 2 * s + 1 - p));
        }
    }
}

TEST_CASE("v vector matches the s = 2 display and the s = 1 degenerate case") {
    // v_5 = -8 d_3.d_2 + 4 d_4.d_1 - 4/5 d_5.d_0
    const SymTensor v5 = build_v(2);
    CHECK(v5.terms().size() == 3);
    CHECK(v5.coeff({3, 2}) == Rational(-8));
    CHECK(v5.coeff({4, 1}) == Rational(4));
    CHECK(v5.coeff({5, 0}) == Rational(-4, 5));

    const SymTensor v3 = build_v(1);
    CHECK(v3.terms().size() == 1);
    CHECK(v3.coeff({3}) == Rational(-2, 3));
}

TEST_CASE("lowering v meets the raising chain: condition (cond)") {
    for (int s = 1; s <= 8; ++s) {
        const SymTensor lowered = sym_act(Sl2Generator::Lower, build_v(s));
        CHECK(lowered == SymTensor::pure_power(s, 2, compute_Cs(s)));
    }
}

TEST_CASE("v keys: total power 2s+1, parts below the head at most 2") {
    for (int s = 1; s <= 8; ++s) {
        const SymTensor v = build_v(s);
        for (const auto& [key, value] : v.terms()) {
            CHECK(std::accumulate(key.begin(), key.end(), 0L) == 2 * s + 1);
            CHECK(key.front() >= 3);
            CHECK(key.front() <= 2 * s + 1);
            for (std::size_t i = 1; i < key.size(); ++i) CHECK(key[i] <= 2);
        }
    }
}

TEST_CASE("cross-section is a right inverse of the projection") {
    CHECK(section_sigma(3, 0) == SymTensor::pure_power(3, 0));
    CHECK(section_sigma(1, 1) == SymTensor::monomial(1, {1}));
    // sigma(2, 5) is v_5 normalized by its coefficient sum -24/5
    const SymTensor sigma25 = section_sigma(2, 5);
    CHECK(sigma25 == build_v(2) * Rational(-5, 24));

    for (int s = 1; s <= 6; ++s)
        for (int p = 0; p <= 2 * s + 4; ++p)
            CHECK(project_Ps(section_sigma(s, p)) ==
                  section_monomial(HalfWeight::of_int(-s), p));
}

TEST_CASE("raising chain beyond the splice") {
    for (int s = 1; s <= 5; ++s)
        for (int p = 2 * s + 1; p <= 2 * s + 5; ++p)
            CHECK(sym_act(Sl2Generator::Raise, section_sigma(s, p)) ==
                  section_sigma(s, p + 1) * Rational(p - 2 * s));
}

TEST_CASE("projection intertwines the actions") {
    std::mt19937 rng(424242);
    for (int s = 1; s <= 5; ++s)
        for (int round = 0; round < 15; ++round) {
            const SymTensor t = random_sym(rng, s);
            for (Sl2Generator X :
                 {Sl2Generator::Lower, Sl2Generator::Raise, Sl2Generator::Cartan})
                CHECK(project_Ps(sym_act(X, t)) == act_sl2(X, project_Ps(t)));
        }
}
