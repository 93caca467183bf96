#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hankelforge/section.hpp"

namespace hankelforge {

/// A basis multiset for degree-s symmetric tensors over the vector fields
/// d_p = z^p d/dz: powers sorted descending, each >= 0, length s.
using PowerKey = std::vector<int>;

/// Element of S^s(H^{-1}): sparse rational combination of multiset monomials
/// d_{p_1} (.) ... (.) d_{p_s}. Keys are kept sorted descending and zero
/// coefficients are dropped on the fly.
class SymTensor {
public:
    explicit SymTensor(int degree);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<PowerKey, Rational>& terms() const { return terms_; }

    Rational coeff(PowerKey key) const;

    /// Adds c on the monomial given by key (sorted internally). The key must
    /// have exactly degree() entries, all nonnegative.
    void add_term(PowerKey key, const Rational& c);

    static SymTensor monomial(int degree, PowerKey key, const Rational& c = Rational(1));

    /// (d_q)^{(.) s}
    static SymTensor pure_power(int degree, int q, const Rational& c = Rational(1));

    SymTensor& operator+=(const SymTensor& o);
    SymTensor& operator-=(const SymTensor& o);
    SymTensor& operator*=(const Rational& c);

    friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
    friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
    friend SymTensor operator*(SymTensor a, const Rational& c) { return a *= c; }
    friend SymTensor operator*(const Rational& c, SymTensor a) { return a *= c; }
    friend bool operator==(const SymTensor& a, const SymTensor& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    int degree_;
    std::map<PowerKey, Rational> terms_;
};

/// Leibniz action of an sl(2) generator on S^s(H^{-1}): the weight -1 action
/// applied to one factor at a time, summed over factors.
SymTensor sym_act(Sl2Generator X, const SymTensor& t);

/// Projection P_s onto H^{-s}: each monomial d_{p_1}(.)...(.)d_{p_s} maps to
/// z^{p_1+...+p_s} (d/dz)^s.
Section project_Ps(const SymTensor& t);

/// The constant in (pi(A+))^{2s} (d_0)^{(.)s} = C_s (d_2)^{(.)s}. Raises 2s
/// times and checks the result is a single multiple of (d_2)^{(.)s}.
Rational compute_Cs(int s);

/// Coefficients A_{pn} of the total-power-(2s+1) vector: nonzero only for
/// 4 <= p <= 2s+1, n of parity opposite to p, 0 <= n <= min(p-3, 2s+1-p).
struct RecursionTable {
    int s = 0;
    std::map<std::pair<int, int>, Rational> entries;

    Rational at(int p, int n) const {
        auto it = entries.find({p, n});
        return it == entries.end() ? Rational(0) : it->second;
    }
};

/// Fills the A_{pn} table in increasing p from the base case
/// A_41 = -C_s(s-1)/6 via
///   A_{(p+1)n} = -(1/(p+1)) [ (2s-p-n+2) A_{p(n-1)} + (n+1) A_{p(n+1)} ],
/// out-of-range entries read as zero. Empty for s = 1.
RecursionTable build_recursion(int s);

/// The total-power-(2s+1) vector
///   v_{2s+1} = -(C_s/3) d_3 (.) (d_2)^{(s-1)}
///              - sum_{4<=p<=2s+1} d_p (.) sum_n A_{pn} (d_2)^m (d_1)^n (d_0)^{s-m-n-1}
/// with 2m + n = 2s+1-p. Its lowering lands on C_s (d_2)^{(.)s}.
SymTensor build_v(int s);

/// Cross-section of P_s: the unique-up-to-scale preimage chain through
/// (d_0)^{(.)s} (p <= 2s) and v_{2s+1} (p >= 2s+1), normalized so that
/// project_Ps(section_sigma(s, p)) = z^p (d/dz)^s exactly.
SymTensor section_sigma(int s, int p);

}  // namespace hankelforge
