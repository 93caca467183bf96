#pragma once

#include <map>
#include <utility>

#include "hankelforge/section.hpp"

namespace hankelforge {

/// Element of the tensor square of the weight-1/2 space: a sparse rational
/// combination of b_i (x) b_j with b_p = z^p (dz)^{1/2}, i, j >= 0.
///
/// Doubles as an operator from negative-power half-densities to
/// nonnegative-power ones: b_i (x) b_j extracts the coefficient at z^{-(j+1)}
/// and emits z^i (see apply_tensor).
class TensorElt {
public:
    using Key = std::pair<int, int>;

    TensorElt() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    Rational coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(int i, int j, const Rational& c);

    TensorElt& operator+=(const TensorElt& o);
    TensorElt& operator-=(const TensorElt& o);
    TensorElt& operator*=(const Rational& c);

    friend TensorElt operator+(TensorElt a, const TensorElt& b) { return a += b; }
    friend TensorElt operator-(TensorElt a, const TensorElt& b) { return a -= b; }
    friend TensorElt operator*(TensorElt a, const Rational& c) { return a *= c; }
    friend TensorElt operator*(const Rational& c, TensorElt a) { return a *= c; }
    friend bool operator==(const TensorElt& a, const TensorElt& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<Key, Rational> terms_;
};

/// Leibniz action on the tensor square, each slot at weight 1/2:
///   A- : b_i -> -i b_{i-1},  A+ : b_i -> (i+1) b_{i+1},  E : b_i -> (2i+1) b_i.
TensorElt tensor_act(Sl2Generator X, const TensorElt& t);

/// The lowest-weight vector
///   l_s = sum_{i=0}^s (-1)^i C(s,i) b_{s-i} (x) b_i,
/// annihilated by the lowering action, E-eigenvalue 2(s+1).
TensorElt lowest_weight(int s);

/// Applies a tensor, read as an operator, to a weight-1/2 section supported
/// on exponents <= -1:
///   (sum c_{ij} b_i (x) b_j) f = sum_{ij} c_{ij} f_{-(j+1)} z^i.
Section apply_tensor(const TensorElt& t, const Section& f);

/// Closed form of P_+ (d/dz)^{s-j} z^k (d/dz)^j as a tensor:
///   O_j(z^k) = sum_{i=0}^{k-s-1} (-1)^j ((i+j)!/i!) (k!/(k-s+j)!)
///              b_{(k-s-1)-i} (x) b_i,
/// valid for k > s-j; empty when k <= s.
TensorElt oj_tensor(int s, int j, int k);

}  // namespace hankelforge
