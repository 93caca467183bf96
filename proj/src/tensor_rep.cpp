#include "hankelforge/tensor_rep.hpp"

#include <limits>
#include <stdexcept>

#include "hankelforge/binomial.hpp"

namespace hankelforge {

void TensorElt::add_term(int i, int j, const Rational& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("TensorElt: indices must be nonnegative");
    if (c.is_zero()) return;
    auto it = terms_.find({i, j});
    if (it == terms_.end()) {
        terms_.emplace(Key{i, j}, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorElt& TensorElt::operator+=(const TensorElt& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorElt& TensorElt::operator-=(const TensorElt& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

TensorElt& TensorElt::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

TensorElt tensor_act(Sl2Generator X, const TensorElt& t) {
    TensorElt out;
    for (const auto& [key, c] : t.terms()) {
        const auto [i, j] = key;
        switch (X) {
            case Sl2Generator::Lower:
                if (i > 0) out.add_term(i - 1, j, c * Rational(-i));
                if (j > 0) out.add_term(i, j - 1, c * Rational(-j));
                break;
            case Sl2Generator::Raise:
                out.add_term(i + 1, j, c * Rational(i + 1));
                out.add_term(i, j + 1, c * Rational(j + 1));
                break;
            case Sl2Generator::Cartan:
                out.add_term(i, j, c * Rational(2 * i + 1 + 2 * j + 1));
                break;
        }
    }
    return out;
}

TensorElt lowest_weight(int s) {
    if (s < 0) throw std::invalid_argument("lowest_weight: s must be >= 0");
    TensorElt t;
    for (int i = 0; i <= s; ++i) {
        Rational c = binom(s, i);
        t.add_term(s - i, i, i % 2 == 0 ? c : -c);
    }
    return t;
}

Section apply_tensor(const TensorElt& t, const Section& f) {
    if (f.weight != HalfWeight::half())
        throw std::invalid_argument("apply_tensor: input must have weight 1/2");
    if (!f.coeff.supported_in(std::numeric_limits<long>::min(), -1))
        throw std::invalid_argument("operator domain is H^{1/2}(Delta*)");
    LaurentPoly out;
    for (const auto& [key, c] : t.terms()) {
        const auto [i, j] = key;
        Rational fcoeff = f.coeff.coeff(-(j + 1));
        if (!fcoeff.is_zero()) out.add_term(i, c * fcoeff);
    }
    return Section{HalfWeight::half(), std::move(out)};
}

TensorElt oj_tensor(int s, int j, int k) {
    if (s < 0 || j < 0 || j > s) throw std::invalid_argument("oj_tensor: need 0 <= j <= s");
    if (k <= s - j) throw std::invalid_argument("oj_tensor: Lemma 5.1 hypothesis violated");
    TensorElt t;
    const Rational deriv(factorial(k), factorial(k - s + j));  // k!/(k-s+j)!
    for (int i = 0; i <= k - s - 1; ++i) {
        Rational c = Rational(factorial(i + j), factorial(i)) * deriv;
        t.add_term(k - s - 1 - i, i, j % 2 == 0 ? c : -c);
    }
    return t;
}

}  // namespace hankelforge
