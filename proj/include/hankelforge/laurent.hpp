#pragma once

#include <map>

#include "hankelforge/rational.hpp"

namespace hankelforge {

/// Sparse Laurent polynomial: a finite map from integer exponents (negative
/// allowed) to nonzero rational coefficients. Zero coefficients are never
/// stored, so equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(long exp, const Rational& c = Rational(1)) {
        LaurentPoly p;
        p.set_coeff(exp, c);
        return p;
    }
    static LaurentPoly constant(const Rational& c) { return monomial(0, c); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Rational>& terms() const { return terms_; }

    Rational coeff(long exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void set_coeff(long exp, const Rational& c) {
        if (c.is_zero())
            terms_.erase(exp);
        else
            terms_[exp] = c;
    }

    void add_term(long exp, const Rational& c) {
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(exp, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    long min_exp() const;  // throws on the zero polynomial
    long max_exp() const;

    /// True when every exponent e satisfies lo <= e <= hi.
    bool supported_in(long lo, long hi) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly& operator*=(const Rational& c);

    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// k-th formal derivative: z^e maps to e(e-1)...(e-k+1) z^{e-k}.
    LaurentPoly derivative(unsigned k = 1) const;

    /// Multiplication by z^n (n may be negative).
    LaurentPoly shifted(long n) const;

private:
    std::map<long, Rational> terms_;
};

}  // namespace hankelforge
