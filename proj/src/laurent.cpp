#include "hankelforge/laurent.hpp"

#include <stdexcept>

#include "hankelforge/binomial.hpp"

namespace hankelforge {

long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("LaurentPoly: zero polynomial has no support");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("LaurentPoly: zero polynomial has no support");
    return terms_.rbegin()->first;
}

bool LaurentPoly::supported_in(long lo, long hi) const {
    return terms_.empty() || (min_exp() >= lo && max_exp() <= hi);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::derivative(unsigned k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        mpz_class f = falling(mpz_class(e), k);
        if (f != 0) r.add_term(e - static_cast<long>(k), c * Rational(f));
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(long n) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + n, c);
    return r;
}

}  // namespace hankelforge
