#include "hankelforge/section.hpp"

#include <stdexcept>

namespace hankelforge {

Section act_sl2(Sl2Generator X, const Section& u) {
    const int w = u.weight.twice;  // 2m
    LaurentPoly out;
    switch (X) {
        case Sl2Generator::Lower:
            out = -u.coeff.derivative();
            break;
        case Sl2Generator::Raise:
            // z^2 f' + 2m z f; on z^p this is (p + 2m) z^{p+1}
            for (const auto& [e, c] : u.coeff.terms())
                out.add_term(e + 1, c * Rational(e + w));
            break;
        case Sl2Generator::Cartan:
            // 2z f' + 2m f; on z^p this is (2p + 2m) z^p
            for (const auto& [e, c] : u.coeff.terms())
                out.add_term(e, c * Rational(2 * e + w));
            break;
    }
    return Section{u.weight, std::move(out)};
}

namespace {

void require_half_weight(const Section& u) {
    if (u.weight != HalfWeight::half())
        throw std::invalid_argument("projection defined only on weight-1/2 sections");
}

}  // namespace

Section proj_plus(const Section& u) {
    require_half_weight(u);
    LaurentPoly out;
    for (const auto& [e, c] : u.coeff.terms())
        if (e >= 0) out.set_coeff(e, c);
    return Section{u.weight, std::move(out)};
}

Section proj_minus(const Section& u) {
    require_half_weight(u);
    LaurentPoly out;
    for (const auto& [e, c] : u.coeff.terms())
        if (e <= -1) out.set_coeff(e, c);
    return Section{u.weight, std::move(out)};
}

Section lie_half(const Section& x, const Section& u) {
    if (x.weight != HalfWeight::of_int(-1))
        throw std::invalid_argument("lie_half: vector-field argument must have weight -1");
    if (u.weight != HalfWeight::half())
        throw std::invalid_argument("lie_half: density argument must have weight 1/2");
    LaurentPoly out = x.coeff.derivative() * Rational(1, 2) * u.coeff;
    out += x.coeff * u.coeff.derivative();
    return Section{HalfWeight::half(), std::move(out)};
}

}  // namespace hankelforge
