#include "hankelforge/forms.hpp"

#include <stdexcept>

#include "hankelforge/binomial.hpp"
#include "hankelforge/hankel.hpp"

namespace hankelforge {

Section transvect(int s, const LaurentPoly& f, const LaurentPoly& g, bool from_j1) {
    if (s < 0) throw std::invalid_argument("transvect: s must be >= 0");
    LaurentPoly out;
    for (int j = from_j1 ? 1 : 0; j <= s; ++j) {
        Rational c = binom(s, j) * binom(s, j);
        if (j % 2 != 0) c = -c;
        out += c * (f.derivative(s - j) * g.derivative(j));
    }
    return Section{HalfWeight::of_int(s + 1), std::move(out)};
}

Rational residue_pair(const Section& u) {
    if (u.weight != HalfWeight::of_int(1))
        throw std::invalid_argument("residue_pair: defined only on weight-1 densities");
    return u.coeff.coeff(-1);
}

Section conj_symbol(int s, const LaurentPoly& x) {
    LaurentPoly out;
    for (const auto& [k, c] : x.terms()) {
        Rational v = s % 2 == 0 ? c : -c;
        out.add_term(2 * s - k, v);
    }
    return Section{HalfWeight::of_int(-s), std::move(out)};
}

Rational form_K(int s, const LaurentPoly& x, const LaurentPoly& f, const LaurentPoly& g) {
    const Section xbar = conj_symbol(s, x);
    const Section tau = transvect(s, f, g);
    Section density{HalfWeight::of_int(1), xbar.coeff * tau.coeff};
    return residue_pair(density);
}

Rational form_Ktilde(int s, const LaurentPoly& x, int i, int j) {
    return b_as_tensor(s, x).coeff(i, j);
}

BilinearReport adjointness_report(int s, int k_max) {
    if (s < 0) throw std::invalid_argument("adjointness_report: s must be >= 0");
    BilinearReport report;
    report.s = s;
    for (int k = 2 * s + 1; k <= k_max; ++k) {
        const LaurentPoly symbol = LaurentPoly::monomial(k);
        const TensorElt b = b_as_tensor(s, symbol);
        for (int a = 0; a <= k - s - 1; ++a) {
            const int bexp = k - s - 1 - a;
            AdjointSample sample;
            sample.k = k;
            sample.i = bexp;
            sample.j = a;
            sample.K = form_K(s, symbol, LaurentPoly::monomial(a), LaurentPoly::monomial(bexp));
            sample.Ktilde = b.coeff(sample.i, sample.j);
            report.samples.push_back(sample);
        }
    }
    for (const auto& sample : report.samples) {
        if (!sample.K.is_zero()) {
            report.lambda = sample.Ktilde / sample.K;
            break;
        }
    }
    if (!report.lambda) {
        // every K vanished; the forms agree only if every Ktilde does too
        for (const auto& sample : report.samples)
            if (!sample.Ktilde.is_zero()) {
                report.offending = sample;
                return report;
            }
        return report;
    }
    for (const auto& sample : report.samples) {
        if (sample.Ktilde != *report.lambda * sample.K) {
            report.offending = sample;
            report.lambda.reset();
            return report;
        }
    }
    return report;
}

}  // namespace hankelforge
