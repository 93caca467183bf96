#include "hankelforge/sym_tensor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "hankelforge/binomial.hpp"

namespace hankelforge {

SymTensor::SymTensor(int degree) : degree_(degree) {
    if (degree < 1) throw std::invalid_argument("SymTensor: degree must be >= 1");
}

Rational SymTensor::coeff(PowerKey key) const {
    std::sort(key.begin(), key.end(), std::greater<int>());
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymTensor::add_term(PowerKey key, const Rational& c) {
    if (static_cast<int>(key.size()) != degree_)
        throw std::invalid_argument("SymTensor: key length must equal the degree");
    for (int p : key)
        if (p < 0) throw std::invalid_argument("SymTensor: powers must be nonnegative");
    if (c.is_zero()) return;
    std::sort(key.begin(), key.end(), std::greater<int>());
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SymTensor SymTensor::monomial(int degree, PowerKey key, const Rational& c) {
    SymTensor t(degree);
    t.add_term(std::move(key), c);
    return t;
}

SymTensor SymTensor::pure_power(int degree, int q, const Rational& c) {
    return monomial(degree, PowerKey(degree, q), c);
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
    if (o.degree_ != degree_) throw std::invalid_argument("SymTensor: degree mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& o) {
    if (o.degree_ != degree_) throw std::invalid_argument("SymTensor: degree mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

SymTensor& SymTensor::operator*=(const Rational& c) {
    if (c.is_zero()) {
        *this = SymTensor(degree_);
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

SymTensor sym_act(Sl2Generator X, const SymTensor& t) {
    SymTensor out(t.degree());
    for (const auto& [key, c] : t.terms()) {
        if (X == Sl2Generator::Cartan) {
            // E d_p = (2p - 2) d_p summed over the factors
            long eig = 0;
            for (int p : key) eig += 2 * p - 2;
            out.add_term(key, c * Rational(eig));
            continue;
        }
        // apply to one factor at a time; equal powers contribute identically
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i > 0 && key[i] == key[i - 1]) continue;
            int mult = static_cast<int>(std::count(key.begin(), key.end(), key[i]));
            const int p = key[i];
            long factor;
            int newp;
            if (X == Sl2Generator::Lower) {
                factor = -p;  // A- d_p = -p d_{p-1}
                newp = p - 1;
            } else {
                factor = p - 2;  // A+ d_p = (p-2) d_{p+1}
                newp = p + 1;
            }
            if (factor == 0) continue;
            PowerKey nk = key;
            nk[i] = newp;
            out.add_term(std::move(nk), c * Rational(factor * mult));
        }
    }
    return out;
}

Section project_Ps(const SymTensor& t) {
    LaurentPoly out;
    for (const auto& [key, c] : t.terms()) {
        long total = std::accumulate(key.begin(), key.end(), 0L);
        out.add_term(total, c);
    }
    return Section{HalfWeight::of_int(-t.degree()), std::move(out)};
}

Rational compute_Cs(int s) {
    if (s < 1) throw std::invalid_argument("compute_Cs: s must be >= 1");
    SymTensor t = SymTensor::pure_power(s, 0);
    for (int i = 0; i < 2 * s; ++i) t = sym_act(Sl2Generator::Raise, t);
    const PowerKey all_twos(s, 2);
    if (t.terms().size() != 1 || t.terms().begin()->first != all_twos)
        throw std::logic_error("compute_Cs: Lemma 4.1 violated");
    return t.terms().begin()->second;
}

namespace {

// valid (p, n) slots: opposite parity, 0 <= n <= min(p-3, 2s+1-p)
bool valid_slot(int s, int p, int n) {
    if (p < 4 || p > 2 * s + 1) return false;
    if (n < 0 || (p + n) % 2 == 0) return false;
    return n <= std::min(p - 3, 2 * s + 1 - p);
}

}  // namespace

RecursionTable build_recursion(int s) {
    if (s < 1) throw std::invalid_argument("build_recursion: s must be >= 1");
    RecursionTable table;
    table.s = s;
    if (s == 1) return table;  // the 4 <= p <= 2s+1 range is empty

    const Rational Cs = compute_Cs(s);
    table.entries[{4, 1}] = -Cs * Rational(s - 1) / Rational(6);
    for (int p = 4; p < 2 * s + 1; ++p) {
        for (int n = 0; n <= std::min(p - 2, 2 * s - p); ++n) {
            if (!valid_slot(s, p + 1, n)) continue;
            Rational value = -(Rational(2 * s - p - n + 2) * table.at(p, n - 1) +
                               Rational(n + 1) * table.at(p, n + 1)) /
                             Rational(p + 1);
            if (!value.is_zero()) table.entries[{p + 1, n}] = value;
        }
    }
    for (const auto& [pn, value] : table.entries)
        if (!valid_slot(s, pn.first, pn.second))
            throw std::logic_error("build_recursion: entry outside the parity/range window");
    return table;
}

SymTensor build_v(int s) {
    if (s < 1) throw std::invalid_argument("build_v: s must be >= 1");
    const Rational Cs = compute_Cs(s);
    SymTensor v(s);

    PowerKey lead;
    lead.push_back(3);
    lead.insert(lead.end(), s - 1, 2);
    v.add_term(std::move(lead), -Cs / Rational(3));

    const RecursionTable table = build_recursion(s);
    for (const auto& [pn, a] : table.entries) {
        const auto [p, n] = pn;
        const int m = (2 * s + 1 - p - n) / 2;
        PowerKey key;
        key.push_back(p);
        key.insert(key.end(), m, 2);
        key.insert(key.end(), n, 1);
        key.insert(key.end(), s - m - n - 1, 0);
        v.add_term(std::move(key), -a);
    }
    return v;
}

SymTensor section_sigma(int s, int p) {
    if (s < 1) throw std::invalid_argument("section_sigma: s must be >= 1");
    if (p < 0) throw std::invalid_argument("section_sigma: p must be >= 0");

    if (p <= 2 * s) {
        SymTensor t = SymTensor::pure_power(s, 0);
        Rational scale(1);
        for (int q = 0; q < p; ++q) {
            t = sym_act(Sl2Generator::Raise, t);
            scale *= Rational(q - 2 * s);
        }
        return t * (Rational(1) / scale);
    }

    SymTensor v = build_v(s);
    Rational coeff_sum(0);
    for (const auto& [key, c] : v.terms()) coeff_sum += c;
    SymTensor t = v;
    const int steps = p - 2 * s - 1;
    for (int q = 0; q < steps; ++q) t = sym_act(Sl2Generator::Raise, t);
    return t * (Rational(1) / (coeff_sum * Rational(factorial(steps))));
}

}  // namespace hankelforge
