#include "hankelforge/hankel.hpp"

#include <limits>
#include <stdexcept>

#include "hankelforge/binomial.hpp"

namespace hankelforge {

Section DiffOp::apply(const Section& f) const {
    LaurentPoly out;
    for (int j = 0; j <= order; ++j) {
        if (coeffs[j].is_zero()) continue;
        out += coeffs[j] * f.coeff.derivative(j);
    }
    return Section{f.weight, std::move(out)};
}

std::vector<std::vector<Rational>> rows_bottom_up(const OperatorWindow& w) {
    return {w.entries.rbegin(), w.entries.rend()};
}

ExactMatrix ExactMatrix::identity(int dim) {
    ExactMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool ExactMatrix::is_identity() const {
    return *this == identity(dim_);
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("ExactMatrix: vector length mismatch");
    std::vector<Rational> out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out[i] += e_[i][j] * v[j];
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("ExactMatrix: dimension mismatch");
    ExactMatrix r(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
        for (int k = 0; k < a.dim_; ++k) {
            if (a.e_[i][k].is_zero()) continue;
            for (int j = 0; j < a.dim_; ++j) r.e_[i][j] += a.e_[i][k] * b.e_[k][j];
        }
    return r;
}

std::vector<Rational> coeffs_a(int s) {
    if (s < 0) throw std::invalid_argument("coeffs_a: s must be >= 0");
    std::vector<Rational> a(s + 1);
    const Rational inv_fact(mpz_class(1), factorial(s));
    for (int j = 0; j <= s; ++j)
        a[j] = inv_fact * binom(s, j) * binom(s + j, j);
    return a;
}

DiffOp build_Ls(int s, const LaurentPoly& x) {
    if (!x.supported_in(0, std::numeric_limits<long>::max()))
        throw std::invalid_argument("symbol must be holomorphic on the disk");
    DiffOp op;
    op.order = s;
    op.coeffs.resize(s + 1);
    const auto a = coeffs_a(s);
    for (int j = 0; j <= s; ++j) op.coeffs[j] = x.derivative(s - j) * a[j];
    return op;
}

Section apply_B(int s, const LaurentPoly& x, const Section& f) {
    if (f.weight != HalfWeight::half())
        throw std::invalid_argument("apply_B: input must have weight 1/2");
    if (!f.coeff.supported_in(std::numeric_limits<long>::min(), -1))
        throw std::invalid_argument("apply_B: input must be supported on exponents <= -1");
    return proj_plus(build_Ls(s, x).apply(f));
}

OperatorWindow matrix_window(int s, const LaurentPoly& x, int rows, int cols) {
    OperatorWindow w;
    w.s = s;
    w.rows = rows;
    w.cols = cols;
    w.entries.assign(rows, std::vector<Rational>(cols));
    const DiffOp op = build_Ls(s, x);
    for (int n = 0; n < cols; ++n) {
        Section image = proj_plus(op.apply(section_monomial(HalfWeight::half(), -(n + 1))));
        for (int m = 0; m < rows; ++m) w.entries[m][n] = image.coeff.coeff(m);
    }
    return w;
}

ExactMatrix build_Ms(int s) {
    ExactMatrix m(s + 1);
    const mpz_class top = factorial(2 * s + 1);
    for (int i = 0; i <= s; ++i)
        for (int j = 0; j <= s; ++j) {
            Rational v = Rational(factorial(i + j), factorial(i)) * Rational(top, factorial(s + j + 1));
            m.at(i, j) = j % 2 == 0 ? v : -v;
        }
    return m;
}

ExactMatrix build_Ns(int s) {
    ExactMatrix m(s + 1);
    for (int i = 0; i <= s; ++i)
        for (int j = 0; j <= s; ++j) m.at(i, j) = binom(i + j, i);
    return m;
}

ExactMatrix build_Ds(int s) {
    ExactMatrix m(s + 1);
    const mpz_class top = factorial(2 * s + 1);
    for (int j = 0; j <= s; ++j) {
        Rational v = Rational(factorial(j) * top, factorial(s + j + 1));
        m.at(j, j) = j % 2 == 0 ? v : -v;
    }
    return m;
}

namespace {

ExactMatrix signed_binom_matrix(int s, bool transpose, bool with_sign) {
    ExactMatrix m(s + 1);
    for (int i = 0; i <= s; ++i)
        for (int j = 0; j <= s; ++j) {
            Rational v = transpose ? binom(j, i) : binom(i, j);
            if (with_sign && (i + j) % 2 != 0) v = -v;
            m.at(i, j) = v;
        }
    return m;
}

}  // namespace

ExactMatrix pascal_lower(int s) { return signed_binom_matrix(s, false, false); }
ExactMatrix pascal_upper(int s) { return signed_binom_matrix(s, true, false); }
ExactMatrix pascal_lower_inv(int s) { return signed_binom_matrix(s, false, true); }
ExactMatrix pascal_upper_inv(int s) { return signed_binom_matrix(s, true, true); }

SolveTrace solve_for_a_trace(int s) {
    if (s < 0) throw std::invalid_argument("solve_for_a: s must be >= 0");
    SolveTrace trace;
    trace.rhs.resize(s + 1);
    for (int i = 0; i <= s; ++i) {
        Rational v = binom(s, i);
        trace.rhs[i] = i % 2 == 0 ? v : -v;
    }
    trace.after_L = pascal_lower_inv(s).apply(trace.rhs);
    trace.after_U = pascal_upper_inv(s).apply(trace.after_L);
    trace.solution.resize(s + 1);
    const ExactMatrix d = build_Ds(s);
    for (int j = 0; j <= s; ++j) {
        if (d.at(j, j).is_zero()) throw std::logic_error("solve_for_a: singular diagonal");
        trace.solution[j] = trace.after_U[j] / d.at(j, j);
    }
    return trace;
}

std::vector<Rational> solve_for_a(int s) {
    SolveTrace trace = solve_for_a_trace(s);
    for (int j = 0; j <= s; ++j) {
        Rational lead = binom(s + j, j);
        if (j % 2 != 0) lead = -lead;
        if (trace.after_L[j] != lead)
            throw std::logic_error("solve_for_a: L-stage closed form violated");
        if (trace.after_U[j] != lead * binom(2 * s + 1, s + j + 1))
            throw std::logic_error("solve_for_a: U-stage closed form violated");
    }
    return trace.solution;
}

TensorElt b_as_tensor(int s, const LaurentPoly& x) {
    if (!x.supported_in(0, std::numeric_limits<long>::max()))
        throw std::invalid_argument("symbol must be holomorphic on the disk");
    const auto a = coeffs_a(s);
    TensorElt out;
    for (const auto& [k, c] : x.terms()) {
        if (k <= s) continue;  // inside the kernel, no image
        for (int j = 0; j <= s; ++j) out += (a[j] * c) * oj_tensor(s, j, static_cast<int>(k));
    }
    return out;
}

}  // namespace hankelforge
