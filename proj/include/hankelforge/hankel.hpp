#pragma once

#include <vector>

#include "hankelforge/laurent.hpp"
#include "hankelforge/section.hpp"
#include "hankelforge/tensor_rep.hpp"

namespace hankelforge {

/// Linear differential operator sum_j c_j(z) (d/dz)^j of order s, stored as
/// the s+1 coefficient functions c_0..c_s (zero polynomials allowed).
struct DiffOp {
    int order = 0;
    std::vector<LaurentPoly> coeffs;  // size order+1

    /// sum_j c_j f^{(j)}; the weight of f is carried through unchanged.
    Section apply(const Section& f) const;
};

/// Finite window of the operator matrix: entry[m][n] is the coefficient of
/// z^m in the image of the basis vector z^{-(n+1)} (dz)^{1/2}. Row m = 0 is
/// stored first; figures that draw row 0 at the bottom compare after a
/// vertical flip (see rows_bottom_up).
struct OperatorWindow {
    int s = 0;
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Rational>> entries;

    friend bool operator==(const OperatorWindow&, const OperatorWindow&) = default;
};

std::vector<std::vector<Rational>> rows_bottom_up(const OperatorWindow& w);

/// Small dense square matrix of exact rationals.
class ExactMatrix {
public:
    explicit ExactMatrix(int dim) : dim_(dim), e_(dim, std::vector<Rational>(dim)) {}

    int dim() const { return dim_; }
    Rational& at(int i, int j) { return e_[i][j]; }
    const Rational& at(int i, int j) const { return e_[i][j]; }

    static ExactMatrix identity(int dim);
    bool is_identity() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    int dim_;
    std::vector<std::vector<Rational>> e_;
};

/// Coefficients a_j = (1/s!) C(s,j) C(s+j,j), j = 0..s.
std::vector<Rational> coeffs_a(int s);

/// The order-s operator L_s(x) = sum_j a_j x^{(s-j)} (d/dz)^j for a symbol
/// x(z) holomorphic on the disk (exponents >= 0).
DiffOp build_Ls(int s, const LaurentPoly& x);

/// B_{s+1}(x) f = P_+ L_s(x) f for f of weight 1/2 supported on
/// exponents <= -1.
Section apply_B(int s, const LaurentPoly& x, const Section& f);

/// Window of B_{s+1}(x) computed column by column through apply_B.
OperatorWindow matrix_window(int s, const LaurentPoly& x, int rows, int cols);

/// The (s+1)x(s+1) matrices of the coefficient linear system:
///   M_s = ((-1)^j ((i+j)!/i!) ((2s+1)!/(s+j+1)!)),
///   N_s = (C(i+j,i)),   D_s = diag((-1)^j j! (2s+1)!/(s+j+1)!),
/// with M_s = N_s D_s exactly.
ExactMatrix build_Ms(int s);
ExactMatrix build_Ns(int s);
ExactMatrix build_Ds(int s);

/// Pascal factors of N_s = L_s U_s and their signed-binomial inverses:
///   L = (C(i,j)), U = (C(j,i)),
///   L^{-1} = ((-1)^{i+j} C(i,j)), U^{-1} = ((-1)^{i+j} C(j,i)).
ExactMatrix pascal_lower(int s);
ExactMatrix pascal_upper(int s);
ExactMatrix pascal_lower_inv(int s);
ExactMatrix pascal_upper_inv(int s);

/// Every stage of the factored solve of M_s a = ((-1)^i C(s,i)).
struct SolveTrace {
    std::vector<Rational> rhs;        // ((-1)^i C(s,i))
    std::vector<Rational> after_L;    // L^{-1} rhs
    std::vector<Rational> after_U;    // U^{-1} L^{-1} rhs
    std::vector<Rational> solution;   // D^{-1} U^{-1} L^{-1} rhs
};

SolveTrace solve_for_a_trace(int s);

/// Solves M_s a = ((-1)^i C(s,i)) via a = D^{-1} U^{-1} L^{-1} rhs and checks
/// the two intermediate vectors against their closed forms
///   (L^{-1} rhs)_j = (-1)^j C(s+j,j),
///   (U^{-1} L^{-1} rhs)_j = (-1)^j C(s+j,j) C(2s+1, s+j+1).
std::vector<Rational> solve_for_a(int s);

/// B_{s+1}(x) as an element of the tensor square: sum over the monomials
/// z^k of x with k >= s+1 of sum_j a_j O_j(z^k). Monomials with k <= s
/// contribute nothing; those with s+1 <= k <= 2s cancel to zero.
TensorElt b_as_tensor(int s, const LaurentPoly& x);

}  // namespace hankelforge
