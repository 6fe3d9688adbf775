#pragma once

#include "orf/types.hpp"

namespace orf {

// Diagonal parameter matrix A = diag(alpha_0, ..., alpha_{n-1}).
struct DiagParam {
    Domain domain = Domain::Circle;
    std::vector<Complex> diag;
    double eps = 1e-8;

    DiagParam() = default;
    DiagParam(std::vector<Complex> d, Domain dom = Domain::Circle, double margin = 1e-8)
        : domain(dom), diag(std::move(d)), eps(margin) {}

    // First n entries alpha_0..alpha_{n-1} of a pole sequence.
    static DiagParam from_poles(const PoleSeq& poles, std::size_t n);

    std::size_t size() const { return diag.size(); }
    Mat matrix() const;
    Mat adjoint() const;
    void validate() const;
};

// Matrices with reciprocal condition number below this are treated as singular.
inline constexpr double kMaxCondition = 1e12;

// M^{-1} B and B M^{-1} through LU with partial pivoting.
Mat solve_checked(const Mat& M, const Mat& B, const char* what);
Mat right_solve_checked(const Mat& B, const Mat& M, const char* what);
double reciprocal_condition(const Mat& M);

Mat op_eta(const DiagParam& A);

// Circle:  zeta_A(T) = eta_A (1 - T A^+)^{-1} (T - A) eta_A^{-1}
// Line:    zeta_A(T) = eta_A (T - A^+)^{-1} (T - A) eta_A^{-1}
Mat op_mobius_forward(const DiagParam& A, const Mat& T);
// Circle:  eta_A^{-1} (S + A)(1 + A^+ S)^{-1} eta_A
// Line:    eta_A^{-1} (A - A^+ S)(1 - S)^{-1} eta_A
Mat op_mobius_inverse(const DiagParam& A, const Mat& S);

// eta_A^{-1} T eta_A
Mat conjugate_by_eta(const DiagParam& A, const Mat& T);

// Pencil factors: tilde_varpi(T) and tilde_varpi_star(T) so that
// op_mobius_inverse(A, M) is similar to tilde_varpi_star(M) tilde_varpi(M)^{-1}.
Mat tilde_varpi(const DiagParam& A, const Mat& T);
Mat tilde_varpi_star(const DiagParam& A, const Mat& T);

// varpi_A(z) and varpi*_A(z) at a scalar point, as diagonal matrices.
Mat varpi_at(const DiagParam& A, Complex z);
Mat varpi_star_at(const DiagParam& A, Complex z);

// Matrix-argument factors varpi_A(T), varpi*_A(T), used by identity checks.
Mat varpi_of(const DiagParam& A, const Mat& T);
Mat varpi_star_of(const DiagParam& A, const Mat& T);

// Scalar-parameter map zeta_alpha(T) = (1 - conj(alpha) T)^{-1} (T - alpha) on the circle.
Mat scalar_mobius_of(Complex alpha, const Mat& T);

}  // namespace orf
