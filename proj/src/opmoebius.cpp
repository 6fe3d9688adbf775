#include "orf/opmoebius.hpp"

#include <cmath>
#include <sstream>

#include "orf/moebius.hpp"

namespace orf {

DiagParam DiagParam::from_poles(const PoleSeq& poles, std::size_t n)
{
    if (n > 0) poles.require(n - 1, "diagonal parameter");
    DiagParam A;
    A.domain = poles.domain;
    A.eps = poles.eps;
    A.diag.reserve(n);
    for (std::size_t k = 0; k < n; ++k) A.diag.push_back(poles.alpha(k));
    return A;
}

Mat DiagParam::matrix() const
{
    Vec d(static_cast<Eigen::Index>(diag.size()));
    for (std::size_t k = 0; k < diag.size(); ++k) d(static_cast<Eigen::Index>(k)) = diag[k];
    return d.asDiagonal();
}

Mat DiagParam::adjoint() const
{
    return matrix().adjoint();
}

void DiagParam::validate() const
{
    for (std::size_t k = 0; k < diag.size(); ++k) {
        const Complex a = diag[k];
        const bool bad = domain == Domain::Circle ? std::abs(a) > 1.0 - eps : a.imag() < eps;
        if (bad) {
            std::ostringstream os;
            os.precision(17);
            os << "diagonal parameter entry " << k << " = (" << a.real() << "," << a.imag()
               << ") violates the " << domain_name(domain) << " margin " << eps;
            throw ValidationError(os.str());
        }
    }
}

namespace {

// Eigen's estimate is meaningless (it can report 1) once a pivot is exactly
// zero, so zero or non-finite pivots are treated as singular first.
double lu_rcond(const Eigen::PartialPivLU<Mat>& lu)
{
    if (lu.rows() == 0) return 1.0;
    const auto d = lu.matrixLU().diagonal().cwiseAbs();
    if (!d.allFinite() || d.minCoeff() == 0.0) return 0.0;
    const double rc = lu.rcond();
    return std::isfinite(rc) ? rc : 0.0;
}

}  // namespace

double reciprocal_condition(const Mat& M)
{
    if (M.rows() == 0) return 1.0;
    Eigen::PartialPivLU<Mat> lu(M);
    return lu_rcond(lu);
}

namespace {

void check_conditioning(const Eigen::PartialPivLU<Mat>& lu, const char* what)
{
    const double rc = lu_rcond(lu);
    if (!(rc * kMaxCondition >= 1.0)) {
        std::ostringstream os;
        os.precision(3);
        os << what << ": matrix is numerically singular (condition estimate "
           << (rc > 0 ? 1.0 / rc : INFINITY) << ")";
        throw NumericalError(os.str());
    }
}

void check_square(const DiagParam& A, const Mat& T)
{
    if (T.rows() != T.cols() || T.rows() != static_cast<Eigen::Index>(A.size())) {
        std::ostringstream os;
        os << "dimension mismatch: parameter of order " << A.size() << ", matrix " << T.rows()
           << "x" << T.cols();
        throw ValidationError(os.str());
    }
}

Vec eta_vector(const DiagParam& A)
{
    Vec e(static_cast<Eigen::Index>(A.size()));
    for (std::size_t k = 0; k < A.size(); ++k)
        e(static_cast<Eigen::Index>(k)) = scalar::eta(A.domain, A.diag[k]);
    return e;
}

}  // namespace

Mat solve_checked(const Mat& M, const Mat& B, const char* what)
{
    Eigen::PartialPivLU<Mat> lu(M);
    check_conditioning(lu, what);
    return lu.solve(B);
}

Mat right_solve_checked(const Mat& B, const Mat& M, const char* what)
{
    Eigen::PartialPivLU<Mat> lu(M.transpose());
    check_conditioning(lu, what);
    return lu.solve(B.transpose()).transpose();
}

Mat op_eta(const DiagParam& A)
{
    A.validate();
    return eta_vector(A).asDiagonal();
}

Mat conjugate_by_eta(const DiagParam& A, const Mat& T)
{
    check_square(A, T);
    const Vec e = eta_vector(A);
    Mat R = T;
    for (Eigen::Index i = 0; i < R.rows(); ++i)
        for (Eigen::Index j = 0; j < R.cols(); ++j) R(i, j) *= e(j) / e(i);
    return R;
}

Mat op_mobius_forward(const DiagParam& A, const Mat& T)
{
    check_square(A, T);
    A.validate();
    const Mat Am = A.matrix();
    const Mat Ad = Am.adjoint();
    const Mat Id = Mat::Identity(T.rows(), T.cols());
    const Mat w = A.domain == Domain::Circle ? Mat(Id - T * Ad) : Mat(T - Ad);
    const Mat core = solve_checked(w, T - Am, "operator Moebius transform");
    const Vec e = eta_vector(A);
    Mat R = core;
    for (Eigen::Index i = 0; i < R.rows(); ++i)
        for (Eigen::Index j = 0; j < R.cols(); ++j) R(i, j) *= e(i) / e(j);
    return R;
}

Mat tilde_varpi(const DiagParam& A, const Mat& T)
{
    check_square(A, T);
    const Mat Id = Mat::Identity(T.rows(), T.cols());
    if (A.domain == Domain::Circle) return Id + A.adjoint() * T;
    return Id - T;
}

Mat tilde_varpi_star(const DiagParam& A, const Mat& T)
{
    check_square(A, T);
    if (A.domain == Domain::Circle) return T + A.matrix();
    return A.matrix() - A.adjoint() * T;
}

Mat op_mobius_inverse(const DiagParam& A, const Mat& S)
{
    check_square(A, S);
    A.validate();
    const Mat core = right_solve_checked(tilde_varpi_star(A, S), tilde_varpi(A, S),
                                         "inverse operator Moebius transform");
    const Vec e = eta_vector(A);
    Mat R = core;
    for (Eigen::Index i = 0; i < R.rows(); ++i)
        for (Eigen::Index j = 0; j < R.cols(); ++j) R(i, j) *= e(j) / e(i);
    return R;
}

Mat varpi_at(const DiagParam& A, Complex z)
{
    Vec d(static_cast<Eigen::Index>(A.size()));
    for (std::size_t k = 0; k < A.size(); ++k)
        d(static_cast<Eigen::Index>(k)) = scalar::varpi(A.domain, A.diag[k], z);
    return d.asDiagonal();
}

Mat varpi_star_at(const DiagParam& A, Complex z)
{
    Vec d(static_cast<Eigen::Index>(A.size()));
    for (std::size_t k = 0; k < A.size(); ++k)
        d(static_cast<Eigen::Index>(k)) = scalar::varpi_star(A.domain, A.diag[k], z);
    return d.asDiagonal();
}

Mat varpi_of(const DiagParam& A, const Mat& T)
{
    check_square(A, T);
    const Mat Id = Mat::Identity(T.rows(), T.cols());
    if (A.domain == Domain::Circle) return Id - T * A.adjoint();
    return T - A.adjoint();
}

Mat varpi_star_of(const DiagParam& A, const Mat& T)
{
    check_square(A, T);
    return T - A.matrix();
}

Mat scalar_mobius_of(Complex alpha, const Mat& T)
{
    const Mat Id = Mat::Identity(T.rows(), T.cols());
    return solve_checked(Id - std::conj(alpha) * T, T - alpha * Id, "scalar Moebius transform");
}

}  // namespace orf
