#include "orf/matrices.hpp"

#include <cmath>
#include <sstream>

#include "orf/opmoebius.hpp"

namespace orf {

namespace {

const char* const kKindNames[] = {"HESSENBERG", "CMV", "CMV_ODD", "CMV_EVEN",
                                  "HAT_HESSENBERG", "HAT_CMV", "V_TRUNC", "U_TRUNC"};

double rho_of(Complex a)
{
    return std::sqrt(std::max(0.0, 1.0 - std::norm(a)));
}

// Parameter sequence as seen by an order-n construction: a_1..a_n, or
// a_1..a_{n-1} followed by the boundary value.
std::vector<Complex> effective_params(const ParamSeq& a, std::size_t n,
                                      const std::optional<Complex>& boundary)
{
    if (n == 0) throw ValidationError("representation order must be at least 1");
    a.validate();
    std::vector<Complex> p;
    if (boundary) {
        if (std::abs(std::abs(*boundary) - 1.0) > 1e-10) {
            std::ostringstream os;
            os.precision(17);
            os << "boundary value has modulus " << std::abs(*boundary) << ", expected 1";
            throw ValidationError(os.str());
        }
        a.require(n - 1, "boundary representation");
        p.assign(a.a.begin(), a.a.begin() + static_cast<long>(n - 1));
        p.push_back(*boundary);
    } else {
        a.require(n, "representation");
        p.assign(a.a.begin(), a.a.begin() + static_cast<long>(n));
    }
    return p;
}

// Block-diagonal factor holding Theta_k for k = first, first+2, ...; the
// leading 1x1 identity block when first == 2.  A block straddling the last
// row is cut to its upper-left entry -a_k.
Mat block_factor(const std::vector<Complex>& p, std::size_t first)
{
    const auto n = static_cast<Eigen::Index>(p.size());
    Mat M = Mat::Zero(n, n);
    if (first == 2) M(0, 0) = 1.0;
    for (std::size_t k = first; k <= p.size(); k += 2) {
        const auto r = static_cast<Eigen::Index>(k - 1);
        const Complex ak = p[k - 1];
        M(r, r) = -ak;
        if (r + 1 < n) {
            const double rk = rho_of(ak);
            M(r, r + 1) = rk;
            M(r + 1, r) = rk;
            M(r + 1, r + 1) = std::conj(ak);
        }
    }
    return M;
}

// Theta_1 ... Theta_{n-1} diag(1, ..., 1, -a_n), applied as column rotations.
Mat hessenberg_from(const std::vector<Complex>& p)
{
    const auto n = static_cast<Eigen::Index>(p.size());
    Mat H = Mat::Identity(n, n);
    for (Eigen::Index k = 1; k < n; ++k) {
        const Complex ak = p[static_cast<std::size_t>(k - 1)];
        const double rk = rho_of(ak);
        const Vec c0 = H.col(k - 1);
        const Vec c1 = H.col(k);
        H.col(k - 1) = -ak * c0 + rk * c1;
        H.col(k) = rk * c0 + std::conj(ak) * c1;
    }
    H.col(n - 1) *= -p.back();
    return H;
}

DiagParam diag_param(const PoleSeq& poles, std::size_t n)
{
    poles.validate();
    return DiagParam::from_poles(poles, n);
}

Mat base_matrix(const std::vector<Complex>& p, Family family)
{
    if (family == Family::V) return hessenberg_from(p);
    return block_factor(p, 1) * block_factor(p, 2);
}

}  // namespace

const char* rep_kind_name(RepKind k)
{
    return kKindNames[static_cast<int>(k)];
}

RepKind parse_rep_kind(const std::string& s)
{
    for (int i = 0; i < 8; ++i)
        if (s == kKindNames[i]) return static_cast<RepKind>(i);
    throw ValidationError("unknown representation kind '" + s + "'");
}

Mat theta_block(Complex a)
{
    Mat T(2, 2);
    const double r = rho_of(a);
    T << -a, r, r, std::conj(a);
    return T;
}

Mat build_matrix(const ParamSeq& a, const PoleSeq& poles, const RepSpec& spec)
{
    const std::vector<Complex> p = effective_params(a, spec.n, spec.boundary);
    switch (spec.kind) {
    case RepKind::Hessenberg:
        return hessenberg_from(p);
    case RepKind::Cmv:
        return block_factor(p, 1) * block_factor(p, 2);
    case RepKind::CmvOdd:
        return block_factor(p, 1);
    case RepKind::CmvEven:
        return block_factor(p, 2);
    case RepKind::HatHessenberg:
        return conjugate_by_eta(diag_param(poles, spec.n), hessenberg_from(p));
    case RepKind::HatCmv:
        return conjugate_by_eta(diag_param(poles, spec.n), base_matrix(p, Family::U));
    case RepKind::VTrunc:
        return op_mobius_inverse(diag_param(poles, spec.n), hessenberg_from(p));
    case RepKind::UTrunc:
        return op_mobius_inverse(diag_param(poles, spec.n), base_matrix(p, Family::U));
    }
    throw ValidationError("unsupported representation kind");
}

Mat truncated_rep(const ParamSeq& a, const PoleSeq& poles, std::size_t n, Family family,
                  std::optional<Complex> boundary)
{
    RepSpec s;
    s.kind = family == Family::V ? RepKind::VTrunc : RepKind::UTrunc;
    s.n = n;
    s.boundary = boundary;
    return build_matrix(a, poles, s);
}

std::pair<Mat, Mat> pair_rep(const ParamSeq& a, const PoleSeq& poles, std::size_t n, Family family,
                             std::optional<Complex> boundary)
{
    const std::vector<Complex> p = effective_params(a, n, boundary);
    const DiagParam A = diag_param(poles, n);
    const Mat M = base_matrix(p, family);
    return {tilde_varpi_star(A, M), tilde_varpi(A, M)};
}

std::pair<Mat, Mat> tridiagonal_pair(const ParamSeq& a, const PoleSeq& poles, std::size_t n,
                                     std::optional<Complex> boundary)
{
    if (poles.domain != Domain::Circle)
        throw ValidationError("tridiagonal pair is implemented for circle poles only");
    const std::vector<Complex> p = effective_params(a, n, boundary);
    const Mat Am = diag_param(poles, n).matrix();
    const Mat Ad = Am.adjoint();
    const Mat Co = block_factor(p, 1);
    const Mat Ce = block_factor(p, 2);
    // Whichever factor is unitary is moved to the other side of the pencil.
    // With a boundary value both factors are unitary.
    if (boundary || n % 2 == 1) {
        const Mat Ced = Ce.adjoint();
        return {Co + Am * Ced, Ced + Ad * Co};
    }
    const Mat Cod = Co.adjoint();
    return {Ce + Am * Cod, Cod + Ad * Ce};
}

}  // namespace orf
