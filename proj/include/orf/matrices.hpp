#pragma once

#include <optional>
#include <string>
#include <utility>

#include "orf/types.hpp"

namespace orf {

enum class RepKind {
    Hessenberg,
    Cmv,
    CmvOdd,
    CmvEven,
    HatHessenberg,
    HatCmv,
    VTrunc,
    UTrunc,
};

enum class Family { V, U };

const char* rep_kind_name(RepKind k);
RepKind parse_rep_kind(const std::string& s);

// Order-n principal block of a representation.  With a boundary value u the
// parameter a_n is replaced by u inside the factorized construction, so the
// result is unitary (for the CMV and Hessenberg kinds).
struct RepSpec {
    RepKind kind = RepKind::Cmv;
    std::size_t n = 1;
    std::optional<Complex> boundary;
};

// [[-a, rho], [rho, conj(a)]], rho = sqrt(1 - |a|^2); |a| = 1 allowed.
Mat theta_block(Complex a);

Mat build_matrix(const ParamSeq& a, const PoleSeq& poles, const RepSpec& spec);

// V^(n) = inverse Moebius of the Hessenberg block, U^(n) the same for CMV,
// with the diagonal parameter diag(alpha_0, ..., alpha_{n-1}).
Mat truncated_rep(const ParamSeq& a, const PoleSeq& poles, std::size_t n, Family family,
                  std::optional<Complex> boundary = std::nullopt);

// (tilde_varpi_star(M_n), tilde_varpi(M_n)): a pencil whose eigenvalues are
// those of truncated_rep.
std::pair<Mat, Mat> pair_rep(const ParamSeq& a, const PoleSeq& poles, std::size_t n, Family family,
                             std::optional<Complex> boundary = std::nullopt);

// Tridiagonal pencil obtained by peeling off the unitary CMV factor.
// Circle poles only.
std::pair<Mat, Mat> tridiagonal_pair(const ParamSeq& a, const PoleSeq& poles, std::size_t n,
                                     std::optional<Complex> boundary = std::nullopt);

}  // namespace orf
