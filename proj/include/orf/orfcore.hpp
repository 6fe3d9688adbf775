#pragma once

#include <utility>
#include <vector>

#include "orf/types.hpp"

namespace orf {

struct DerivedParams {
    std::vector<double> rho;        // sqrt(1 - |a_k|^2)
    std::vector<double> rho_plus;   // (eta_{k-1}/eta_k) rho_k
    std::vector<double> rho_minus;  // (eta_k/eta_{k-1}) rho_k
    std::vector<double> e;          // normalizing factor of the k-th recurrence step
};

// Pair (phi_n(z), phi_n^*(z)) or (chi_n(z), chi_{n*}(z)).
struct OrfValue {
    std::size_t n = 0;
    CPoint z;
    Complex phi{1.0, 0.0};
    Complex phi_star{1.0, 0.0};
};

// Evaluation closer than this to the pole of a rational factor is an error.
inline constexpr double kPoleGuard = 1e-10;

DerivedParams derived_params(const ParamSeq& a, const PoleSeq& poles);

// Runs the coupled two-term recurrence from phi_0 = 1 up to order n.
OrfValue eval_orf(const ParamSeq& a, const PoleSeq& poles, std::size_t n, const CPoint& z);

// All orders 0..n at once; element k holds (phi_k, phi_k^*).
std::vector<OrfValue> eval_orf_all(const ParamSeq& a, const PoleSeq& poles, std::size_t n,
                                   const CPoint& z);

// Same recurrence, but the parameter of the last step is replaced by u.  Used for
// boundary (unimodular) last steps; the result is proportional to the
// para-orthogonal function of order n.
OrfValue eval_orf_boundary(const ParamSeq& a, const PoleSeq& poles, std::size_t n, Complex u,
                           const CPoint& z);

// chi_n and chi_{n*}, built from the alternating odd/even Blaschke products.
OrfValue eval_chi(const ParamSeq& a, const PoleSeq& poles, std::size_t n, const CPoint& z);
std::vector<OrfValue> eval_chi_all(const ParamSeq& a, const PoleSeq& poles, std::size_t n,
                                   const CPoint& z);

// Q_n^v(z) = phi_n(z) + v phi_n^*(z)
Complex eval_porf(const ParamSeq& a, const PoleSeq& poles, std::size_t n, Complex v,
                  const CPoint& z);

// u = (v + a_n) / (1 + conj(a_n) v)
Complex porf_u(Complex a_n, Complex v);
// inverse of porf_u: v = (u - a_n) / (1 - conj(a_n) u)
Complex porf_v(Complex a_n, Complex u);

// Conversion to the normalization with the unimodular factors
// z_k = -|alpha_k|/alpha_k (1 when alpha_k = 0):  b_k = z_1 ... z_k a_k.
std::pair<ParamSeq, std::vector<Complex>> normalize_standard(const ParamSeq& a,
                                                              const PoleSeq& poles);

}  // namespace orf
