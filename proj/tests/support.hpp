// Shared helpers for the unit and acceptance tests: seeded random inputs and
// residuals of identities that the library does not compute itself.
#pragma once

#include <cmath>
#include <random>

#include "orf/moebius.hpp"
#include "orf/opmoebius.hpp"
#include "orf/orfcore.hpp"
#include "orf/realline.hpp"
#include "orf/spectral.hpp"

namespace orf::testing {

class Rng {
public:
    explicit Rng(unsigned seed) : g_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(g_); }
    Complex normal() { return {n_(g_), n_(g_)}; }

    // Uniform in the disk of radius r.
    Complex disk(double r)
    {
        return std::polar(r * std::sqrt(uniform()), uniform(-M_PI, M_PI));
    }
    Complex unimodular() { return std::polar(1.0, uniform(-M_PI, M_PI)); }
    Complex upper(double lo = 0.2, double hi = 3.0) { return {uniform(-2.0, 2.0), uniform(lo, hi)}; }

    std::vector<Complex> disk_list(std::size_t n, double r)
    {
        std::vector<Complex> v(n);
        for (Complex& z : v) z = disk(r);
        return v;
    }
    std::vector<Complex> upper_list(std::size_t n)
    {
        std::vector<Complex> v(n);
        for (Complex& z : v) z = upper();
        return v;
    }

    Mat matrix(std::size_t n)
    {
        Mat M(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (Eigen::Index i = 0; i < M.rows(); ++i)
            for (Eigen::Index j = 0; j < M.cols(); ++j) M(i, j) = normal();
        return M;
    }
    // Random contraction with norm r.
    Mat contraction(std::size_t n, double r)
    {
        Mat M = matrix(n);
        return M * (r / M.operatorNorm());
    }
    Mat unitary(std::size_t n)
    {
        Eigen::HouseholderQR<Mat> qr(matrix(n));
        return qr.householderQ() * Mat::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    }
    Mat hermitian(std::size_t n)
    {
        const Mat M = matrix(n);
        return (M + M.adjoint()) / 2.0;
    }

    // Random discrete circle measure with m points separated by at least gap.
    DiscreteMeasure circle_measure(std::size_t m, double gap = 0.0)
    {
        DiscreteMeasure mu;
        std::vector<double> th;
        while (th.size() < m) {
            const double t = uniform(-M_PI, M_PI);
            bool ok = true;
            for (double s : th) {
                const double d = std::abs(std::remainder(t - s, 2 * M_PI));
                if (d < std::max(gap, 1e-6)) ok = false;
            }
            if (ok) th.push_back(t);
        }
        double total = 0.0;
        for (double t : th) {
            mu.points.emplace_back(std::polar(1.0, t));
            mu.weights.push_back(uniform(0.1, 1.0));
            total += mu.weights.back();
        }
        for (double& w : mu.weights) w /= total;
        return mu;
    }

private:
    std::mt19937_64 g_;
    std::normal_distribution<double> n_{0.0, 1.0};
};

inline double opnorm(const Mat& M) { return M.rows() == 0 ? 0.0 : M.operatorNorm(); }

inline DiagParam adjoint_param(const DiagParam& A)
{
    DiagParam B = A;
    for (Complex& z : B.diag) z = std::conj(z);
    return B;
}

// First line of the disk-invariance identity:
// varpi_A(T) eta^{-1} (1 - zeta zeta^+) eta^{-1} varpi_A(T)^+ = 1 - T T^+.
inline double inv_residual_forward(const DiagParam& A, const Mat& T)
{
    const Mat Id = Mat::Identity(T.rows(), T.cols());
    const Mat Z = op_mobius_forward(A, T);
    const Mat ei = op_eta(A).inverse();
    const Mat W = varpi_of(A, T);
    return opnorm(W * ei * (Id - Z * Z.adjoint()) * ei * W.adjoint() - (Id - T * T.adjoint()));
}

// Second line, for the inverse map.
inline double inv_residual_inverse(const DiagParam& A, const Mat& T)
{
    const Mat Id = Mat::Identity(T.rows(), T.cols());
    const Mat Z = op_mobius_inverse(A, T);
    const Mat ei = op_eta(adjoint_param(A)).inverse();
    const Mat W = tilde_varpi(A, T);
    return opnorm(W.adjoint() * ei * (Id - Z.adjoint() * Z) * ei * W - (Id - T.adjoint() * T));
}

// Adjoint symmetry of both maps.
inline double dag_residual(const DiagParam& A, const Mat& T)
{
    const DiagParam Ad = adjoint_param(A);
    const double r1 = opnorm(op_mobius_forward(A, T).adjoint() - op_mobius_forward(Ad, T.adjoint()));
    const double r2 = opnorm(op_mobius_inverse(A, T).adjoint() - op_mobius_inverse(Ad, T.adjoint()));
    return std::max(r1, r2);
}

// zeta_A(T_A) = varpi_A(T)^{-1} varpi*_A(T) and
// tilde zeta_A(T) = tilde varpi*_A(T_A) tilde varpi_A(T_A)^{-1}, with T_A = eta^{-1} T eta.
inline double mob2_residual(const DiagParam& A, const Mat& T)
{
    const Mat TA = conjugate_by_eta(A, T);
    const double r1 = opnorm(op_mobius_forward(A, TA) - varpi_of(A, T).inverse() * varpi_star_of(A, T));
    const double r2 = opnorm(op_mobius_inverse(A, T) - tilde_varpi_star(A, TA) * tilde_varpi(A, TA).inverse());
    return std::max(r1, r2);
}

// z - T = (varpi_a(z)/varpi_a(a)) (zeta_a(z) - zeta_a(T)) varpi_a(T), scalar a on the circle.
inline double mob3_residual(Complex alpha, Complex z, const Mat& T)
{
    const Mat Id = Mat::Identity(T.rows(), T.cols());
    const Complex w = scalar::varpi(Domain::Circle, alpha, z) / scalar::varpi(Domain::Circle, alpha, alpha);
    const Mat rhs = w * (scalar::zeta(Domain::Circle, alpha, z) * Id - scalar_mobius_of(alpha, T)) *
                    (Id - std::conj(alpha) * T);
    return opnorm(z * Id - T - rhs);
}

inline double mob4_residual(Complex alpha, Complex z, Complex lambda)
{
    const Domain d = Domain::Circle;
    const Complex lhs = scalar::zeta(d, alpha, z) - scalar::zeta(d, alpha, lambda);
    const Complex rhs = scalar::varpi(d, alpha, alpha) / (scalar::varpi(d, alpha, z) * scalar::varpi(d, alpha, lambda)) *
                        (z - lambda);
    return std::abs(lhs - rhs);
}

// Line version: zeta_A(T) = Cayley(eta^{-1} (T - Re A) eta^{-1}).
inline double cayley_residual(const DiagParam& A, const Mat& T)
{
    Vec re(static_cast<Eigen::Index>(A.size()));
    for (std::size_t k = 0; k < A.size(); ++k) re(static_cast<Eigen::Index>(k)) = A.diag[k].real();
    const Mat ei = op_eta(A).inverse();
    const Mat X = ei * (T - Mat(re.asDiagonal())) * ei;
    return opnorm(op_mobius_forward(A, T) - cayley_matrix(X));
}

// Both lines of the split recurrence relating phi_{n-1}, phi^*_{n-1}, phi_n, phi^*_n,
// relative to the size of the terms; max over n = 1..N.
inline double rr1_residual(const ParamSeq& a, const PoleSeq& poles, std::size_t N, const CPoint& z)
{
    const DerivedParams d = derived_params(a, poles);
    const auto f = eval_orf_all(a, poles, N, z);
    const Domain dom = poles.domain;
    double worst = 0.0;
    for (std::size_t n = 1; n <= N; ++n) {
        const Complex an = a.at(n);
        const Complex wn = scalar::varpi(dom, poles.alpha(n), z.z);
        const Complex wp = scalar::varpi(dom, poles.alpha(n - 1), z.z);
        const Complex wps = scalar::varpi_star(dom, poles.alpha(n - 1), z.z);
        const Complex l1 = wps * f[n - 1].phi;
        const Complex r1 = d.rho_plus[n - 1] * wn * f[n].phi - an * wp * f[n - 1].phi_star;
        const Complex l2 = wn * f[n].phi_star;
        const Complex r2 = std::conj(an) * wn * f[n].phi + d.rho_minus[n - 1] * wp * f[n - 1].phi_star;
        const double s1 = std::abs(l1) + std::abs(d.rho_plus[n - 1] * wn * f[n].phi) + std::abs(an * wp * f[n - 1].phi_star);
        const double s2 = std::abs(l2) + std::abs(std::conj(an) * wn * f[n].phi) + std::abs(d.rho_minus[n - 1] * wp * f[n - 1].phi_star);
        worst = std::max({worst, std::abs(l1 - r1) / s1, std::abs(l2 - r2) / s2});
    }
    return worst;
}

// Five-term recurrence of chi_0..chi_{N+1}, relative residual; needs a_1..a_{N+1}.
inline double chi_recurrence_residual(const ParamSeq& a, const PoleSeq& poles, std::size_t N, const CPoint& z)
{
    const DerivedParams d = derived_params(a, poles);
    const auto chi = eval_chi_all(a, poles, N + 1, z);
    const Domain dom = poles.domain;
    auto w = [&](std::size_t k) { return scalar::varpi(dom, poles.alpha(k), z.z); };
    auto ws = [&](std::size_t k) { return scalar::varpi_star(dom, poles.alpha(k), z.z); };
    auto rp = [&](std::size_t k) { return d.rho_plus[k - 1]; };
    auto rm = [&](std::size_t k) { return d.rho_minus[k - 1]; };
    auto A = [&](std::size_t k) { return a.at(k); };
    auto C = [&](std::size_t k) { return chi[k].phi; };

    double worst = 0.0;
    auto record = [&](Complex lhs, std::initializer_list<Complex> terms) {
        Complex s = 0.0;
        double scale = std::abs(lhs);
        for (Complex t : terms) {
            s += t;
            scale += std::abs(t);
        }
        worst = std::max(worst, std::abs(lhs - s) / scale);
    };
    record(ws(0) * C(0), {rp(1) * w(1) * C(1), -A(1) * w(0) * C(0)});
    for (std::size_t m = 1; 2 * m + 1 <= N + 1; ++m) {
        const std::size_t o = 2 * m - 1, e = 2 * m;
        record(ws(o) * C(o), {rp(e) * rp(e + 1) * w(e + 1) * C(e + 1), -rp(e) * A(e + 1) * w(e) * C(e),
                              -std::conj(A(o)) * A(e) * w(o) * C(o), -rm(o) * A(e) * w(o - 1) * C(o - 1)});
        record(ws(e) * C(e), {std::conj(A(e)) * rp(e + 1) * w(e + 1) * C(e + 1), -std::conj(A(e)) * A(e + 1) * w(e) * C(e),
                              std::conj(A(o)) * rm(e) * w(o) * C(o), rm(o) * rm(e) * w(o - 1) * C(o - 1)});
    }
    return worst;
}

// Coefficients of p_n with phi_n = p_n / (varpi_1 ... varpi_n) up to a constant,
// recovered by interpolation at roots of unity; roots through the companion
// matrix of the monic polynomial.
inline std::vector<Complex> companion_roots(const ParamSeq& a, const PoleSeq& poles, std::size_t n)
{
    const auto nn = static_cast<Eigen::Index>(n);
    const std::size_t m = n + 1;
    Vec vals(static_cast<Eigen::Index>(m));
    for (std::size_t j = 0; j < m; ++j) {
        const Complex z = std::polar(1.0, 2 * M_PI * static_cast<double>(j) / static_cast<double>(m) + 0.1);
        Complex den = 1.0;
        for (std::size_t k = 1; k <= n; ++k) den *= scalar::varpi(Domain::Circle, poles.alpha(k), z);
        vals(static_cast<Eigen::Index>(j)) = eval_orf(a, poles, n, CPoint(z)).phi * den;
    }
    Mat V(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t j = 0; j < m; ++j) {
        const Complex z = std::polar(1.0, 2 * M_PI * static_cast<double>(j) / static_cast<double>(m) + 0.1);
        for (std::size_t k = 0; k < m; ++k) V(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = std::pow(z, static_cast<double>(k));
    }
    const Vec c = V.partialPivLu().solve(vals);
    Mat Cm = Mat::Zero(nn, nn);
    for (Eigen::Index i = 1; i < nn; ++i) Cm(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < nn; ++i) Cm(i, nn - 1) = -c(i) / c(nn);
    Eigen::ComplexEigenSolver<Mat> es(Cm);
    std::vector<Complex> r(es.eigenvalues().data(), es.eigenvalues().data() + n);
    return r;
}

}  // namespace orf::testing
