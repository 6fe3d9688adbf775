#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace orf;
using namespace orf::testing;

namespace {

Mat build(const ParamSeq& a, const PoleSeq& poles, RepKind kind, std::size_t n,
          std::optional<Complex> u = std::nullopt)
{
    RepSpec s;
    s.kind = kind;
    s.n = n;
    s.boundary = u;
    return build_matrix(a, poles, s);
}

// Entry formula of the Hessenberg matrix in the eta-weighted basis, 1-based:
// (i, j) = -conj(a_{i-1}) rho^-_i ... rho^-_{j-1} a_j for i <= j, where the
// first row has no conj(a_0) factor; (j+1, j) = rho^+_j; zero below.
Mat hessenberg_by_entries(const ParamSeq& a, const PoleSeq& poles, std::size_t n)
{
    const DerivedParams d = derived_params(a, poles);
    const auto nn = static_cast<Eigen::Index>(n);
    Mat H = Mat::Zero(nn, nn);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            Complex v = -a.at(j);
            if (i > 1) v *= std::conj(a.at(i - 1));
            for (std::size_t k = i; k < j; ++k) v *= d.rho_minus[k - 1];
            H(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1)) = v;
        }
        if (i < n) H(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = d.rho_plus[i - 1];
    }
    return H;
}

}  // namespace

TEST_CASE("theta block")
{
    const Mat T0 = theta_block(0.0);
    CHECK(T0(0, 0) == Complex(0.0));
    CHECK(T0(0, 1) == Complex(1.0));
    CHECK(T0(1, 0) == Complex(1.0));
    CHECK(T0(1, 1) == Complex(0.0));
    const Complex u = std::polar(1.0, 0.4);
    const Mat Tu = theta_block(u);
    CHECK(Tu(0, 0) == -u);
    CHECK(Tu(1, 1) == std::conj(u));
    CHECK(std::abs(Tu(0, 1)) < 1e-15);
    Rng r(1);
    for (int t = 0; t < 20; ++t) {
        const Mat T = theta_block(r.disk(1.0));
        CHECK(opnorm(T.adjoint() * T - Mat::Identity(2, 2)) < 1e-15);
    }
}

TEST_CASE("CMV rows and factorization")
{
    Rng r(2);
    const ParamSeq a(r.disk_list(9, 0.95));
    const PoleSeq poles = PoleSeq::zeros(9);
    for (std::size_t n : {1u, 2u, 5u, 8u}) {
        const Mat C = build(a, poles, RepKind::Cmv, n);
        const Mat Co = build(a, poles, RepKind::CmvOdd, n);
        const Mat Ce = build(a, poles, RepKind::CmvEven, n);
        CHECK((C - Co * Ce).cwiseAbs().maxCoeff() == 0.0);
    }
    const Mat C = build(a, poles, RepKind::Cmv, 6);
    const double r1 = std::sqrt(1 - std::norm(a.at(1))), r2 = std::sqrt(1 - std::norm(a.at(2)));
    CHECK(std::abs(C(0, 0) + a.at(1)) < 1e-15);
    CHECK(std::abs(C(0, 1) + r1 * a.at(2)) < 1e-15);
    CHECK(std::abs(C(0, 2) - r1 * r2) < 1e-15);
    CHECK(std::abs(C(0, 3)) == 0.0);
    // five-diagonal band
    for (Eigen::Index i = 0; i < 6; ++i)
        for (Eigen::Index j = 0; j < 6; ++j)
            if (std::abs(i - j) > 2) CHECK(std::abs(C(i, j)) == 0.0);

    const Complex u = std::polar(1.0, -1.1);
    const Mat B = build(ParamSeq(std::vector<Complex>{}), poles, RepKind::Cmv, 1, u);
    CHECK(B.rows() == 1);
    CHECK(std::abs(B(0, 0) + u) < 1e-15);
}

TEST_CASE("boundary constructions are unitary")
{
    Rng r(3);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t) % 10;
        const ParamSeq a(r.disk_list(n, 0.95));
        const PoleSeq poles(r.disk_list(n, 0.8));
        const Complex u = r.unimodular();
        const Mat Id = Mat::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (RepKind k : {RepKind::Cmv, RepKind::Hessenberg, RepKind::VTrunc, RepKind::UTrunc}) {
            const Mat M = build(a, poles, k, n, u);
            CHECK(opnorm(M.adjoint() * M - Id) < 1e-12);
        }
    }
    CHECK_THROWS_AS(build(ParamSeq({0.3}), PoleSeq::zeros(1), RepKind::Cmv, 1, 0.5), ValidationError);
}

TEST_CASE("Hessenberg entries")
{
    Rng r(4);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t);
        const ParamSeq a(r.disk_list(n, 0.9));
        std::vector<Complex> al = r.disk_list(n, 0.8);
        const PoleSeq poles(al);
        const Mat hat = build(a, poles, RepKind::HatHessenberg, n);
        CHECK(opnorm(hat - hessenberg_by_entries(a, poles, n)) < 1e-14);
        const Mat H = build(a, PoleSeq::zeros(n), RepKind::Hessenberg, n);
        CHECK(opnorm(H - hessenberg_by_entries(a, PoleSeq::zeros(n), n)) < 1e-14);
        // isometric columns except the last
        const Mat G = H.adjoint() * H;
        for (Eigen::Index j = 0; j + 1 < G.cols(); ++j) CHECK(std::abs(G(j, j) - 1.0) < 1e-13);
    }
}

TEST_CASE("hat CMV is the eta conjugate")
{
    Rng r(5);
    const ParamSeq a(r.disk_list(7, 0.9));
    const PoleSeq poles(r.disk_list(7, 0.8));
    const Mat hat = build(a, poles, RepKind::HatCmv, 7);
    const Mat C = build(a, poles, RepKind::Cmv, 7);
    CHECK((hat - conjugate_by_eta(DiagParam::from_poles(poles, 7), C)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("truncated representations")
{
    Rng r(6);
    const ParamSeq a(r.disk_list(5, 0.9));
    const PoleSeq zero = PoleSeq::zeros(5);
    CHECK(opnorm(truncated_rep(a, zero, 5, Family::V) - build(a, zero, RepKind::Hessenberg, 5)) < 1e-15);
    CHECK(opnorm(truncated_rep(a, zero, 5, Family::U) - build(a, zero, RepKind::Cmv, 5)) < 1e-15);

    const Mat one = truncated_rep(ParamSeq({0.5}), zero, 1, Family::U);
    CHECK(std::abs(one(0, 0) + 0.5) < 1e-15);
    const Complex u = std::polar(1.0, 2.0);
    for (Family f : {Family::U, Family::V}) {
        const Mat b = truncated_rep(ParamSeq({0.5}), PoleSeq({0.3}), 1, f, u);
        CHECK(std::abs(b(0, 0) + u) < 1e-15);
    }
}

TEST_CASE("pencils share the spectrum of the truncation")
{
    Rng r(7);
    const ParamSeq a(r.disk_list(4, 0.9));
    const PoleSeq zero = PoleSeq::zeros(4);
    auto [T0, S0] = pair_rep(a, zero, 4, Family::U);
    CHECK(opnorm(T0 - build(a, zero, RepKind::Cmv, 4)) < 1e-15);
    CHECK(opnorm(S0 - Mat::Identity(4, 4)) < 1e-15);

    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t) % 12;
        const ParamSeq b(r.disk_list(n, 0.9));
        const PoleSeq poles(r.disk_list(n, 0.8));
        for (Family f : {Family::U, Family::V}) {
            auto [T, S] = pair_rep(b, poles, n, f);
            const EigenResult p = pair_spectrum(T, S);
            const std::vector<Complex> direct = eigensolve(truncated_rep(b, poles, n, f)).finite_values();
            CHECK(matched_distance(p.finite_values(), direct) < 1e-9);
        }
        auto [T, S] = tridiagonal_pair(b, poles, n);
        CHECK(matched_distance(pair_spectrum(T, S).finite_values(),
                               eigensolve(truncated_rep(b, poles, n, Family::U)).finite_values()) < 1e-9);
        // tridiagonal band
        for (Eigen::Index i = 0; i < T.rows(); ++i)
            for (Eigen::Index j = 0; j < T.cols(); ++j)
                if (std::abs(i - j) > 1) CHECK(std::abs(T(i, j)) + std::abs(S(i, j)) == 0.0);
    }
    CHECK_THROWS_AS(tridiagonal_pair(a, PoleSeq::zeros(4, Domain::Line), 4), ValidationError);
}

TEST_CASE("kind names")
{
    for (RepKind k : {RepKind::Hessenberg, RepKind::Cmv, RepKind::CmvOdd, RepKind::CmvEven, RepKind::HatHessenberg,
                      RepKind::HatCmv, RepKind::VTrunc, RepKind::UTrunc})
        CHECK(parse_rep_kind(rep_kind_name(k)) == k);
    CHECK_THROWS_AS(parse_rep_kind("PENTADIAGONAL"), ValidationError);
}
