#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace orf;
using namespace orf::testing;

TEST_CASE("derived parameters")
{
    const DerivedParams z = derived_params(ParamSeq({0.0, 0.0, 0.0}), PoleSeq::zeros(3));
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(z.rho[k] == 1.0);
        CHECK(z.rho_plus[k] == 1.0);
        CHECK(z.rho_minus[k] == 1.0);
        CHECK(z.e[k] == doctest::Approx(1.0).epsilon(1e-15));
    }
    const DerivedParams h = derived_params(ParamSeq({0.5}), PoleSeq::zeros(1));
    CHECK(h.rho[0] == doctest::Approx(0.8660254037844386).epsilon(1e-15));
    CHECK(h.rho_plus[0] == doctest::Approx(0.8660254037844386).epsilon(1e-15));
    CHECK(h.rho_minus[0] == doctest::Approx(0.8660254037844386).epsilon(1e-15));

    const DerivedParams p = derived_params(ParamSeq({0.0}), PoleSeq({0.6}));
    CHECK(p.rho_plus[0] == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(p.rho_minus[0] == doctest::Approx(0.8).epsilon(1e-15));

    Rng r(1);
    const DerivedParams d = derived_params(ParamSeq(r.disk_list(10, 0.95)), PoleSeq(r.disk_list(10, 0.9)));
    for (std::size_t k = 0; k < 10; ++k) {
        CHECK(std::abs(d.rho_plus[k] * d.rho_minus[k] - d.rho[k] * d.rho[k]) < 1e-14);
        CHECK(d.e[k] > 0.0);
    }
}

TEST_CASE("orf values in closed form")
{
    const CPoint z(Complex(0.3, -0.2));
    const OrfValue f0 = eval_orf(ParamSeq({0.5}), PoleSeq::zeros(1), 0, z);
    CHECK(f0.phi == Complex(1.0));
    CHECK(f0.phi_star == Complex(1.0));

    const OrfValue f1 = eval_orf(ParamSeq({0.5}), PoleSeq::zeros(1), 1, z);
    CHECK(std::abs(f1.phi - (z.z + 0.5) / std::sqrt(0.75)) < 1e-15);

    const OrfValue g = eval_orf(ParamSeq({0.0}), PoleSeq({0.5}), 1, CPoint(1.0));
    CHECK(g.phi.real() == doctest::Approx(1.7320508075688772).epsilon(1e-14));
}

TEST_CASE("polynomial case reduces to Szego polynomials")
{
    // phi_n = (z phi_{n-1} + a_n phi*_{n-1}) / rho_n, with phi* the reversed polynomial
    Rng r(2);
    const ParamSeq a(r.disk_list(6, 0.9));
    const PoleSeq poles = PoleSeq::zeros(6);
    const CPoint z(r.disk(1.0));
    Complex p = 1.0, ps = 1.0;
    for (std::size_t n = 1; n <= 6; ++n) {
        const double rho = std::sqrt(1.0 - std::norm(a.at(n)));
        const Complex np = (z.z * p + a.at(n) * ps) / rho;
        const Complex nps = (std::conj(a.at(n)) * z.z * p + ps) / rho;
        p = np;
        ps = nps;
        const OrfValue f = eval_orf(a, poles, n, z);
        CHECK(std::abs(f.phi - p) < 1e-13);
        CHECK(std::abs(f.phi_star - ps) < 1e-13);
    }
}

TEST_CASE("superstar modulus and split recurrence")
{
    Rng r(3);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t) % 12;
        const ParamSeq a(r.disk_list(n, 0.95));
        const PoleSeq poles(r.disk_list(n, 0.9));
        const CPoint z(r.unimodular());
        const OrfValue f = eval_orf(a, poles, n, z);
        CHECK(std::abs(std::abs(f.phi) - std::abs(f.phi_star)) < 1e-11 * std::abs(f.phi));
        CHECK(rr1_residual(a, poles, n, CPoint(r.disk(1.0))) < 1e-11);
    }
}

TEST_CASE("parameter is the ratio at the previous pole")
{
    Rng r(4);
    const ParamSeq a(r.disk_list(6, 0.9));
    const PoleSeq poles(r.disk_list(6, 0.8));
    for (std::size_t n = 1; n <= 6; ++n) {
        const OrfValue f = eval_orf(a, poles, n, CPoint(poles.alpha(n - 1)));
        CHECK(std::abs(f.phi / f.phi_star - a.at(n)) < 1e-12);
    }
}

TEST_CASE("chi functions")
{
    CHECK(eval_chi(ParamSeq({0.3}), PoleSeq::zeros(1), 0, CPoint(0.4)).phi == Complex(1.0));

    Rng r(5);
    const ParamSeq a(r.disk_list(8, 0.9));
    const PoleSeq zero = PoleSeq::zeros(8);
    const CPoint z(r.unimodular());
    for (std::size_t m = 1; 2 * m <= 8; ++m) {
        const OrfValue chi = eval_chi(a, zero, 2 * m, z);
        const OrfValue f = eval_orf(a, zero, 2 * m, z);
        CHECK(std::abs(chi.phi - std::pow(z.z, -static_cast<double>(m)) * f.phi_star) < 1e-13);
    }

    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t) % 20;
        const ParamSeq b(r.disk_list(n + 2, 0.95));
        const PoleSeq poles(r.disk_list(n + 2, 0.9));
        CHECK(chi_recurrence_residual(b, poles, n, CPoint(r.unimodular())) < 1e-11);
    }
}

TEST_CASE("para-orthogonal functions")
{
    const Complex v = std::polar(1.0, 0.8);
    const Complex z{0.1, 0.2};
    CHECK(std::abs(eval_porf(ParamSeq({0.0}), PoleSeq::zeros(1), 1, v, CPoint(z)) - (z + v)) < 1e-15);
    CHECK(std::abs(eval_porf(ParamSeq({0.0}), PoleSeq::zeros(1), 1, v, CPoint(-v))) < 1e-15);

    CHECK(std::abs(porf_u(0.0, v) - v) < 1e-15);
    CHECK(std::abs(porf_u(0.5, 1.0) - 1.0) < 1e-15);
    Rng r(6);
    for (int t = 0; t < 20; ++t) {
        const Complex an = r.disk(0.95);
        const Complex u = r.unimodular();
        CHECK(std::abs(porf_u(an, porf_v(an, u)) - u) < 1e-14);
    }

    // Q_n^v is proportional to zeta_{n-1} phi_{n-1} + u phi*_{n-1}
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t) % 8;
        const ParamSeq a(r.disk_list(n, 0.9));
        const PoleSeq poles(r.disk_list(n, 0.8));
        const Complex vv = r.unimodular();
        const Complex u = porf_u(a.at(n), vv);
        const CPoint z1(r.disk(1.0)), z2(r.disk(1.0));
        const Complex q1 = eval_porf(a, poles, n, vv, z1), q2 = eval_porf(a, poles, n, vv, z2);
        const Complex b1 = eval_orf_boundary(a, poles, n, u, z1).phi;
        const Complex b2 = eval_orf_boundary(a, poles, n, u, z2).phi;
        CHECK(std::abs(q1 * b2 - q2 * b1) < 1e-11 * std::abs(q1 * b2));
    }
}

TEST_CASE("standard normalization factors")
{
    auto [b0, z0] = normalize_standard(ParamSeq({0.3, 0.2}), PoleSeq::zeros(2));
    CHECK(z0[0] == Complex(1.0));
    CHECK(b0.a[1] == Complex(0.2));
    auto [b1, z1] = normalize_standard(ParamSeq({0.3}), PoleSeq({0.5}));
    CHECK(std::abs(z1[0] + 1.0) < 1e-15);
    CHECK(std::abs(b1.a[0] + 0.3) < 1e-15);
    auto [b2, z2] = normalize_standard(ParamSeq({0.3}), PoleSeq({Complex(0.0, 0.5)}));
    CHECK(std::abs(z2[0] - I) < 1e-15);
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(eval_orf(ParamSeq({0.3}), PoleSeq::zeros(1), 2, CPoint(0.1)), ValidationError);
    CHECK_THROWS_AS(eval_orf(ParamSeq({1.2}), PoleSeq::zeros(1), 1, CPoint(0.1)), ValidationError);
    // phi_1 has a pole at 1/conj(alpha_1) = 2
    CHECK_THROWS_AS(eval_orf(ParamSeq({0.3}), PoleSeq({0.5}), 1, CPoint(2.0)), NumericalError);
    CHECK_THROWS_AS(eval_porf(ParamSeq({0.3}), PoleSeq::zeros(1), 1, 0.5, CPoint(0.1)), ValidationError);
}
