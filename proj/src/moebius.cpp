#include "orf/moebius.hpp"

#include <cmath>
#include <sstream>

namespace orf {
namespace scalar {

Complex varpi(Domain d, Complex alpha, Complex z)
{
    return d == Domain::Circle ? 1.0 - std::conj(alpha) * z : z - std::conj(alpha);
}

Complex varpi_star(Domain, Complex alpha, Complex z)
{
    return z - alpha;
}

Complex zeta(Domain d, Complex alpha, Complex z)
{
    return varpi_star(d, alpha, z) / varpi(d, alpha, z);
}

Complex zeta_inv(Domain d, Complex alpha, Complex w)
{
    if (d == Domain::Circle) return (w + alpha) / (1.0 + std::conj(alpha) * w);
    return (alpha - std::conj(alpha) * w) / (1.0 - w);
}

double eta(Domain d, Complex alpha)
{
    if (d == Domain::Circle) {
        const double r = std::abs(alpha);
        if (!(r < 1.0)) {
            std::ostringstream os;
            os.precision(17);
            os << "eta undefined for |alpha| = " << r << " (pole sequence must stay inside the disk)";
            throw ValidationError(os.str());
        }
        return std::sqrt((1.0 - r) * (1.0 + r));
    }
    if (!(alpha.imag() > 0.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "eta undefined for Im alpha = " << alpha.imag() << " (pole must lie in the upper half plane)";
        throw ValidationError(os.str());
    }
    return std::sqrt(alpha.imag());
}

CPoint pole_of(Domain d, Complex alpha)
{
    if (d == Domain::Line) return CPoint(std::conj(alpha));
    if (alpha == Complex(0.0)) return CPoint::infinity();
    return CPoint(1.0 / std::conj(alpha));
}

Complex varpi_ratio(Domain d, Complex alpha_prev, Complex alpha_next, const CPoint& z)
{
    if (z.is_finite()) return varpi(d, alpha_prev, z.z) / varpi(d, alpha_next, z.z);
    if (d == Domain::Line) return 1.0;
    if (alpha_next == Complex(0.0))
        throw NumericalError("ratio of pole factors diverges at infinity");
    return std::conj(alpha_prev) / std::conj(alpha_next);
}

}  // namespace scalar

CPoint mobius_forward(Domain d, Complex alpha, const CPoint& z)
{
    if (!z.is_finite()) {
        if (d == Domain::Line) return CPoint(1.0);
        if (alpha == Complex(0.0)) return CPoint::infinity();
        return CPoint(-1.0 / std::conj(alpha));
    }
    const CPoint pole = scalar::pole_of(d, alpha);
    if (pole.is_finite() && std::abs(z.z - pole.z) < kPoleSnap) return CPoint::infinity();
    return CPoint(scalar::zeta(d, alpha, z.z));
}

CPoint mobius_inverse(Domain d, Complex alpha, const CPoint& w)
{
    if (d == Domain::Circle) return mobius_forward(Domain::Circle, -alpha, w);
    if (!w.is_finite()) return CPoint(std::conj(alpha));
    if (std::abs(1.0 - w.z) < kPoleSnap) return CPoint::infinity();
    return CPoint(scalar::zeta_inv(d, alpha, w.z));
}

CPoint mobius_forward(Complex alpha, const CPoint& z)
{
    return mobius_forward(Domain::Circle, alpha, z);
}

CPoint mobius_inverse(Complex alpha, const CPoint& w)
{
    return mobius_inverse(Domain::Circle, alpha, w);
}

double eta(Complex alpha)
{
    return scalar::eta(Domain::Circle, alpha);
}

Complex zeta_product(const PoleSeq& poles, std::size_t first, std::size_t last,
                     std::size_t step, const CPoint& z)
{
    Complex p = 1.0;
    for (std::size_t k = first; k <= last && k >= 1; k += step) {
        const CPoint f = mobius_forward(poles.domain, poles.alpha(k), z);
        if (!f.is_finite()) {
            std::ostringstream os;
            os << "Blaschke factor " << k << " has a pole at the evaluation point";
            throw NumericalError(os.str());
        }
        p *= f.z;
    }
    return p;
}

Complex blaschke(const PoleSeq& poles, std::size_t n, const CPoint& z, BlaschkeVariant variant)
{
    if (n == 0) return 1.0;
    switch (variant) {
    case BlaschkeVariant::Full:
        poles.require(n, "Blaschke product");
        return zeta_product(poles, 1, n, 1, z);
    case BlaschkeVariant::Odd:
        poles.require(2 * n - 1, "odd Blaschke product");
        return zeta_product(poles, 1, 2 * n - 1, 2, z);
    case BlaschkeVariant::Even:
        poles.require(2 * n, "even Blaschke product");
        return zeta_product(poles, 2, 2 * n, 2, z);
    }
    return 1.0;
}

}  // namespace orf
