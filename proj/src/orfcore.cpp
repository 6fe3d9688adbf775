#include "orf/orfcore.hpp"

#include <cmath>
#include <sstream>

#include "orf/moebius.hpp"

namespace orf {

namespace {

void guard_pole(const PoleSeq& poles, std::size_t k, const CPoint& z)
{
    const CPoint p = scalar::pole_of(poles.domain, poles.alpha(k));
    bool hit = false;
    if (!p.is_finite())
        hit = !z.is_finite();
    else if (z.is_finite())
        hit = std::abs(z.z - p.z) < kPoleGuard;
    if (hit) {
        std::ostringstream os;
        os.precision(17);
        os << "evaluation point hits the pole of factor " << k << " (";
        if (p.is_finite())
            os << p.z.real() << "," << p.z.imag();
        else
            os << "infinity";
        os << ")";
        throw NumericalError(os.str());
    }
}

void check_point(const PoleSeq& poles, const CPoint& z)
{
    if (!z.is_finite() && poles.domain == Domain::Circle)
        throw ValidationError("the point at infinity is only supported on the line");
}

struct StepFactors {
    Complex ratio;  // varpi_{k-1}(z) / varpi_k(z)
    Complex zeta_prev;  // zeta_{k-1}(z)
};

StepFactors step_factors(const PoleSeq& poles, std::size_t k, const CPoint& z)
{
    guard_pole(poles, k, z);
    const Complex ap = poles.alpha(k - 1);
    const Complex an = poles.alpha(k);
    StepFactors f;
    f.ratio = scalar::varpi_ratio(poles.domain, ap, an, z);
    const CPoint zp = mobius_forward(poles.domain, ap, z);
    if (!zp.is_finite()) throw NumericalError("zeta factor diverges at the evaluation point");
    f.zeta_prev = zp.z;
    return f;
}

double step_e(const PoleSeq& poles, std::size_t k, Complex ak)
{
    const double rho = std::sqrt(std::max(0.0, 1.0 - std::norm(ak)));
    if (!(rho > 0.0)) throw ValidationError("parameter of modulus 1 inside the recurrence");
    return scalar::eta(poles.domain, poles.alpha(k)) /
           scalar::eta(poles.domain, poles.alpha(k - 1)) / rho;
}

// Reciprocal of a product of zeta factors (the star of the product),
// evaluated as a product of varpi/varpi_star so that it stays finite on the
// far side of the boundary.
Complex star_product(const PoleSeq& poles, long first, long last, long step, const CPoint& z)
{
    Complex p = 1.0;
    for (long k = first; k <= last; k += step) {
        const Complex a = poles.alpha(static_cast<std::size_t>(k));
        if (!z.is_finite()) {
            // zeta -> 1 on the line at infinity
            continue;
        }
        const Complex den = scalar::varpi_star(poles.domain, a, z.z);
        if (std::abs(den) < kPoleGuard) {
            std::ostringstream os;
            os << "evaluation point hits the zero of factor " << k
               << " inside a reciprocal Blaschke product";
            throw NumericalError(os.str());
        }
        p *= scalar::varpi(poles.domain, a, z.z) / den;
    }
    return p;
}

}  // namespace

DerivedParams derived_params(const ParamSeq& a, const PoleSeq& poles)
{
    poles.require(a.size(), "derived parameters");
    a.validate();
    DerivedParams d;
    const std::size_t n = a.size();
    d.rho.resize(n);
    d.rho_plus.resize(n);
    d.rho_minus.resize(n);
    d.e.resize(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const double r = std::sqrt(1.0 - std::norm(a.at(k)));
        const double q = scalar::eta(poles.domain, poles.alpha(k - 1)) /
                         scalar::eta(poles.domain, poles.alpha(k));
        d.rho[k - 1] = r;
        d.rho_plus[k - 1] = q * r;
        d.rho_minus[k - 1] = r / q;
        d.e[k - 1] = 1.0 / (q * r);
    }
    return d;
}

std::vector<OrfValue> eval_orf_all(const ParamSeq& a, const PoleSeq& poles, std::size_t n,
                                   const CPoint& z)
{
    a.require(n, "ORF evaluation");
    poles.require(n, "ORF evaluation");
    check_point(poles, z);
    std::vector<OrfValue> out(n + 1);
    Complex phi = 1.0, phis = 1.0;
    out[0].n = 0;
    out[0].z = z;
    for (std::size_t k = 1; k <= n; ++k) {
        const StepFactors f = step_factors(poles, k, z);
        const Complex ak = a.at(k);
        const double e = step_e(poles, k, ak);
        const Complex p = f.zeta_prev * phi;
        const Complex c = e * f.ratio;
        const Complex nphi = c * (p + ak * phis);
        const Complex nphis = c * (std::conj(ak) * p + phis);
        phi = nphi;
        phis = nphis;
        out[k].n = k;
        out[k].z = z;
        out[k].phi = phi;
        out[k].phi_star = phis;
    }
    return out;
}

OrfValue eval_orf(const ParamSeq& a, const PoleSeq& poles, std::size_t n, const CPoint& z)
{
    return eval_orf_all(a, poles, n, z).back();
}

OrfValue eval_orf_boundary(const ParamSeq& a, const PoleSeq& poles, std::size_t n, Complex u,
                           const CPoint& z)
{
    if (n == 0) throw ValidationError("boundary evaluation needs order >= 1");
    poles.require(n, "boundary ORF evaluation");
    const OrfValue prev = n > 1 ? eval_orf(a, poles, n - 1, z) : OrfValue{0, z, 1.0, 1.0};
    const StepFactors f = step_factors(poles, n, z);
    const Complex p = f.zeta_prev * prev.phi;
    OrfValue r;
    r.n = n;
    r.z = z;
    r.phi = f.ratio * (p + u * prev.phi_star);
    r.phi_star = f.ratio * (std::conj(u) * p + prev.phi_star);
    return r;
}

std::vector<OrfValue> eval_chi_all(const ParamSeq& a, const PoleSeq& poles, std::size_t n,
                                   const CPoint& z)
{
    const std::vector<OrfValue> phis = eval_orf_all(a, poles, n, z);
    std::vector<OrfValue> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const long m = static_cast<long>(k / 2);
        OrfValue v;
        v.n = k;
        v.z = z;
        // B^e_{m*} for both parities
        const Complex be = star_product(poles, 2, 2 * m, 2, z);
        if (k % 2 == 0) {
            v.phi = be * phis[k].phi_star;
            v.phi_star = star_product(poles, 1, 2 * m - 1, 2, z) * phis[k].phi;
        } else {
            v.phi = be * phis[k].phi;
            v.phi_star = star_product(poles, 1, 2 * m + 1, 2, z) * phis[k].phi_star;
        }
        out[k] = v;
    }
    return out;
}

OrfValue eval_chi(const ParamSeq& a, const PoleSeq& poles, std::size_t n, const CPoint& z)
{
    return eval_chi_all(a, poles, n, z).back();
}

Complex eval_porf(const ParamSeq& a, const PoleSeq& poles, std::size_t n, Complex v,
                  const CPoint& z)
{
    if (std::abs(std::abs(v) - 1.0) > 1e-10) throw ValidationError("PORF parameter v must be unimodular");
    const OrfValue f = eval_orf(a, poles, n, z);
    return f.phi + v * f.phi_star;
}

Complex porf_u(Complex a_n, Complex v)
{
    return (v + a_n) / (1.0 + std::conj(a_n) * v);
}

Complex porf_v(Complex a_n, Complex u)
{
    return (u - a_n) / (1.0 - std::conj(a_n) * u);
}

std::pair<ParamSeq, std::vector<Complex>> normalize_standard(const ParamSeq& a,
                                                              const PoleSeq& poles)
{
    poles.require(a.size(), "normalization");
    std::vector<Complex> zf(a.size());
    ParamSeq b = a;
    Complex acc = 1.0;
    for (std::size_t k = 1; k <= a.size(); ++k) {
        const Complex al = poles.alpha(k);
        zf[k - 1] = al == Complex(0.0) ? Complex(1.0) : -std::abs(al) / al;
        acc *= zf[k - 1];
        b.a[k - 1] = acc * a.at(k);
    }
    return {b, zf};
}

}  // namespace orf
