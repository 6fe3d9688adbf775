#include "orf/types.hpp"

#include <cmath>
#include <sstream>

namespace orf {

const char* domain_name(Domain d)
{
    return d == Domain::Circle ? "circle" : "line";
}

bool approx_equal(const CPoint& a, const CPoint& b, double tol)
{
    if (a.at_infinity || b.at_infinity) return a.at_infinity == b.at_infinity;
    return std::abs(a.z - b.z) <= tol;
}

PoleSeq PoleSeq::zeros(std::size_t n, Domain d)
{
    PoleSeq p;
    p.domain = d;
    p.alphas.assign(n, d == Domain::Circle ? Complex(0.0) : I);
    return p;
}

Complex PoleSeq::alpha(std::size_t k) const
{
    if (k == 0) return alpha0();
    if (k > alphas.size()) {
        std::ostringstream os;
        os << "pole index " << k << " exceeds the " << alphas.size() << " available poles";
        throw ValidationError(os.str());
    }
    return alphas[k - 1];
}

void PoleSeq::validate() const
{
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        const Complex a = alphas[k];
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw ValidationError("pole alpha_" + std::to_string(k + 1) + " is not finite");
        if (domain == Domain::Circle) {
            if (std::abs(a) > 1.0 - eps) {
                std::ostringstream os;
                os.precision(17);
                os << "pole alpha_" << k + 1 << " has modulus " << std::abs(a)
                   << ", outside the compactness margin 1 - " << eps;
                throw ValidationError(os.str());
            }
        } else if (a.imag() < eps) {
            std::ostringstream os;
            os.precision(17);
            os << "pole alpha_" << k + 1 << " has imaginary part " << a.imag()
               << ", below the margin " << eps;
            throw ValidationError(os.str());
        }
    }
}

void PoleSeq::require(std::size_t count, const char* what) const
{
    if (alphas.size() < count) {
        std::ostringstream os;
        os << what << " needs " << count << " poles, got " << alphas.size();
        throw ValidationError(os.str());
    }
}

Complex ParamSeq::at(std::size_t k) const
{
    if (k == 0 || k > a.size()) {
        std::ostringstream os;
        os << "parameter index " << k << " outside 1.." << a.size();
        throw ValidationError(os.str());
    }
    return a[k - 1];
}

void ParamSeq::validate() const
{
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!std::isfinite(a[k].real()) || !std::isfinite(a[k].imag()))
            throw ValidationError("parameter a_" + std::to_string(k + 1) + " is not finite");
        if (std::abs(a[k]) >= 1.0) {
            std::ostringstream os;
            os.precision(17);
            os << "parameter a_" << k + 1 << " has modulus " << std::abs(a[k])
               << "; interior parameters must lie in the open unit disk";
            throw ValidationError(os.str());
        }
    }
    if (terminal && std::abs(std::abs(*terminal) - 1.0) > 1e-10) {
        std::ostringstream os;
        os.precision(17);
        os << "terminal value has modulus " << std::abs(*terminal) << ", expected 1";
        throw ValidationError(os.str());
    }
}

void ParamSeq::require(std::size_t count, const char* what) const
{
    if (a.size() < count) {
        std::ostringstream os;
        os << what << " needs " << count << " parameters, got " << a.size();
        throw ValidationError(os.str());
    }
}

}  // namespace orf
