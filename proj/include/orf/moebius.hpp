#pragma once

#include "orf/types.hpp"

namespace orf {

// Scalar factors of the linear fractional map attached to a pole.
//   circle: varpi(z) = 1 - conj(alpha) z,  varpi_star(z) = z - alpha
//   line:   varpi(z) = z - conj(alpha),    varpi_star(z) = z - alpha
namespace scalar {

Complex varpi(Domain d, Complex alpha, Complex z);
Complex varpi_star(Domain d, Complex alpha, Complex z);

// zeta_alpha(z) = varpi_star / varpi, finite z only
Complex zeta(Domain d, Complex alpha, Complex z);
// inverse map: circle (w + alpha) / (1 + conj(alpha) w),
//              line   (alpha - conj(alpha) w) / (1 - w)
Complex zeta_inv(Domain d, Complex alpha, Complex w);

double eta(Domain d, Complex alpha);

// Point where the map has its pole (1/conj(alpha) on the circle, conj(alpha)
// on the line).  Infinite for alpha = 0 on the circle.
CPoint pole_of(Domain d, Complex alpha);

// varpi_{alpha_prev}(z) / varpi_{alpha_next}(z), including z = infinity.
Complex varpi_ratio(Domain d, Complex alpha_prev, Complex alpha_next, const CPoint& z);

}  // namespace scalar

// Points closer than this to the pole of a map are sent to infinity.
inline constexpr double kPoleSnap = 1e-12;

CPoint mobius_forward(Complex alpha, const CPoint& z);
CPoint mobius_inverse(Complex alpha, const CPoint& w);
double eta(Complex alpha);

// Domain-aware versions used by the real-line module and by generic code.
CPoint mobius_forward(Domain d, Complex alpha, const CPoint& z);
CPoint mobius_inverse(Domain d, Complex alpha, const CPoint& w);

enum class BlaschkeVariant { Full, Odd, Even };

// B_n, B_n^o = zeta_1 zeta_3 ... zeta_{2n-1} or B_n^e = zeta_2 zeta_4 ... zeta_{2n}.
Complex blaschke(const PoleSeq& poles, std::size_t n, const CPoint& z,
                 BlaschkeVariant variant = BlaschkeVariant::Full);

// zeta_{first} zeta_{first+step} ... up to and including index last;
// empty product is 1.
Complex zeta_product(const PoleSeq& poles, std::size_t first, std::size_t last,
                     std::size_t step, const CPoint& z);

}  // namespace orf
