#pragma once

#include "orf/opmoebius.hpp"
#include "orf/spectral.hpp"

namespace orf {

enum class Direction { Forward, Inverse };

// Cayley transform (z - i)/(z + i) and its inverse i(1 + w)/(1 - w);
// infinity <-> 1.
CPoint cayley(const CPoint& z, Direction dir = Direction::Forward);
// (X + i)^{-1} (X - i)
Mat cayley_matrix(const Mat& X);

// Half-plane map (z - alpha)/(z - conj(alpha)) and its inverse.
CPoint rl_mobius(Complex alpha, const CPoint& z, Direction dir = Direction::Forward);

// Operator version with a diagonal upper-half-plane parameter.  The inverse
// direction refuses matrices with an eigenvalue within 1e-10 of 1, which
// would correspond to mass at infinity.
Mat rl_op_mobius(const DiagParam& A, const Mat& T, Direction dir = Direction::Forward);

struct LineConversion {
    PoleSeq beta;             // circle poles, Cayley images of the line poles
    ParamSeq b;               // circle parameters
    std::vector<Complex> xi;  // xi_0, xi_1, ... (xi_0 = 1)
    Mat gamma;                // diagonal, order n
    Mat lambda;               // diagonal, order n
};

// Circle-side data equivalent to line parameters a and poles; gamma and
// lambda are built at matrix order n.
LineConversion circle_line_params(const ParamSeq& a, const PoleSeq& poles, std::size_t n);

// Unimodular factor xi_0^2 ... xi_{n-1}^2 relating line and circle parameters.
Complex xi_square_product(const LineConversion& c, std::size_t n);

struct InfinityCheck {
    bool has_mass = false;
    double margin = 0.0;  // distance from 1 to the nearest eigenvalue
};

// Whether the boundary CMV block C_n^u (a_1..a_{n-1}, terminal u) has
// eigenvalue 1, i.e. whether infinity carries mass.
InfinityCheck mass_at_infinity_check(const ParamSeq& a, std::size_t n, double tol = 1e-9);

// Quadrature for Q_n^v on the line.  Nodes come from the self-adjoint
// U^(n;u); at the excluded v, which places a node at infinity, it either
// throws or, with allow_infinity, routes through the circle-side unitary.
Quadrature rl_quadrature(const ParamSeq& a, const PoleSeq& poles, std::size_t n, Complex v,
                         bool allow_infinity = false, unsigned threads = 1);

// The v that puts a zero of Q_n^v at infinity: -phi_n(inf)/phi_n^*(inf).
Complex excluded_porf_value(const ParamSeq& a, const PoleSeq& poles, std::size_t n);

// Line measure from a_1..a_{N-1} and the terminal value, computed on the
// circle side so that a mass at infinity is handled.
DiscreteMeasure rl_reconstruct_measure(const ParamSeq& a, const PoleSeq& poles);

}  // namespace orf
