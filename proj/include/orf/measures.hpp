#pragma once

#include <functional>

#include "orf/orfcore.hpp"

namespace orf {

// Finitely supported probability measure on the circle or on the extended
// real line (at most one point at infinity, line only).
struct DiscreteMeasure {
    Domain domain = Domain::Circle;
    std::vector<CPoint> points;
    std::vector<double> weights;

    std::size_t size() const { return points.size(); }
    void validate() const;
};

struct GramSchmidtResult {
    // Row k holds phi_k at the support points, k = 0..rows-1.
    Mat orf_values;
    // a_1..a_m; when the basis exhausts the support the last parameter is
    // stored as the unimodular terminal value instead.
    ParamSeq a;
    // Gram pivots of the orthogonalization, for diagnostics.
    std::vector<double> pivots;
};

// Sum_j w_j conj(f_j) g_j
Complex inner_product(const DiscreteMeasure& mu, const std::vector<Complex>& f,
                      const std::vector<Complex>& g);
Complex inner_product(const DiscreteMeasure& mu, const Vec& f, const Vec& g);

// Orthonormalizes B_0..B_N at the support points (modified Gram-Schmidt with
// one reorthogonalization) and extracts the recurrence parameters a_1..a_N.
// N may equal the number of support points; then a_N is the terminal value.
GramSchmidtResult orf_from_measure(const DiscreteMeasure& mu, const PoleSeq& poles, std::size_t N);

// Closed form for the normalized Lebesgue (or Cauchy on the line) measure,
// where every a_n vanishes.
OrfValue lebesgue_orf(const PoleSeq& poles, std::size_t n, const CPoint& z);

// m equally spaced points e^{i(theta0 + 2 pi j/m)} with weights proportional
// to density(theta); uniform weights when density is empty.
DiscreteMeasure circle_grid(std::size_t m, const std::function<double(double)>& density = {},
                            double theta0 = 0.0);

// Values of phi_k (k = 0..n) for the recurrence run at every support point;
// row k, column j.
Mat orf_values_at(const ParamSeq& a, const PoleSeq& poles, std::size_t n,
                  const std::vector<CPoint>& points);

// phi^*(z) from phi(z) on the boundary: B_n(z) conj(phi(z)).
Complex superstar_on_boundary(const PoleSeq& poles, std::size_t n, const CPoint& z, Complex phi);

}  // namespace orf
