#pragma once

#include <optional>

#include <Eigen/Eigenvalues>

#include "orf/matrices.hpp"
#include "orf/measures.hpp"

namespace orf {

struct EigenResult {
    std::vector<CPoint> values;
    // Columns are right eigenvectors, rows are left eigenvectors, in the
    // order of values.
    std::optional<Mat> right_vectors;
    std::optional<Mat> left_vectors;
    // ||M x - lambda x|| / (||M|| ||x||), maximized with the left-vector
    // counterpart when left vectors are computed.
    std::vector<double> residuals;

    std::vector<Complex> finite_values() const;
};

inline constexpr std::size_t kDefaultEigenCap = 512;

// Dense complex eigensolver (Schur decomposition via Eigen).  One instance
// keeps its workspace between calls and must not be shared across threads.
class Eigensolver {
public:
    explicit Eigensolver(std::size_t cap = kDefaultEigenCap) : cap_(cap) {}
    EigenResult solve(const Mat& M, bool want_left = false, bool want_right = false);

private:
    std::size_t cap_;
    Eigen::ComplexEigenSolver<Mat> solver_;
};

EigenResult eigensolve(const Mat& M, bool want_left = false, bool want_right = false);

// Ordering used for every reported spectrum: ascending argument in (-pi, pi],
// then ascending modulus.  Values within 1e-14 relative of the real axis
// count as real.
bool spectral_less(Complex x, Complex y);
void sort_spectrum(std::vector<Complex>& v);

// Eigenvalues of the pencil T - lambda S.  Infinite eigenvalues are reported
// with at_infinity set.
EigenResult pair_spectrum(const Mat& T, const Mat& S);

// Optimal assignment (Hungarian method) between two equally sized point sets
// minimizing the total distance; perm[i] is the partner of a[i] in b.
std::vector<std::size_t> optimal_matching(const std::vector<Complex>& a, const std::vector<Complex>& b);
// Largest distance between matched pairs.
double matched_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);
double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

enum class ZeroRoute { V, U, Pair, Tridiagonal };

// Zeros of phi_n as eigenvalues of one of the order-n representations.
std::vector<Complex> zeros_orf(const ParamSeq& a, const PoleSeq& poles, std::size_t n, ZeroRoute via);

// Left eigenvector (phi_0 .. phi_{n-1})(lambda) of V^(n).
RowVec orf_row(const ParamSeq& a, const PoleSeq& poles, std::size_t n, const CPoint& lambda);
// Left and right eigenvectors of U^(n) built from the chi functions: the row
// B^e_l (chi_0 .. chi_{n-1}) with l = [(n-1)/2] and the column
// B^o_m (chi_{0*} .. chi_{n-1*})^T with m = [n/2].  Both are evaluated in a
// form that stays finite at the zeros of phi_n.
RowVec chi_left_row(const ParamSeq& a, const PoleSeq& poles, std::size_t n, const CPoint& lambda);
Vec chi_right_column(const ParamSeq& a, const PoleSeq& poles, std::size_t n, const CPoint& lambda);

struct Quadrature {
    DiscreteMeasure measure;  // weights from the sum formula
    std::vector<double> eigen_weights;  // |first component|^2 of normalized eigenvectors
    std::size_t n = 0;
    Complex v{1.0, 0.0};
    Complex u{1.0, 0.0};
};

// Nodes and weights of the rational Szego quadrature attached to
// Q_n^v = phi_n + v phi_n^*.
// Weights are evaluated on `threads` worker threads.
Quadrature porf_quadrature(const ParamSeq& a, const PoleSeq& poles, std::size_t n, Complex v,
                           unsigned threads = 1);

// Measure whose parameters are a_1..a_{N-1} followed by the terminal value.
DiscreteMeasure reconstruct_measure(const ParamSeq& a, const PoleSeq& poles);

// (sum_{k<N} |phi_k(lambda)|^2)^{-1}
double mass_point_weight(const ParamSeq& a, const PoleSeq& poles, const CPoint& lambda, std::size_t N);
std::vector<double> mass_point_weights(const ParamSeq& a, const PoleSeq& poles,
                                       const std::vector<CPoint>& points, std::size_t N, unsigned threads = 1);

// w_n = inverse Moebius at alpha_n of -conj(a_n) a_{n+1}, n = 1..N-1.
std::vector<Complex> limit_point_sequence(const ParamSeq& a, const PoleSeq& poles);

// Centers of the clusters formed by the trailing fraction of a sequence
// (points closer than tol are merged, in order of appearance).
std::vector<Complex> cluster_tail(const std::vector<Complex>& seq, double tol = 1e-3,
                                  double fraction = 0.2);

// k_n(z) = a_n varpi_n^*(z) + a_{n+1} varpi_n(z)
Complex krein_k(const ParamSeq& a, const PoleSeq& poles, std::size_t n, Complex z);

struct KreinSequences {
    std::vector<std::size_t> index;  // n for each entry
    std::vector<double> s1;          // rho_n rho_{n+1}
    std::vector<double> s2;          // modulus of the mixed condition
    std::vector<double> s3;          // modulus of the quadratic condition
};

// The three sequences that tend to 0 iff the derived set of the support is
// contained in {lambda1, lambda2}; evaluated for n = 2..N-1.
KreinSequences krein_two_point(const ParamSeq& a, const PoleSeq& poles, Complex lambda1,
                               Complex lambda2);

struct ArcDescriptor {
    Complex alpha{0.0, 0.0};
    Complex lambda{1.0, 0.0};
    double half_angle = 0.0;  // 2 arcsin a
    Complex first{1.0, 0.0};  // image of lambda e^{-i half_angle}
    Complex last{1.0, 0.0};   // image of lambda e^{+i half_angle}
    bool empty = true;

    // Membership of a unimodular w in the predicted derived set, i.e. the
    // circle minus the image of the open arc.
    bool in_predicted_set(Complex w) const;
};

ArcDescriptor lopez_arc(Complex alpha, double a, Complex lambda);

// Hausdorff distance between the spectra of the order-n boundary unitaries
// (terminal value 1) built from (a, poles_a) and (b, poles_b).
double compare_truncated_spectra(const ParamSeq& a, const PoleSeq& poles_a, const ParamSeq& b,
                                 const PoleSeq& poles_b, std::size_t n);

}  // namespace orf
