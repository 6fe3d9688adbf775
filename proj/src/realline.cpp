#include "orf/realline.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "orf/moebius.hpp"

namespace orf {

namespace {

void require_line(const PoleSeq& poles)
{
    if (poles.domain != Domain::Line) throw ValidationError("real-line operation needs line poles");
}

// Spectrum on the circle side for an order-n boundary construction; nodes
// are mapped back to the extended real line.
DiscreteMeasure circle_side_measure(const ParamSeq& a, const PoleSeq& poles, std::size_t n, Complex u,
                                    std::vector<double>& eig_weights)
{
    const LineConversion c = circle_line_params(a, poles, n);
    const Complex ub = xi_square_product(c, n) * u;
    ParamSeq b = c.b;
    b.a.resize(n - 1);
    const Mat W = truncated_rep(b, c.beta, n, Family::U, ub / std::abs(ub));
    const EigenResult e = eigensolve(W, false, true);
    DiscreteMeasure mu;
    mu.domain = Domain::Line;
    eig_weights.clear();
    for (std::size_t k = 0; k < e.values.size(); ++k) {
        const Complex w = e.values[k].z / std::abs(e.values[k].z);
        const CPoint x = cayley(CPoint(w), Direction::Inverse);
        mu.points.push_back(x.is_finite() ? CPoint(x.z.real()) : x);
        eig_weights.push_back(std::norm((*e.right_vectors)(0, static_cast<Eigen::Index>(k))));
    }
    return mu;
}

}  // namespace

CPoint cayley(const CPoint& z, Direction dir)
{
    return dir == Direction::Forward ? mobius_forward(Domain::Line, I, z) : mobius_inverse(Domain::Line, I, z);
}

Mat cayley_matrix(const Mat& X)
{
    const Mat Id = Mat::Identity(X.rows(), X.cols());
    return solve_checked(X + I * Id, X - I * Id, "matrix Cayley transform");
}

CPoint rl_mobius(Complex alpha, const CPoint& z, Direction dir)
{
    if (!(alpha.imag() > 0.0)) throw ValidationError("half-plane map needs Im alpha > 0");
    return dir == Direction::Forward ? mobius_forward(Domain::Line, alpha, z)
                                     : mobius_inverse(Domain::Line, alpha, z);
}

Mat rl_op_mobius(const DiagParam& A, const Mat& T, Direction dir)
{
    if (A.domain != Domain::Line) throw ValidationError("rl_op_mobius needs a line parameter");
    if (dir == Direction::Forward) return op_mobius_forward(A, T);
    const EigenResult e = eigensolve(T);
    for (const CPoint& l : e.values) {
        if (std::abs(l.z - 1.0) < 1e-10) {
            std::ostringstream os;
            os.precision(3);
            os << "matrix has eigenvalue " << l.z.real() << "+" << l.z.imag()
               << "i at 1: the inverse map would place mass at infinity";
            throw NumericalError(os.str());
        }
    }
    return op_mobius_inverse(A, T);
}

LineConversion circle_line_params(const ParamSeq& a, const PoleSeq& poles, std::size_t n)
{
    require_line(poles);
    poles.validate();
    a.validate();
    if (n == 0) throw ValidationError("conversion order must be at least 1");
    poles.require(n - 1, "line/circle conversion");
    if (a.size() > 0) poles.require(a.size() - 1, "line/circle conversion");

    LineConversion c;
    c.xi.resize(poles.size() + 1);
    std::vector<Complex> beta;
    for (std::size_t k = 0; k <= poles.size(); ++k) {
        const Complex bk = cayley(CPoint(poles.alpha(k))).z;
        if (k > 0) beta.push_back(bk);
        const Complex d = 1.0 - bk;
        c.xi[k] = d / std::abs(d);
    }
    c.beta = PoleSeq(beta, Domain::Circle, poles.eps);

    Complex acc = 1.0;
    for (std::size_t k = 1; k <= a.size(); ++k) {
        acc *= c.xi[k - 1] * c.xi[k - 1];
        c.b.a.push_back(acc * a.at(k));
    }
    if (a.terminal && a.size() < c.xi.size()) {
        const Complex t = acc * c.xi[a.size()] * c.xi[a.size()] * *a.terminal;
        c.b.terminal = t / std::abs(t);
    }

    // gamma_n: odd n -> conj(xi_0^2 xi_2^2 ... xi_{n-1}^2), even n -> xi_1^2 xi_3^2 ... xi_{n-1}^2
    // lambda_n: odd n -> gamma_{n-1} xi_n, even n -> gamma_{n-1} conj(xi_n)
    const auto ni = static_cast<Eigen::Index>(n);
    Vec g(ni), l(ni);
    g(0) = 1.0;
    l(0) = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
        Complex p = 1.0;
        for (std::size_t j = k % 2 == 1 ? 0 : 1; j + 1 <= k; j += 2) p *= c.xi[j] * c.xi[j];
        const auto kk = static_cast<Eigen::Index>(k);
        g(kk) = k % 2 == 1 ? std::conj(p) : p;
        l(kk) = g(kk - 1) * (k % 2 == 1 ? c.xi[k] : std::conj(c.xi[k]));
    }
    c.gamma = g.asDiagonal();
    c.lambda = l.asDiagonal();
    return c;
}

Complex xi_square_product(const LineConversion& c, std::size_t n)
{
    if (n > c.xi.size()) throw ValidationError("not enough poles for the xi product");
    Complex p = 1.0;
    for (std::size_t k = 0; k < n; ++k) p *= c.xi[k] * c.xi[k];
    return p;
}

InfinityCheck mass_at_infinity_check(const ParamSeq& a, std::size_t n, double tol)
{
    if (!a.terminal) throw ValidationError("mass at infinity check needs a terminal value");
    RepSpec s;
    s.kind = RepKind::Cmv;
    s.n = n;
    s.boundary = a.terminal;
    const Mat C = build_matrix(a, PoleSeq::zeros(n, Domain::Circle), s);
    const EigenResult e = eigensolve(C);
    InfinityCheck r;
    r.margin = std::numeric_limits<double>::infinity();
    for (const CPoint& l : e.values) r.margin = std::min(r.margin, std::abs(l.z - 1.0));
    r.has_mass = r.margin <= tol;
    return r;
}

Complex excluded_porf_value(const ParamSeq& a, const PoleSeq& poles, std::size_t n)
{
    require_line(poles);
    const OrfValue f = eval_orf(a, poles, n, CPoint::infinity());
    // Q_n^v(inf) = phi_n(inf) + v phi_n^*(inf) = 0
    return -f.phi / f.phi_star;
}

Quadrature rl_quadrature(const ParamSeq& a, const PoleSeq& poles, std::size_t n, Complex v,
                         bool allow_infinity, unsigned threads)
{
    require_line(poles);
    if (std::abs(std::abs(v) - 1.0) > 1e-10) throw ValidationError("quadrature parameter v must be unimodular");
    a.require(n, "line quadrature");
    const Complex vx = excluded_porf_value(a, poles, n);
    if (std::abs(v - vx) >= 1e-10) {
        Quadrature q = porf_quadrature(a, poles, n, v, threads);
        for (CPoint& p : q.measure.points) p = CPoint(p.z.real());
        return q;
    }
    if (!allow_infinity) {
        std::ostringstream os;
        os.precision(17);
        os << "v = (" << v.real() << "," << v.imag()
           << ") places a quadrature node at infinity; use the circle-side route";
        throw NumericalError(os.str());
    }
    Quadrature q;
    q.n = n;
    q.v = v;
    q.u = porf_u(a.at(n), v);
    q.u /= std::abs(q.u);
    q.measure = circle_side_measure(a, poles, n, q.u, q.eigen_weights);
    q.measure.weights = mass_point_weights(a, poles, q.measure.points, n, threads);
    return q;
}

DiscreteMeasure rl_reconstruct_measure(const ParamSeq& a, const PoleSeq& poles)
{
    require_line(poles);
    if (!a.terminal) throw ValidationError("reconstruction needs a terminal boundary value");
    a.validate();
    const std::size_t N = a.size() + 1;
    std::vector<double> w;
    DiscreteMeasure mu = circle_side_measure(a, poles, N, *a.terminal, w);
    const double s = std::accumulate(w.begin(), w.end(), 0.0);
    for (double& x : w) x /= s;
    mu.weights = w;
    return mu;
}

}  // namespace orf
