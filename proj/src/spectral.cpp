#include "orf/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <thread>

#include "orf/moebius.hpp"
#include "orf/opmoebius.hpp"

namespace orf {

namespace {

double snapped_arg(Complex x)
{
    if (std::abs(x.imag()) <= 1e-14 * std::abs(x)) return x.real() < 0.0 ? std::numbers::pi : 0.0;
    return std::arg(x);
}

void check_cap(const Mat& M, std::size_t cap)
{
    if (M.rows() != M.cols()) throw ValidationError("eigensolve needs a square matrix");
    if (static_cast<std::size_t>(M.rows()) > cap) {
        std::ostringstream os;
        os << "matrix order " << M.rows() << " exceeds the eigensolver cap " << cap;
        throw ValidationError(os.str());
    }
    if (!M.allFinite()) throw ValidationError("eigensolve: matrix has non-finite entries");
}

}  // namespace

std::vector<Complex> EigenResult::finite_values() const
{
    std::vector<Complex> v;
    for (const CPoint& p : values)
        if (p.is_finite()) v.push_back(p.z);
    return v;
}

bool spectral_less(Complex x, Complex y)
{
    const double ax = snapped_arg(x), ay = snapped_arg(y);
    if (ax != ay) return ax < ay;
    return std::abs(x) < std::abs(y);
}

void sort_spectrum(std::vector<Complex>& v)
{
    std::sort(v.begin(), v.end(), spectral_less);
}

EigenResult Eigensolver::solve(const Mat& M, bool want_left, bool want_right)
{
    check_cap(M, cap_);
    const Eigen::Index n = M.rows();
    EigenResult r;
    if (n == 0) return r;
    solver_.compute(M, true);
    if (solver_.info() != Eigen::Success) {
        std::ostringstream os;
        os << "eigensolver did not converge for a matrix of order " << n;
        throw NumericalError(os.str());
    }
    const Vec lam = solver_.eigenvalues();
    Mat X = solver_.eigenvectors();

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return spectral_less(lam(i), lam(j)); });

    Mat Xs(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Xs.col(k) = X.col(order[static_cast<std::size_t>(k)]);
        Xs.col(k).normalize();
        r.values.emplace_back(lam(order[static_cast<std::size_t>(k)]));
    }
    const double nm = std::max(M.norm(), std::numeric_limits<double>::min());
    r.residuals.resize(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex l = r.values[static_cast<std::size_t>(k)].z;
        r.residuals[static_cast<std::size_t>(k)] = (M * Xs.col(k) - l * Xs.col(k)).norm() / nm;
    }
    if (want_left) {
        const Mat Y = solve_checked(Xs, Mat::Identity(n, n), "left eigenvectors (eigenvector matrix inverse)");
        Mat Yn = Y;
        for (Eigen::Index k = 0; k < n; ++k) {
            Yn.row(k).normalize();
            const Complex l = r.values[static_cast<std::size_t>(k)].z;
            const double res = (Yn.row(k) * M - l * Yn.row(k)).norm() / nm;
            r.residuals[static_cast<std::size_t>(k)] = std::max(r.residuals[static_cast<std::size_t>(k)], res);
        }
        r.left_vectors = Yn;
    }
    if (want_right) r.right_vectors = Xs;
    return r;
}

EigenResult eigensolve(const Mat& M, bool want_left, bool want_right)
{
    Eigensolver s;
    return s.solve(M, want_left, want_right);
}

EigenResult pair_spectrum(const Mat& T, const Mat& S)
{
    if (T.rows() != S.rows() || T.cols() != S.cols() || T.rows() != T.cols())
        throw ValidationError("pair_spectrum: T and S must be square of equal size");
    const Eigen::Index n = T.rows();
    if (reciprocal_condition(S) * kMaxCondition >= 1.0)
        return eigensolve(solve_checked(S, T, "pencil"), false, false);

    // Reversed pencil around a shift sigma: mu eigenvalue of (T - sigma S)^{-1} S
    // gives lambda = sigma + 1/mu, with mu = 0 meaning lambda = infinity.
    const Complex shifts[] = {{0.0, 0.0}, {0.5, 0.25}, {-0.3, 0.7}, {1.7, -1.1}, {-2.3, -0.4}};
    for (const Complex sigma : shifts) {
        const Mat R = T - sigma * S;
        if (reciprocal_condition(R) * kMaxCondition < 1.0) continue;
        const Mat K = solve_checked(R, S, "shifted pencil");
        EigenResult e = eigensolve(K, false, false);
        const double scale = std::max(K.norm(), 1.0);
        std::vector<CPoint> vals;
        for (const CPoint& m : e.values) {
            if (std::abs(m.z) <= 1e-10 * scale)
                vals.push_back(CPoint::infinity());
            else
                vals.emplace_back(sigma + 1.0 / m.z);
        }
        std::vector<CPoint> finite, inf;
        for (const CPoint& p : vals) (p.is_finite() ? finite : inf).push_back(p);
        std::stable_sort(finite.begin(), finite.end(),
                         [](const CPoint& x, const CPoint& y) { return spectral_less(x.z, y.z); });
        EigenResult r;
        r.values = finite;
        r.values.insert(r.values.end(), inf.begin(), inf.end());
        r.residuals.assign(static_cast<std::size_t>(n), 0.0);
        return r;
    }
    throw NumericalError("pencil is singular: T and S share a null vector (indefinite pencil)");
}

std::vector<std::size_t> optimal_matching(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
    if (a.size() != b.size()) throw ValidationError("matching needs sets of equal size");
    const std::size_t n = a.size();
    // Hungarian method with row/column potentials, 1-based internal arrays.
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = std::abs(a[i0 - 1] - b[j - 1]) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t j = 1; j <= n; ++j) perm[p[j] - 1] = j - 1;
    return perm;
}

double matched_distance(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
    const auto perm = optimal_matching(a, b);
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[perm[i]]));
    return d;
}

double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
    if (a.empty() || b.empty()) throw ValidationError("Hausdorff distance of an empty set");
    auto directed = [](const std::vector<Complex>& x, const std::vector<Complex>& y) {
        double d = 0.0;
        for (const Complex p : x) {
            double m = std::numeric_limits<double>::infinity();
            for (const Complex q : y) m = std::min(m, std::abs(p - q));
            d = std::max(d, m);
        }
        return d;
    };
    return std::max(directed(a, b), directed(b, a));
}

std::vector<Complex> zeros_orf(const ParamSeq& a, const PoleSeq& poles, std::size_t n, ZeroRoute via)
{
    EigenResult e;
    switch (via) {
    case ZeroRoute::V:
        e = eigensolve(truncated_rep(a, poles, n, Family::V));
        break;
    case ZeroRoute::U:
        e = eigensolve(truncated_rep(a, poles, n, Family::U));
        break;
    case ZeroRoute::Pair: {
        const auto [T, S] = pair_rep(a, poles, n, Family::U);
        e = pair_spectrum(T, S);
        break;
    }
    case ZeroRoute::Tridiagonal: {
        const auto [T, S] = tridiagonal_pair(a, poles, n);
        e = pair_spectrum(T, S);
        break;
    }
    }
    const auto z = e.finite_values();
    if (z.size() != n) throw NumericalError("representation produced infinite eigenvalues");
    return z;
}

RowVec orf_row(const ParamSeq& a, const PoleSeq& poles, std::size_t n, const CPoint& lambda)
{
    if (n == 0) throw ValidationError("order must be at least 1");
    const auto all = eval_orf_all(a, poles, n - 1, lambda);
    RowVec r(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) r(static_cast<Eigen::Index>(k)) = all[k].phi;
    return r;
}

namespace {

// zeta_first zeta_{first+2} ... zeta_last, empty when last < first.
Complex step_product(const PoleSeq& poles, long first, long last, const CPoint& z)
{
    if (last < first) return 1.0;
    return zeta_product(poles, static_cast<std::size_t>(first), static_cast<std::size_t>(last), 2, z);
}

}  // namespace

RowVec chi_left_row(const ParamSeq& a, const PoleSeq& poles, std::size_t n, const CPoint& lambda)
{
    if (n == 0) throw ValidationError("order must be at least 1");
    const auto all = eval_orf_all(a, poles, n - 1, lambda);
    const long l = static_cast<long>((n - 1) / 2);
    RowVec r(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const long j = static_cast<long>(k / 2);
        const Complex f = step_product(poles, 2 * j + 2, 2 * l, lambda);
        r(static_cast<Eigen::Index>(k)) = f * (k % 2 == 0 ? all[k].phi_star : all[k].phi);
    }
    return r;
}

Vec chi_right_column(const ParamSeq& a, const PoleSeq& poles, std::size_t n, const CPoint& lambda)
{
    if (n == 0) throw ValidationError("order must be at least 1");
    const auto all = eval_orf_all(a, poles, n - 1, lambda);
    const long m = static_cast<long>(n / 2);
    Vec c(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const long j = static_cast<long>(k / 2);
        if (k % 2 == 0)
            c(static_cast<Eigen::Index>(k)) = step_product(poles, 2 * j + 1, 2 * m - 1, lambda) * all[k].phi;
        else
            c(static_cast<Eigen::Index>(k)) = step_product(poles, 2 * j + 3, 2 * m - 1, lambda) * all[k].phi_star;
    }
    return c;
}

namespace {

// Eigen-decomposes a unitary (circle) or self-adjoint (line) representation
// and reads the weights off the first components of the eigenvectors.
DiscreteMeasure spectral_measure(const Mat& W, Domain d, std::vector<double>& eig_weights)
{
    const EigenResult e = eigensolve(W, false, true);
    DiscreteMeasure mu;
    mu.domain = d;
    const Mat& X = *e.right_vectors;
    eig_weights.clear();
    for (std::size_t k = 0; k < e.values.size(); ++k) {
        Complex z = e.values[k].z;
        if (d == Domain::Circle)
            z /= std::abs(z);
        else
            z = z.real();
        mu.points.emplace_back(z);
        eig_weights.push_back(std::norm(X(0, static_cast<Eigen::Index>(k))));
    }
    for (std::size_t i = 0; i < mu.points.size(); ++i)
        for (std::size_t j = i + 1; j < mu.points.size(); ++j)
            if (std::abs(mu.points[i].z - mu.points[j].z) < 1e-10) {
                std::ostringstream os;
                os << "quadrature nodes " << i << " and " << j << " collide";
                throw NumericalError(os.str());
            }
    return mu;
}

}  // namespace

Quadrature porf_quadrature(const ParamSeq& a, const PoleSeq& poles, std::size_t n, Complex v,
                           unsigned threads)
{
    if (std::abs(std::abs(v) - 1.0) > 1e-10) throw ValidationError("quadrature parameter v must be unimodular");
    a.require(n, "quadrature");
    Quadrature q;
    q.n = n;
    q.v = v;
    q.u = porf_u(a.at(n), v);
    q.u /= std::abs(q.u);
    const Mat W = truncated_rep(a, poles, n, Family::U, q.u);
    q.measure = spectral_measure(W, poles.domain, q.eigen_weights);
    q.measure.weights = mass_point_weights(a, poles, q.measure.points, n, threads);
    return q;
}

DiscreteMeasure reconstruct_measure(const ParamSeq& a, const PoleSeq& poles)
{
    if (!a.terminal) throw ValidationError("reconstruction needs a terminal boundary value");
    a.validate();
    const std::size_t N = a.size() + 1;
    const Mat W = truncated_rep(a, poles, N, Family::U, *a.terminal);
    std::vector<double> w;
    DiscreteMeasure mu = spectral_measure(W, poles.domain, w);
    const double s = std::accumulate(w.begin(), w.end(), 0.0);
    for (double& x : w) x /= s;
    mu.weights = w;
    return mu;
}

double mass_point_weight(const ParamSeq& a, const PoleSeq& poles, const CPoint& lambda, std::size_t N)
{
    if (N == 0) throw ValidationError("mass point weight needs N >= 1");
    const auto all = eval_orf_all(a, poles, N - 1, lambda);
    double s = 0.0;
    for (const OrfValue& v : all) s += std::norm(v.phi);
    return 1.0 / s;
}

std::vector<double> mass_point_weights(const ParamSeq& a, const PoleSeq& poles,
                                       const std::vector<CPoint>& points, std::size_t N, unsigned threads)
{
    std::vector<double> w(points.size());
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(points.size(), 1));
    if (workers == 1) {
        for (std::size_t j = 0; j < points.size(); ++j) w[j] = mass_point_weight(a, poles, points[j], N);
        return w;
    }
    // Each worker owns a strided slice; the first exception is rethrown.
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t j = t; j < points.size(); j += workers)
                    w[j] = mass_point_weight(a, poles, points[j], N);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (std::thread& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return w;
}

std::vector<Complex> limit_point_sequence(const ParamSeq& a, const PoleSeq& poles)
{
    if (a.size() < 2) throw ValidationError("limit point sequence needs at least two parameters");
    poles.require(a.size() - 1, "limit point sequence");
    std::vector<Complex> w;
    for (std::size_t n = 1; n + 1 <= a.size(); ++n) {
        const Complex x = -std::conj(a.at(n)) * a.at(n + 1);
        const CPoint p = mobius_inverse(poles.domain, poles.alpha(n), CPoint(x));
        if (!p.is_finite()) throw NumericalError("limit point sequence reaches infinity");
        w.push_back(p.z);
    }
    return w;
}

std::vector<Complex> cluster_tail(const std::vector<Complex>& seq, double tol, double fraction)
{
    const auto start = static_cast<std::size_t>(std::floor(static_cast<double>(seq.size()) * (1.0 - fraction)));
    std::vector<Complex> centers;
    std::vector<std::size_t> counts;
    for (std::size_t i = std::min(start, seq.size()); i < seq.size(); ++i) {
        bool merged = false;
        for (std::size_t c = 0; c < centers.size(); ++c) {
            if (std::abs(seq[i] - centers[c]) < tol) {
                centers[c] = (centers[c] * static_cast<double>(counts[c]) + seq[i]) / static_cast<double>(counts[c] + 1);
                ++counts[c];
                merged = true;
                break;
            }
        }
        if (!merged) {
            centers.push_back(seq[i]);
            counts.push_back(1);
        }
    }
    return centers;
}

Complex krein_k(const ParamSeq& a, const PoleSeq& poles, std::size_t n, Complex z)
{
    const Complex al = poles.alpha(n);
    return a.at(n) * scalar::varpi_star(poles.domain, al, z) + a.at(n + 1) * scalar::varpi(poles.domain, al, z);
}

KreinSequences krein_two_point(const ParamSeq& a, const PoleSeq& poles, Complex l1, Complex l2)
{
    if (std::abs(std::abs(l1) - 1.0) > 1e-10 || std::abs(std::abs(l2) - 1.0) > 1e-10)
        throw ValidationError("Krein points must be unimodular");
    if (poles.domain != Domain::Circle) throw ValidationError("Krein sequences are defined for circle poles");
    a.validate();
    const std::size_t N = a.size();
    poles.require(N, "Krein sequences");
    const DerivedParams d = derived_params(a, poles);
    const Domain dm = poles.domain;
    KreinSequences k;
    for (std::size_t n = 2; n + 1 <= N; ++n) {
        const Complex an = poles.alpha(n), ap = poles.alpha(n - 1), anx = poles.alpha(n + 1);
        const double rho_n = d.rho[n - 1], rho_n1 = d.rho[n];
        const Complex mixed =
            rho_n * (scalar::varpi(dm, an, l1) / scalar::varpi(dm, an, an) * krein_k(a, poles, n, l2) -
                     scalar::varpi_star(dm, ap, l2) / scalar::varpi(dm, ap, ap) * krein_k(a, poles, n - 1, l1));
        const double rm = d.rho_minus[n - 1], rp = d.rho_plus[n];
        const Complex quad = std::conj(krein_k(a, poles, n, l1)) * krein_k(a, poles, n, l2) +
                             rm * rm * std::conj(scalar::varpi_star(dm, ap, l1)) * scalar::varpi_star(dm, ap, l2) +
                             rp * rp * std::conj(scalar::varpi(dm, anx, l1)) * scalar::varpi(dm, anx, l2);
        k.index.push_back(n);
        k.s1.push_back(rho_n * rho_n1);
        k.s2.push_back(std::abs(mixed));
        k.s3.push_back(std::abs(quad));
    }
    return k;
}

bool ArcDescriptor::in_predicted_set(Complex w) const
{
    if (empty) return true;
    const CPoint z = mobius_forward(alpha, CPoint(w));
    if (!z.is_finite()) return true;
    return std::abs(std::arg(z.z / lambda)) >= half_angle;
}

ArcDescriptor lopez_arc(Complex alpha, double a, Complex lambda)
{
    if (!(a >= 0.0 && a <= 1.0)) throw ValidationError("arc parameter a must lie in [0, 1]");
    if (std::abs(std::abs(lambda) - 1.0) > 1e-10) throw ValidationError("arc center must be unimodular");
    if (!(std::abs(alpha) < 1.0)) throw ValidationError("arc pole must lie in the open unit disk");
    ArcDescriptor r;
    r.alpha = alpha;
    r.lambda = lambda;
    r.half_angle = 2.0 * std::asin(a);
    r.empty = r.half_angle == 0.0;
    r.first = mobius_inverse(alpha, CPoint(lambda * std::polar(1.0, -r.half_angle))).z;
    r.last = mobius_inverse(alpha, CPoint(lambda * std::polar(1.0, r.half_angle))).z;
    return r;
}

double compare_truncated_spectra(const ParamSeq& a, const PoleSeq& poles_a, const ParamSeq& b,
                                 const PoleSeq& poles_b, std::size_t n)
{
    const auto ea = eigensolve(truncated_rep(a, poles_a, n, Family::U, Complex(1.0))).finite_values();
    const auto eb = eigensolve(truncated_rep(b, poles_b, n, Family::U, Complex(1.0))).finite_values();
    return hausdorff_distance(ea, eb);
}

}  // namespace orf
