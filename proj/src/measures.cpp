#include "orf/measures.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "orf/moebius.hpp"

namespace orf {

void DiscreteMeasure::validate() const
{
    if (points.empty()) throw ValidationError("measure has no support points");
    if (points.size() != weights.size()) {
        std::ostringstream os;
        os << "measure has " << points.size() << " points but " << weights.size() << " weights";
        throw ValidationError(os.str());
    }
    double sum = 0.0;
    std::size_t infinities = 0;
    for (std::size_t j = 0; j < points.size(); ++j) {
        const double w = weights[j];
        if (!(w > 0.0) || !std::isfinite(w)) {
            std::ostringstream os;
            os << "weight " << j << " = " << w << " is not a positive number";
            throw ValidationError(os.str());
        }
        sum += w;
        const CPoint& p = points[j];
        if (!p.is_finite()) {
            if (domain == Domain::Circle)
                throw ValidationError("a circle measure cannot carry a point at infinity");
            ++infinities;
            continue;
        }
        if (!std::isfinite(p.z.real()) || !std::isfinite(p.z.imag()))
            throw ValidationError("support point " + std::to_string(j) + " is not finite");
        if (domain == Domain::Circle && std::abs(std::abs(p.z) - 1.0) >= 1e-12) {
            std::ostringstream os;
            os.precision(17);
            os << "support point " << j << " has modulus " << std::abs(p.z) << ", not on the unit circle";
            throw ValidationError(os.str());
        }
        if (domain == Domain::Line && std::abs(p.z.imag()) >= 1e-12) {
            std::ostringstream os;
            os.precision(17);
            os << "support point " << j << " has imaginary part " << p.z.imag() << ", not on the real line";
            throw ValidationError(os.str());
        }
    }
    if (infinities > 1) throw ValidationError("more than one support point at infinity");
    if (std::abs(sum - 1.0) > 1e-12) {
        std::ostringstream os;
        os.precision(17);
        os << "weights sum to " << sum << ", expected 1";
        throw ValidationError(os.str());
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (!points[i].is_finite() || !points[j].is_finite()) continue;
            if (std::abs(points[i].z - points[j].z) <= 1e-10) {
                std::ostringstream os;
                os << "support points " << i << " and " << j << " coincide";
                throw ValidationError(os.str());
            }
        }
}

Complex inner_product(const DiscreteMeasure& mu, const Vec& f, const Vec& g)
{
    const auto m = static_cast<Eigen::Index>(mu.weights.size());
    if (f.size() != m || g.size() != m) {
        std::ostringstream os;
        os << "inner product: " << f.size() << " and " << g.size() << " values for " << m
           << " support points";
        throw ValidationError(os.str());
    }
    Complex s = 0.0;
    for (Eigen::Index j = 0; j < m; ++j) s += mu.weights[static_cast<std::size_t>(j)] * std::conj(f(j)) * g(j);
    return s;
}

Complex inner_product(const DiscreteMeasure& mu, const std::vector<Complex>& f,
                      const std::vector<Complex>& g)
{
    const Vec fv = Eigen::Map<const Vec>(f.data(), static_cast<Eigen::Index>(f.size()));
    const Vec gv = Eigen::Map<const Vec>(g.data(), static_cast<Eigen::Index>(g.size()));
    return inner_product(mu, fv, gv);
}

Complex superstar_on_boundary(const PoleSeq& poles, std::size_t n, const CPoint& z, Complex phi)
{
    return blaschke(poles, n, z) * std::conj(phi);
}

Mat orf_values_at(const ParamSeq& a, const PoleSeq& poles, std::size_t n,
                  const std::vector<CPoint>& points)
{
    Mat V(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(points.size()));
    for (std::size_t j = 0; j < points.size(); ++j) {
        const auto all = eval_orf_all(a, poles, n, points[j]);
        for (std::size_t k = 0; k <= n; ++k)
            V(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = all[k].phi;
    }
    return V;
}

namespace {

double weighted_norm(const DiscreteMeasure& mu, const Vec& f)
{
    return std::sqrt(std::max(0.0, inner_product(mu, f, f).real()));
}

}  // namespace

GramSchmidtResult orf_from_measure(const DiscreteMeasure& mu, const PoleSeq& poles, std::size_t N)
{
    mu.validate();
    if (mu.domain != poles.domain) throw ValidationError("measure and poles live on different domains");
    poles.validate();
    poles.require(N, "parameter extraction");
    const std::size_t m = mu.size();
    if (N == 0) throw ValidationError("extraction order must be at least 1");
    if (N > m) {
        std::ostringstream os;
        os << "extraction order " << N << " exceeds the " << m << " support points";
        throw ValidationError(os.str());
    }
    const bool terminal = N == m;
    const std::size_t K = terminal ? N - 1 : N;  // highest orthogonalized index

    const auto mi = static_cast<Eigen::Index>(m);
    // Orthonormal columns phi_0..phi_K at the support points.  Column k is
    // grown from (varpi_{k-1}/varpi_k) zeta_{k-1} phi_{k-1}, which spans the
    // same space as B_0..B_k but keeps the Gram-Schmidt input well conditioned.
    Mat Q(mi, static_cast<Eigen::Index>(K + 1));
    Q.col(0).setOnes();
    GramSchmidtResult res;
    const double lead = weighted_norm(mu, Q.col(0));
    res.pivots.push_back(lead);
    Q.col(0) /= lead;

    const Vec sw = Eigen::Map<const Eigen::VectorXd>(mu.weights.data(), mi).cwiseSqrt().cast<Complex>();
    Vec zphi(mi), star(mi), ratio(mi);
    auto shifted = [&](std::size_t k) {
        const auto kp = static_cast<Eigen::Index>(k - 1);
        for (std::size_t j = 0; j < m; ++j) {
            const auto jj = static_cast<Eigen::Index>(j);
            const CPoint zp = mobius_forward(poles.domain, poles.alpha(k - 1), mu.points[j]);
            if (!zp.is_finite()) throw NumericalError("support point at the pole of a Moebius factor");
            zphi(jj) = zp.z * Q(jj, kp);
            star(jj) = superstar_on_boundary(poles, k - 1, mu.points[j], Q(jj, kp));
            ratio(jj) = scalar::varpi_ratio(poles.domain, poles.alpha(k - 1), poles.alpha(k), mu.points[j]);
        }
    };

    // On the support the recurrence reads
    //   (varpi_k/varpi_{k-1}) c phi_k = c e_k zeta_{k-1} phi_{k-1} + c e_k a_k phi^*_{k-1}
    // for the unknown unimodular phase c of the orthonormalized column; a
    // weighted least-squares fit of the two coefficients gives c (e_k > 0) and a_k.
    std::vector<Complex> params;
    for (std::size_t k = 1; k <= K; ++k) {
        const auto kk = static_cast<Eigen::Index>(k);
        shifted(k);
        Q.col(kk) = ratio.cwiseProduct(zphi);
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index j = 0; j < kk; ++j) {
                const Complex h = inner_product(mu, Vec(Q.col(j)), Vec(Q.col(kk)));
                Q.col(kk) -= h * Q.col(j);
            }
        }
        const double piv = weighted_norm(mu, Q.col(kk));
        res.pivots.push_back(piv);
        if (!(piv >= 1e-13 * lead)) {
            std::ostringstream os;
            os << "Gram-Schmidt breakdown at index " << k << " (pivot " << piv
               << "): support degenerate for " << m << " points";
            throw NumericalError(os.str());
        }
        Q.col(kk) /= piv;

        Mat D(mi, 2);
        D.col(0) = sw.cwiseProduct(zphi);
        D.col(1) = sw.cwiseProduct(star);
        const Vec g = sw.cwiseProduct(Vec(Q.col(kk).cwiseQuotient(ratio)));
        const Vec xy = D.colPivHouseholderQr().solve(g);
        const Complex x = xy(0), y = xy(1);
        if (!(std::abs(x) > 0.0)) {
            std::ostringstream os;
            os << "parameter extraction degenerate at index " << k;
            throw NumericalError(os.str());
        }
        const Complex ak = y / x;
        if (!(std::abs(ak) < 1.0)) {
            std::ostringstream os;
            os.precision(17);
            os << "extracted parameter a_" << k << " has modulus " << std::abs(ak);
            throw NumericalError(os.str());
        }
        params.push_back(ak);
        Q.col(kk) *= std::conj(x) / std::abs(x);
    }

    res.a.a = params;
    if (terminal) {
        // The order-N boundary function zeta_{N-1} phi_{N-1} + u phi^*_{N-1}
        // vanishes on the whole support.
        shifted(N);
        const Complex u = -inner_product(mu, star, zphi) / inner_product(mu, star, star);
        if (std::abs(std::abs(u) - 1.0) > 1e-9) {
            std::ostringstream os;
            os.precision(17);
            os << "terminal value has modulus " << std::abs(u) << ", expected 1";
            throw NumericalError(os.str());
        }
        res.a.terminal = u / std::abs(u);
    }
    res.orf_values = Q.transpose();
    return res;
}

OrfValue lebesgue_orf(const PoleSeq& poles, std::size_t n, const CPoint& z)
{
    OrfValue r;
    r.n = n;
    r.z = z;
    if (n == 0) return r;
    poles.require(n, "Lebesgue ORF");
    const Complex an = poles.alpha(n);
    const Complex a0 = poles.alpha0();
    const double scale = scalar::eta(poles.domain, an) / scalar::eta(poles.domain, a0);
    if (!z.is_finite()) {
        if (poles.domain == Domain::Circle)
            throw ValidationError("the point at infinity is only supported on the line");
        r.phi = scale;
        r.phi_star = scale;
        return r;
    }
    const Complex den = scalar::varpi(poles.domain, an, z.z);
    if (std::abs(den) < kPoleGuard) {
        std::ostringstream os;
        os << "evaluation point hits the pole of factor " << n;
        throw NumericalError(os.str());
    }
    r.phi = scale * scalar::varpi_star(poles.domain, a0, z.z) / den * blaschke(poles, n - 1, z);
    r.phi_star = scale * scalar::varpi(poles.domain, a0, z.z) / den;
    return r;
}

DiscreteMeasure circle_grid(std::size_t m, const std::function<double(double)>& density,
                            double theta0)
{
    if (m == 0) throw ValidationError("grid needs at least one point");
    DiscreteMeasure mu;
    mu.domain = Domain::Circle;
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double th = theta0 + 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
        mu.points.emplace_back(std::polar(1.0, th));
        const double w = density ? density(th) : 1.0;
        if (!(w > 0.0)) throw ValidationError("density must be positive on the grid");
        mu.weights.push_back(w);
        sum += w;
    }
    for (double& w : mu.weights) w /= sum;
    return mu;
}

}  // namespace orf
