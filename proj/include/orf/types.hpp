#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace orf {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RowVec = Eigen::RowVectorXcd;

inline constexpr Complex I{0.0, 1.0};

enum class Domain { Circle, Line };

const char* domain_name(Domain d);

// Bad input: out-of-range poles or parameters, wrong lengths, illegal options.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Conditioning failure, non-convergence, Gram breakdown, pole hits.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Point of the extended complex plane.
struct CPoint {
    Complex z{0.0, 0.0};
    bool at_infinity = false;

    CPoint() = default;
    CPoint(Complex v) : z(v) {}
    CPoint(double re, double im = 0.0) : z(re, im) {}

    static CPoint infinity()
    {
        CPoint p;
        p.at_infinity = true;
        return p;
    }
    bool is_finite() const { return !at_infinity; }
};

bool approx_equal(const CPoint& a, const CPoint& b, double tol);

// Poles alpha_1..alpha_N together with the distinguished alpha_0
// (0 on the circle, i on the line).
struct PoleSeq {
    Domain domain = Domain::Circle;
    std::vector<Complex> alphas;
    double eps = 1e-8;

    PoleSeq() = default;
    PoleSeq(std::vector<Complex> a, Domain d = Domain::Circle, double margin = 1e-8)
        : domain(d), alphas(std::move(a)), eps(margin) {}

    static PoleSeq zeros(std::size_t n, Domain d = Domain::Circle);

    Complex alpha0() const { return domain == Domain::Circle ? Complex(0.0) : I; }
    // alpha(0) is alpha_0; alpha(k) for k >= 1 is alphas[k-1]
    Complex alpha(std::size_t k) const;
    std::size_t size() const { return alphas.size(); }

    // Throws ValidationError when a pole leaves the admissible region.
    void validate() const;
    void require(std::size_t count, const char* what) const;
};

// Recurrence parameters a_1..a_N with an optional unimodular terminal value.
// A boundary construction of order n uses a_1..a_{n-1} and the terminal in
// place of a_n.
struct ParamSeq {
    std::vector<Complex> a;
    std::optional<Complex> terminal;

    ParamSeq() = default;
    ParamSeq(std::vector<Complex> v) : a(std::move(v)) {}
    ParamSeq(std::vector<Complex> v, Complex u) : a(std::move(v)), terminal(u) {}

    Complex at(std::size_t k) const;  // 1-based
    std::size_t size() const { return a.size(); }
    void validate() const;
    void require(std::size_t count, const char* what) const;
};

}  // namespace orf
