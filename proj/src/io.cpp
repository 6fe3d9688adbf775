#include "orf/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace orf::io {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& s)
{
    const std::string t = trim(s);
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(t, &used);
    } catch (const std::exception&) {
        throw ValidationError("cannot parse number '" + t + "'");
    }
    if (used != t.size()) throw ValidationError("trailing characters in number '" + t + "'");
    if (!std::isfinite(x)) throw ValidationError("number '" + t + "' is not finite");
    return x;
}

}  // namespace

Complex parse_complex(const std::string& s)
{
    const std::string t = trim(s);
    if (t.rfind("theta:", 0) == 0) return std::polar(1.0, parse_real(t.substr(6)));
    const auto c = t.find(',');
    if (c == std::string::npos) return {parse_real(t), 0.0};
    return {parse_real(t.substr(0, c)), parse_real(t.substr(c + 1))};
}

std::vector<Complex> parse_complex_list(const std::string& s)
{
    std::vector<Complex> out;
    if (trim(s).empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(parse_complex(item));
    return out;
}

Complex complex_from_json(const json& j)
{
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_string()) return parse_complex(j.get<std::string>());
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_object() && j.contains("re")) return {j.at("re").get<double>(), j.value("im", 0.0)};
    throw ValidationError("cannot read a complex number from " + j.dump());
}

std::vector<Complex> complex_list_from_json(const json& j)
{
    if (j.is_string()) return parse_complex_list(j.get<std::string>());
    if (!j.is_array()) throw ValidationError("expected a list of complex numbers, got " + j.dump());
    std::vector<Complex> out;
    for (const json& e : j) out.push_back(complex_from_json(e));
    return out;
}

json complex_to_json(Complex z)
{
    return json::array({z.real(), z.imag()});
}

std::string fmt(double x)
{
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

DiscreteMeasure measure_from_json(const json& j)
{
    if (!j.is_object()) throw ValidationError("measure must be a JSON object");
    DiscreteMeasure mu;
    const std::string dom = j.value("domain", std::string("circle"));
    if (dom == "circle")
        mu.domain = Domain::Circle;
    else if (dom == "line")
        mu.domain = Domain::Line;
    else
        throw ValidationError("unknown measure domain '" + dom + "'");
    if (!j.contains("points") || !j.contains("weights"))
        throw ValidationError("measure needs 'points' and 'weights'");
    for (const json& p : j.at("points")) {
        if (p.is_object() && p.value("infinity", false)) {
            mu.points.push_back(CPoint::infinity());
            continue;
        }
        mu.points.emplace_back(complex_from_json(p));
    }
    for (const json& w : j.at("weights")) {
        if (!w.is_number()) throw ValidationError("weights must be numbers");
        mu.weights.push_back(w.get<double>());
    }
    return mu;
}

json measure_to_json(const DiscreteMeasure& mu)
{
    json pts = json::array();
    for (const CPoint& p : mu.points) {
        json e;
        e["re"] = p.is_finite() ? p.z.real() : 0.0;
        e["im"] = p.is_finite() ? p.z.imag() : 0.0;
        e["infinity"] = !p.is_finite();
        pts.push_back(e);
    }
    json j;
    j["domain"] = domain_name(mu.domain);
    j["points"] = pts;
    j["weights"] = mu.weights;
    return j;
}

void write_matrix_csv(std::ostream& os, const Mat& M)
{
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            if (j) os << ',';
            os << fmt(M(i, j).real()) << ',' << fmt(M(i, j).imag());
        }
        os << '\n';
    }
}

json matrix_to_json(const Mat& M, const std::string& kind)
{
    json e = json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j) e.push_back(complex_to_json(M(i, j)));
    json j;
    j["n"] = M.rows();
    j["kind"] = kind;
    j["entries"] = e;
    return j;
}

void write_quadrature_csv(std::ostream& os, const DiscreteMeasure& mu)
{
    os << "node_re,node_im,weight\n";
    for (std::size_t k = 0; k < mu.size(); ++k) {
        const CPoint& p = mu.points[k];
        if (p.is_finite())
            os << fmt(p.z.real()) << ',' << fmt(p.z.imag());
        else
            os << "inf,inf";
        os << ',' << fmt(mu.weights[k]) << '\n';
    }
}

void write_points_csv(std::ostream& os, const std::vector<CPoint>& pts)
{
    os << "re,im\n";
    for (const CPoint& p : pts) {
        if (p.is_finite())
            os << fmt(p.z.real()) << ',' << fmt(p.z.imag()) << '\n';
        else
            os << "inf,inf\n";
    }
}

json eigen_to_json(const EigenResult& e)
{
    json vals = json::array();
    for (const CPoint& p : e.values) {
        if (p.is_finite())
            vals.push_back(complex_to_json(p.z));
        else
            vals.push_back("infinity");
    }
    json j;
    j["values"] = vals;
    j["residuals"] = e.residuals;
    return j;
}

namespace {

void dump_into(std::string& out, const json& j)
{
    switch (j.type()) {
    case json::value_t::number_float:
        out += fmt(j.get<double>());
        break;
    case json::value_t::array: {
        out += '[';
        bool first = true;
        for (const json& e : j) {
            if (!first) out += ',';
            first = false;
            dump_into(out, e);
        }
        out += ']';
        break;
    }
    case json::value_t::object: {
        out += '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ',';
            first = false;
            out += json(it.key()).dump();
            out += ':';
            dump_into(out, it.value());
        }
        out += '}';
        break;
    }
    default:
        out += j.dump();
    }
}

}  // namespace

std::string dump(const json& j)
{
    std::string s;
    dump_into(s, j);
    return s;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("invalid JSON in '" + path + "': " + e.what());
    }
}

}  // namespace orf::io
