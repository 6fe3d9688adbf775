// orfcli: command-line front end over the orf library.
//
// Every subcommand parses a job, calls one library routine and serializes
// the result.  A --config JSON file overrides flags given on the command
// line, key by key.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orf/io.hpp"
#include "orf/realline.hpp"

using namespace orf;
using io::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct JobConfig {
    std::string command;
    std::optional<std::string> measure_path;
    std::optional<json> measure_inline;
    std::optional<std::vector<Complex>> poles;
    std::optional<std::vector<Complex>> params;
    std::optional<Complex> terminal;
    std::optional<Complex> boundary;
    std::optional<std::size_t> order;
    std::optional<Domain> domain;
    std::optional<double> margin;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<std::string> kind;
    std::optional<std::string> route;
    unsigned threads = 1;
    bool allow_infinity = false;
    std::optional<Complex> lambda1;
    std::optional<Complex> lambda2;
    std::optional<Complex> arc_alpha;
    std::optional<double> arc_a;
    std::optional<Complex> arc_lambda;
};

// Raw flag values before conversion.
struct Flags {
    std::string measure, poles, params, terminal, boundary, domain, out, format, kind, route;
    std::string lambda1, lambda2, arc_alpha, arc_lambda, config;
    std::optional<long> order;
    std::optional<double> margin, arc_a;
    std::optional<unsigned> threads;
    bool allow_infinity = false;
};

const std::vector<std::string> kConfigKeys = {
    "command", "measure", "poles", "params", "a", "terminal", "boundary", "order", "domain", "margin",
    "out", "format", "kind", "route", "threads", "allow_infinity", "lambda1", "lambda2", "arc_alpha",
    "arc_a", "arc_lambda"};

Domain parse_domain(const std::string& s)
{
    if (s == "circle") return Domain::Circle;
    if (s == "line") return Domain::Line;
    throw ValidationError("domain must be 'circle' or 'line', got '" + s + "'");
}

std::size_t checked_order(long n)
{
    if (n < 1) throw ValidationError("order must be a positive integer, got " + std::to_string(n));
    return static_cast<std::size_t>(n);
}

double finite_number(const json& j, const std::string& key)
{
    if (!j.is_number()) throw ValidationError("'" + key + "' must be a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw ValidationError("'" + key + "' is not finite");
    return x;
}

void apply_flags(JobConfig& c, const Flags& f)
{
    if (!f.measure.empty()) c.measure_path = f.measure;
    if (!f.poles.empty()) c.poles = io::parse_complex_list(f.poles);
    if (!f.params.empty()) c.params = io::parse_complex_list(f.params);
    if (!f.terminal.empty()) c.terminal = io::parse_complex(f.terminal);
    if (!f.boundary.empty()) c.boundary = io::parse_complex(f.boundary);
    if (f.order) c.order = checked_order(*f.order);
    if (!f.domain.empty()) c.domain = parse_domain(f.domain);
    if (f.margin) c.margin = *f.margin;
    if (!f.out.empty()) c.out = f.out;
    if (!f.format.empty()) c.format = f.format;
    if (!f.kind.empty()) c.kind = f.kind;
    if (!f.route.empty()) c.route = f.route;
    if (f.threads) c.threads = *f.threads;
    if (f.allow_infinity) c.allow_infinity = true;
    if (!f.lambda1.empty()) c.lambda1 = io::parse_complex(f.lambda1);
    if (!f.lambda2.empty()) c.lambda2 = io::parse_complex(f.lambda2);
    if (!f.arc_alpha.empty()) c.arc_alpha = io::parse_complex(f.arc_alpha);
    if (f.arc_a) c.arc_a = *f.arc_a;
    if (!f.arc_lambda.empty()) c.arc_lambda = io::parse_complex(f.arc_lambda);
}

void apply_key(JobConfig& c, const std::string& key, const json& v)
{
    if (key == "command") {
        // informational; the subcommand on the command line decides
    } else if (key == "measure") {
        if (v.is_string())
            c.measure_path = v.get<std::string>();
        else
            c.measure_inline = v;
    } else if (key == "poles") {
        c.poles = io::complex_list_from_json(v);
    } else if (key == "params" || key == "a") {
        c.params = io::complex_list_from_json(v);
    } else if (key == "terminal") {
        if (!v.is_null()) c.terminal = io::complex_from_json(v);
    } else if (key == "boundary") {
        c.boundary = io::complex_from_json(v);
    } else if (key == "order") {
        if (!v.is_number_integer()) throw ValidationError("'order' must be an integer");
        c.order = checked_order(v.get<long>());
    } else if (key == "domain") {
        if (!v.is_string()) throw ValidationError("'domain' must be a string");
        c.domain = parse_domain(v.get<std::string>());
    } else if (key == "margin") {
        c.margin = finite_number(v, key);
    } else if (key == "out" || key == "format" || key == "kind" || key == "route") {
        if (!v.is_string()) throw ValidationError("'" + key + "' must be a string");
        (key == "out" ? c.out : key == "format" ? c.format : key == "kind" ? c.kind : c.route) = v.get<std::string>();
    } else if (key == "threads") {
        if (!v.is_number_unsigned() || v.get<unsigned>() == 0)
            throw ValidationError("'threads' must be a positive integer");
        c.threads = v.get<unsigned>();
    } else if (key == "allow_infinity") {
        if (!v.is_boolean()) throw ValidationError("'allow_infinity' must be a boolean");
        c.allow_infinity = v.get<bool>();
    } else if (key == "lambda1") {
        c.lambda1 = io::complex_from_json(v);
    } else if (key == "lambda2") {
        c.lambda2 = io::complex_from_json(v);
    } else if (key == "arc_alpha") {
        c.arc_alpha = io::complex_from_json(v);
    } else if (key == "arc_a") {
        c.arc_a = finite_number(v, key);
    } else if (key == "arc_lambda") {
        c.arc_lambda = io::complex_from_json(v);
    } else {
        throw ValidationError("unknown configuration key '" + key + "'");
    }
}

void apply_config(JobConfig& c, const json& j)
{
    if (!j.is_object()) throw ValidationError("configuration must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) apply_key(c, it.key(), it.value());
}

std::optional<DiscreteMeasure> load_measure(const JobConfig& c)
{
    if (c.measure_inline) return io::measure_from_json(*c.measure_inline);
    if (c.measure_path) return io::measure_from_json(io::read_json_file(*c.measure_path));
    return std::nullopt;
}

Domain job_domain(const JobConfig& c, const std::optional<DiscreteMeasure>& mu)
{
    if (mu && c.domain && *c.domain != mu->domain)
        throw ValidationError(std::string("--domain ") + domain_name(*c.domain) + " conflicts with a " +
                              domain_name(mu->domain) + " measure");
    if (c.domain) return *c.domain;
    return mu ? mu->domain : Domain::Circle;
}

// Explicit poles, or the default sequence (0 on the circle, i on the line)
// long enough for `needed` poles.
PoleSeq job_poles(const JobConfig& c, Domain d, std::size_t needed)
{
    PoleSeq p = c.poles ? PoleSeq(*c.poles, d) : PoleSeq::zeros(needed, d);
    if (c.margin) p.eps = *c.margin;
    p.validate();
    return p;
}

ParamSeq job_params(const JobConfig& c)
{
    if (!c.params) throw ValidationError("this command needs --params");
    ParamSeq a(*c.params);
    a.terminal = c.terminal;
    a.validate();
    return a;
}

std::string output_format(const JobConfig& c, const char* fallback)
{
    const std::string f = c.format.value_or(fallback);
    if (f != "csv" && f != "json") throw ValidationError("format must be 'csv' or 'json', got '" + f + "'");
    return f;
}

json points_json(const std::vector<Complex>& v)
{
    json j = json::array();
    for (Complex z : v) j.push_back(io::complex_to_json(z));
    return j;
}

std::string run_params(const JobConfig& c)
{
    const std::optional<DiscreteMeasure> mu = load_measure(c);
    if (!mu) throw ValidationError("params needs --measure");
    const Domain d = job_domain(c, mu);
    if (d != mu->domain) throw ValidationError("measure domain does not match --domain");
    const std::size_t N = c.order.value_or(mu->size());
    const PoleSeq poles = job_poles(c, d, N);
    const GramSchmidtResult g = orf_from_measure(*mu, poles, N);
    std::ostringstream os;
    if (output_format(c, "json") == "csv") {
        os << "k,re,im\n";
        for (std::size_t k = 1; k <= g.a.size(); ++k)
            os << k << ',' << io::fmt(g.a.at(k).real()) << ',' << io::fmt(g.a.at(k).imag()) << '\n';
        if (g.a.terminal)
            os << g.a.size() + 1 << ',' << io::fmt(g.a.terminal->real()) << ',' << io::fmt(g.a.terminal->imag())
               << '\n';
        return os.str();
    }
    json j;
    j["domain"] = domain_name(d);
    j["poles"] = points_json(std::vector<Complex>(poles.alphas.begin(), poles.alphas.begin() + N));
    j["a"] = points_json(g.a.a);
    j["terminal"] = g.a.terminal ? io::complex_to_json(*g.a.terminal) : json(nullptr);
    return io::dump(j) + "\n";
}

std::string run_matrix(const JobConfig& c)
{
    const ParamSeq a = job_params(c);
    const Domain d = job_domain(c, std::nullopt);
    RepSpec s;
    s.kind = parse_rep_kind(c.kind.value_or("CMV"));
    s.n = c.order.value_or(a.size());
    s.boundary = c.boundary;
    const PoleSeq poles = job_poles(c, d, s.n);
    const Mat M = build_matrix(a, poles, s);
    if (output_format(c, "csv") == "json") return io::dump(io::matrix_to_json(M, rep_kind_name(s.kind))) + "\n";
    std::ostringstream os;
    io::write_matrix_csv(os, M);
    return os.str();
}

ZeroRoute parse_route(const std::string& s)
{
    if (s == "V") return ZeroRoute::V;
    if (s == "U") return ZeroRoute::U;
    if (s == "PAIR") return ZeroRoute::Pair;
    if (s == "TRIDIAGONAL") return ZeroRoute::Tridiagonal;
    throw ValidationError("route must be V, U, PAIR or TRIDIAGONAL, got '" + s + "'");
}

std::string run_zeros(const JobConfig& c)
{
    const ParamSeq a = job_params(c);
    const Domain d = job_domain(c, std::nullopt);
    const std::size_t n = c.order.value_or(a.size());
    const PoleSeq poles = job_poles(c, d, n);
    const std::string route = c.route.value_or("U");
    const std::vector<Complex> z = zeros_orf(a, poles, n, parse_route(route));
    std::ostringstream os;
    if (output_format(c, "csv") == "json") {
        json j;
        j["n"] = n;
        j["route"] = route;
        j["zeros"] = points_json(z);
        os << io::dump(j) << '\n';
        return os.str();
    }
    std::vector<CPoint> pts(z.begin(), z.end());
    io::write_points_csv(os, pts);
    return os.str();
}

std::string run_quad(const JobConfig& c)
{
    const ParamSeq a = job_params(c);
    const Domain d = job_domain(c, std::nullopt);
    const std::size_t n = c.order.value_or(a.size());
    const PoleSeq poles = job_poles(c, d, n);
    const Complex v = c.boundary.value_or(Complex(1.0));
    const Quadrature q = d == Domain::Line ? rl_quadrature(a, poles, n, v, c.allow_infinity, c.threads)
                                           : porf_quadrature(a, poles, n, v, c.threads);
    std::ostringstream os;
    if (output_format(c, "csv") == "json") {
        json j = io::measure_to_json(q.measure);
        j["n"] = n;
        j["v"] = io::complex_to_json(q.v);
        j["u"] = io::complex_to_json(q.u);
        j["eigen_weights"] = q.eigen_weights;
        os << io::dump(j) << '\n';
        return os.str();
    }
    io::write_quadrature_csv(os, q.measure);
    return os.str();
}

std::string run_reconstruct(const JobConfig& c)
{
    ParamSeq a = job_params(c);
    if (!a.terminal) a.terminal = c.boundary;
    if (!a.terminal) throw ValidationError("reconstruct needs --terminal");
    a.validate();
    const Domain d = job_domain(c, std::nullopt);
    const PoleSeq poles = job_poles(c, d, a.size() + 1);
    const DiscreteMeasure mu = d == Domain::Line ? rl_reconstruct_measure(a, poles) : reconstruct_measure(a, poles);
    if (output_format(c, "json") == "csv") {
        std::ostringstream os;
        io::write_quadrature_csv(os, mu);
        return os.str();
    }
    return io::dump(io::measure_to_json(mu)) + "\n";
}

std::string run_diagnose(const JobConfig& c)
{
    if (output_format(c, "json") != "json") throw ValidationError("diagnose writes JSON only");
    const ParamSeq a = job_params(c);
    const Domain d = job_domain(c, std::nullopt);
    const PoleSeq poles = job_poles(c, d, a.size() + 1);
    json j;
    const std::vector<Complex> w = limit_point_sequence(a, poles);
    j["limit_points"] = points_json(w);
    j["limit_clusters"] = points_json(cluster_tail(w));
    if (c.lambda1 && c.lambda2) {
        const KreinSequences k = krein_two_point(a, poles, *c.lambda1, *c.lambda2);
        j["krein"] = {{"index", k.index}, {"s1", k.s1}, {"s2", k.s2}, {"s3", k.s3}};
    }
    if (c.arc_a) {
        const ArcDescriptor arc =
            lopez_arc(c.arc_alpha.value_or(Complex(0.0)), *c.arc_a, c.arc_lambda.value_or(Complex(1.0)));
        j["lopez_arc"] = {{"alpha", io::complex_to_json(arc.alpha)},
                          {"lambda", io::complex_to_json(arc.lambda)},
                          {"half_angle", arc.half_angle},
                          {"first", io::complex_to_json(arc.first)},
                          {"last", io::complex_to_json(arc.last)},
                          {"full_circle", arc.empty}};
    }
    if (c.order) {
        const Complex u = c.boundary.value_or(Complex(1.0));
        const EigenResult e = eigensolve(truncated_rep(a, poles, *c.order, Family::U, u));
        j["boundary_spectrum"] = points_json(e.finite_values());
    }
    return io::dump(j) + "\n";
}

// Collects every problem in a job file instead of stopping at the first.
std::vector<std::string> validate_file(const std::string& path)
{
    std::vector<std::string> issues;
    const json j = io::read_json_file(path);
    if (!j.is_object()) return {"configuration must be a JSON object"};
    JobConfig c;
    for (auto it = j.begin(); it != j.end(); ++it) {
        try {
            apply_key(c, it.key(), it.value());
        } catch (const std::exception& e) {
            issues.push_back(e.what());
        }
    }
    std::optional<DiscreteMeasure> mu;
    try {
        mu = load_measure(c);
        if (mu) mu->validate();
    } catch (const std::exception& e) {
        issues.push_back(std::string("measure: ") + e.what());
        mu.reset();
    }
    Domain d = Domain::Circle;
    try {
        d = job_domain(c, mu);
    } catch (const std::exception& e) {
        issues.push_back(e.what());
    }
    if (c.poles) {
        try {
            job_poles(c, d, 0);
        } catch (const std::exception& e) {
            issues.push_back(std::string("poles: ") + e.what());
        }
    }
    if (c.params) {
        try {
            job_params(c);
        } catch (const std::exception& e) {
            issues.push_back(std::string("params: ") + e.what());
        }
    }
    if (c.boundary && std::abs(std::abs(*c.boundary) - 1.0) > 1e-10) {
        std::ostringstream os;
        os.precision(17);
        os << "boundary value has modulus " << std::abs(*c.boundary) << ", not 1";
        issues.push_back(os.str());
    }
    return issues;
}

void emit(const JobConfig& c, const std::string& text)
{
    if (!c.out) {
        std::cout << text;
        return;
    }
    std::ofstream f(*c.out, std::ios::binary);
    if (!f) throw ValidationError("cannot write '" + *c.out + "'");
    f << text;
}

int fail(const char* kind, const std::string& message, int code)
{
    json j;
    j["error"] = kind;
    j["message"] = message;
    j["exit_code"] = code;
    std::cerr << io::dump(j) << '\n';
    return code;
}

void add_job_options(CLI::App* sub, Flags& f)
{
    sub->add_option("--measure", f.measure, "measure JSON file");
    sub->add_option("--poles", f.poles, "poles alpha_1;alpha_2;... as re,im");
    sub->add_option("--params", f.params, "parameters a_1;a_2;... as re,im");
    sub->add_option("--terminal", f.terminal, "unimodular terminal parameter");
    sub->add_option("--boundary", f.boundary, "boundary value (u for matrix, v for quad)");
    sub->add_option("--order", f.order, "order n");
    sub->add_option("--domain", f.domain, "circle or line");
    sub->add_option("--margin", f.margin, "pole compactness margin");
    sub->add_option("--out", f.out, "output path (stdout if omitted)");
    sub->add_option("--format", f.format, "csv or json");
    sub->add_option("--kind", f.kind, "representation kind for matrix");
    sub->add_option("--route", f.route, "V, U, PAIR or TRIDIAGONAL for zeros");
    sub->add_option("--threads", f.threads, "worker threads for weight evaluation")->check(CLI::PositiveNumber);
    sub->add_flag("--allow-infinity", f.allow_infinity, "route an infinite line node through the circle");
    sub->add_option("--lambda1", f.lambda1, "first Krein test point");
    sub->add_option("--lambda2", f.lambda2, "second Krein test point");
    sub->add_option("--arc-alpha", f.arc_alpha, "pole of the arc test");
    sub->add_option("--arc-a", f.arc_a, "modulus of the constant parameter for the arc test");
    sub->add_option("--arc-lambda", f.arc_lambda, "phase of the arc test");
    sub->add_option("--config", f.config, "JSON job file; its keys override flags");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Orthogonal rational functions: matrices, zeros, quadrature and measures"};
    app.require_subcommand(1);
    Flags flags;
    std::string validate_path;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"params", "recurrence parameters of a discrete measure"},
        {"matrix", "dump a matrix representation"},
        {"zeros", "zeros of phi_n"},
        {"quad", "quadrature nodes and weights"},
        {"reconstruct", "measure from parameters and a terminal value"},
        {"diagnose", "limit points, Krein sequences and arc report"},
    };
    for (const auto& [name, help] : commands) add_job_options(app.add_subcommand(name, help), flags);
    CLI::App* val = app.add_subcommand("validate", "check a job file");
    val->add_option("file", validate_path, "job JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("validation", e.what(), kExitValidation);
    }

    try {
        if (val->parsed()) {
            const std::vector<std::string> issues = validate_file(validate_path);
            json j;
            j["file"] = validate_path;
            j["valid"] = issues.empty();
            j["issues"] = issues;
            std::cout << io::dump(j) << '\n';
            return issues.empty() ? 0 : kExitValidation;
        }
        JobConfig c;
        c.command = app.get_subcommands().front()->get_name();
        apply_flags(c, flags);
        if (!flags.config.empty()) apply_config(c, io::read_json_file(flags.config));
        if (c.threads == 0) throw ValidationError("threads must be positive");

        std::string text;
        if (c.command == "params") text = run_params(c);
        else if (c.command == "matrix") text = run_matrix(c);
        else if (c.command == "zeros") text = run_zeros(c);
        else if (c.command == "quad") text = run_quad(c);
        else if (c.command == "reconstruct") text = run_reconstruct(c);
        else text = run_diagnose(c);
        emit(c, text);
    } catch (const ValidationError& e) {
        return fail("validation", e.what(), kExitValidation);
    } catch (const NumericalError& e) {
        return fail("numerical", e.what(), kExitNumerical);
    } catch (const std::exception& e) {
        return fail("validation", e.what(), kExitValidation);
    }
    return 0;
}
