#include "cylsolid_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cylsolid/analytic.hpp"
#include "cylsolid/error.hpp"
#include "cylsolid/geometry.hpp"
#include "cylsolid/oracle.hpp"
#include "cylsolid/sweep.hpp"

namespace cylsolid::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kDegree = std::numbers::pi / 180;

struct Config {
    std::optional<double> r;
    std::optional<double> d;
    std::optional<double> z1;
    std::optional<double> z2;
    double alpha = 0;
    bool degrees = false;
    std::string format;
    bool trace = false;

    std::string param;
    double from = 0;
    double to = 0;
    std::size_t steps = 101;
    bool log = false;
    bool oracle = false;

    std::string method = "quad";
    std::uint64_t n = 1'000'000;
    std::uint64_t seed = McOptions{}.seed;
    std::size_t partitions = McOptions{}.partitions;
    std::size_t threads = 0;
    double abs_tol = 1e-10;
};

// A failure that has already been mapped to an exit code.
struct Failure {
    int exit_code;
    std::string code;
    std::string message;
};

void report(std::ostream& err, const std::string& code, const std::string& message)
{
    Json j;
    j["error"] = {{"code", code}, {"message", message}};
    err << j.dump() << '\n';
}

int input_exit(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidScene:
    case ErrorCode::SourceInsideDetector:
    case ErrorCode::AdjacentCap:
    case ErrorCode::InvalidArgument:
    case ErrorCode::DomainError:
        return kInvalidInput;
    case ErrorCode::NonConvergence:
        return kOracleFailed;
    case ErrorCode::NumericalInconsistency:
        return kInternalError;
    }
    return kInternalError;
}

Failure failure_from(const Error& e, std::optional<int> exit_code = std::nullopt)
{
    return {exit_code.value_or(input_exit(e.code())), std::string(to_string(e.code())),
            e.message()};
}

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string num(const std::optional<double>& x) { return x ? num(*x) : std::string(); }

Json opt(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

void need(const std::optional<double>& v, const char* flag)
{
    if (!v)
        throw Failure{kInvalidInput, "InvalidArgument", std::string(flag) + " is required"};
}

CylinderScene scene_from(const Config& cfg, std::optional<SweepParam> swept = std::nullopt)
{
    need(cfg.r, "--r");
    if (swept != SweepParam::Distance)
        need(cfg.d, "--d");
    need(cfg.z1, "--z1");
    need(cfg.z2, "--z2");
    CylinderScene s;
    s.r = *cfg.r;
    s.d = cfg.d.value_or(0);
    s.z1 = *cfg.z1;
    s.z2 = *cfg.z2;
    s.alpha = cfg.degrees ? cfg.alpha * kDegree : cfg.alpha;
    return s;
}

CanonicalCase classify_or_fail(const CylinderScene& s)
{
    try {
        return classify(s);
    } catch (const Error& e) {
        throw failure_from(e);
    }
}

struct TermField {
    const char* name;
    std::optional<double> value;
};

std::vector<TermField> term_fields(const AnalyticTerms& t)
{
    // a and b are the half-angle tangents a1/b1, a2/b2 or a3/b3.
    const char* a = t.integral == Integral::F1 ? "a1" : t.integral == Integral::F2 ? "a2" : "a3";
    const char* b = t.integral == Integral::F1 ? "b1" : t.integral == Integral::F2 ? "b2" : "b3";
    return {{"m", t.m},
            {"sqrt_one_minus_m2", t.sqrt_one_minus_m2},
            {"rho_tilde_minus", t.rho_tilde_minus},
            {"rho_tilde_plus", t.rho_tilde_plus},
            {a, t.a},
            {b, t.b},
            {"E", t.E},
            {"G", t.G},
            {"H", t.H},
            {"z", t.z},
            {"dt1", t.dt1},
            {"dt2", t.dt2}};
}

Json trace_json(const AnalyticTerms& t, bool end_plane)
{
    Json j;
    j["integral"] = to_string(t.integral);
    j["branch"] = to_string(t.branch);
    j["L"] = t.L;
    j["d"] = t.d;
    j["r"] = t.r;
    j["alpha"] = t.alpha;
    j["value"] = t.value;
    for (const TermField& f : term_fields(t)) {
        if (f.value)
            j[f.name] = *f.value;
    }
    if (end_plane)
        j["end_plane"] = true;
    return j;
}

void trace_csv(std::ostream& out, const std::vector<AnalyticTerms>& trace)
{
    out << "\nintegral,branch,L,d,r,alpha,value,m,sqrt_one_minus_m2,rho_tilde_minus,"
           "rho_tilde_plus,a,b,E,G,H,z,dt1,dt2\n";
    for (const AnalyticTerms& t : trace) {
        out << to_string(t.integral) << ',' << to_string(t.branch) << ',' << num(t.L) << ','
            << num(t.d) << ',' << num(t.r) << ',' << num(t.alpha) << ',' << num(t.value);
        for (const TermField& f : term_fields(t))
            out << ',' << num(f.value);
        out << '\n';
    }
}

Json angles_json(const CanonicalCase& c)
{
    if (c.id == CaseId::CaseIII)
        return nullptr;
    const SilhouetteAngles a = *silhouette_angles(c.d, c.r);
    return {{"phi0", a.phi0}, {"alpha1", a.alpha1}, {"alphac", a.alphac}};
}

Json case_json(const CanonicalCase& c)
{
    Json j;
    j["case"] = to_string(c.id);
    j["L1"] = c.L1;
    j["L2"] = c.L2;
    j["d"] = c.d;
    j["r"] = c.r;
    j["alpha"] = c.alpha;
    j["end_plane"] = c.end_plane;
    j["angles"] = angles_json(c);
    return j;
}

const char* kCaseCsvHeader = "case,L1,L2,d,r,alpha,end_plane,phi0,alpha1,alphac";

void case_csv_row(std::ostream& out, const CanonicalCase& c)
{
    out << to_string(c.id) << ',' << num(c.L1) << ',' << num(c.L2) << ',' << num(c.d) << ','
        << num(c.r) << ',' << num(c.alpha) << ',' << (c.end_plane ? "true" : "false");
    if (c.id == CaseId::CaseIII) {
        out << ",,,";
    } else {
        const SilhouetteAngles a = *silhouette_angles(c.d, c.r);
        out << ',' << num(a.phi0) << ',' << num(a.alpha1) << ',' << num(a.alphac);
    }
}

int cmd_case(const Config& cfg, std::ostream& out)
{
    const CanonicalCase c = classify_or_fail(scene_from(cfg));
    const auto range = phi_limits(c);
    if (cfg.format == "csv") {
        out << kCaseCsvHeader << ",phi_min,phi_max\n";
        case_csv_row(out, c);
        out << ',' << (range ? num(range->lo) : "") << ',' << (range ? num(range->hi) : "")
            << '\n';
        return kOk;
    }
    Json j = case_json(c);
    j["phi_limits"] = range ? Json{{"lo", range->lo}, {"hi", range->hi}} : Json(nullptr);
    out << j.dump(2) << '\n';
    return kOk;
}

int cmd_compute(const Config& cfg, std::ostream& out)
{
    const CanonicalCase c = classify_or_fail(scene_from(cfg));
    std::vector<AnalyticTerms> trace;
    SolidAngle sa;
    try {
        sa = omega(c, cfg.trace ? &trace : nullptr);
    } catch (const Error& e) {
        throw failure_from(e);
    }
    std::optional<double> cyl;
    std::optional<double> circ;
    if (sa.breakdown) {
        cyl = sa.breakdown->cylinder;
        circ = sa.breakdown->circle;
    }

    if (cfg.format == "csv") {
        out << kCaseCsvHeader << ",omega,omega_cyl,omega_circ\n";
        case_csv_row(out, c);
        out << ',' << num(sa.value) << ',' << num(cyl) << ',' << num(circ) << '\n';
        if (cfg.trace)
            trace_csv(out, trace);
        return kOk;
    }
    Json j = case_json(c);
    j["omega"] = sa.value;
    j["omega_cyl"] = opt(cyl);
    j["omega_circ"] = opt(circ);
    if (cfg.trace) {
        Json t = Json::array();
        for (const AnalyticTerms& term : trace)
            t.push_back(trace_json(term, c.end_plane));
        j["trace"] = std::move(t);
    }
    out << j.dump(2) << '\n';
    return kOk;
}

int cmd_sweep(const Config& cfg, std::ostream& out)
{
    const auto param = parse_sweep_param(cfg.param);
    if (!param)
        throw Failure{kInvalidInput, "InvalidArgument", "--param must be alpha, d or L1"};
    const CylinderScene base = scene_from(cfg, *param);

    std::vector<double> grid;
    try {
        grid = make_grid(cfg.from, cfg.to, cfg.steps, cfg.log);
    } catch (const Error& e) {
        throw failure_from(e);
    }
    // Grid values stay in the user's unit for output; alpha is converted once here.
    const bool to_radians = *param == SweepParam::Alpha && cfg.degrees;
    std::vector<double> values = grid;
    if (to_radians) {
        for (double& v : values)
            v *= kDegree;
    }

    SweepOptions options;
    if (cfg.oracle)
        options.oracle_abs_tol = cfg.abs_tol;
    const std::vector<SweepRow> rows = sweep(base, *param, values, options);

    if (cfg.format == "csv") {
        out << "param_name,param_value,case,omega,omega_cyl,omega_circ,error_flag";
        if (cfg.oracle)
            out << ",omega_quad";
        out << '\n';
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const SweepRow& row = rows[i];
            out << to_string(row.param) << ',' << num(grid[i]) << ','
                << (row.case_id ? to_string(*row.case_id) : "") << ',' << num(row.omega) << ','
                << num(row.omega_cyl) << ',' << num(row.omega_circ) << ','
                << (row.error ? to_string(*row.error) : "");
            if (cfg.oracle)
                out << ',' << num(row.oracle);
            out << '\n';
        }
        return kOk;
    }

    Json j;
    j["param"] = to_string(*param);
    j["unit"] = *param == SweepParam::Alpha ? (cfg.degrees ? "deg" : "rad") : "length";
    Json list = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SweepRow& row = rows[i];
        Json r;
        r["param_value"] = grid[i];
        r["case"] = row.case_id ? Json(to_string(*row.case_id)) : Json(nullptr);
        r["omega"] = opt(row.omega);
        r["omega_cyl"] = opt(row.omega_cyl);
        r["omega_circ"] = opt(row.omega_circ);
        r["error"] = row.error ? Json{{"code", to_string(*row.error)}, {"message", row.message}}
                               : Json(nullptr);
        if (cfg.oracle)
            r["omega_quad"] = opt(row.oracle);
        list.push_back(std::move(r));
    }
    j["rows"] = std::move(list);
    out << j.dump(2) << '\n';
    return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out)
{
    const bool mc = cfg.method == "mc";
    if (mc && cfg.n < kMinMonteCarloSamples)
        throw Failure{kInvalidInput, "InvalidArgument", "--n must be at least 10000"};
    if (mc && cfg.partitions == 0)
        throw Failure{kInvalidInput, "InvalidArgument", "--partitions must be positive"};
    if (!mc && !(cfg.abs_tol >= kMinQuadratureTolerance))
        throw Failure{kInvalidInput, "InvalidArgument", "--abs-tol must be at least 1e-12"};

    const CylinderScene scene = scene_from(cfg);
    const CanonicalCase c = classify_or_fail(scene);
    double analytic = 0;
    try {
        analytic = omega(c).value;
    } catch (const Error& e) {
        throw failure_from(e);
    }

    OracleEstimate est;
    try {
        if (mc) {
            McOptions options;
            options.n = cfg.n;
            options.seed = cfg.seed;
            options.partitions = cfg.partitions;
            options.threads = cfg.threads;
            est = mc_omega(scene, options);
        } else {
            est = quad_omega(c, cfg.abs_tol);
        }
    } catch (const Error& e) {
        throw failure_from(e, kOracleFailed);
    }

    const double discrepancy = std::abs(analytic - est.value);
    double threshold = cfg.abs_tol;
    if (mc) {
        // All hits or all misses leave a zero binomial error; fall back to the
        // rule-of-three bound 3/n there.
        const bool degenerate = est.hits == 0 || est.hits == est.n_samples;
        threshold = degenerate ? 3.0 / static_cast<double>(est.n_samples) : 4 * est.uncertainty;
    }
    const bool pass = discrepancy <= threshold;

    if (cfg.format == "csv") {
        out << "method,case,analytic,oracle,uncertainty,discrepancy,threshold,pass\n"
            << to_string(est.method) << ',' << to_string(c.id) << ',' << num(analytic) << ','
            << num(est.value) << ',' << num(est.uncertainty) << ',' << num(discrepancy) << ','
            << num(threshold) << ',' << (pass ? "true" : "false") << '\n';
    } else {
        Json o;
        o["method"] = to_string(est.method);
        o["value"] = est.value;
        o["uncertainty"] = est.uncertainty;
        if (mc) {
            o["n_samples"] = est.n_samples;
            o["hits"] = est.hits;
            o["seed"] = est.seed;
            o["partitions"] = est.partitions;
            o["rng"] = est.rng;
        } else {
            o["abs_tol"] = cfg.abs_tol;
            o["error_estimate"] = est.error_estimate;
            o["panels"] = est.panels;
        }
        Json j = case_json(c);
        j["analytic"] = analytic;
        j["oracle"] = std::move(o);
        j["discrepancy"] = discrepancy;
        j["threshold"] = threshold;
        j["pass"] = pass;
        out << j.dump(2) << '\n';
    }
    return pass ? kOk : kVerificationFailed;
}

void add_scene_options(CLI::App* sub, Config& cfg)
{
    sub->add_option("--r", cfg.r, "cylinder radius");
    sub->add_option("--d", cfg.d, "distance from the source to the cylinder axis");
    sub->add_option("--z1", cfg.z1, "lower end plane, source frame");
    sub->add_option("--z2", cfg.z2, "upper end plane, source frame");
    sub->add_option("--alpha", cfg.alpha, "source tilt from the line to the axis")
        ->capture_default_str();
    sub->add_flag("--degrees", cfg.degrees, "angles on the command line are in degrees");
}

void add_format_option(CLI::App* sub, Config& cfg, const std::string& fallback)
{
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_str(fallback);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"Solid angle of a cylinder seen from a point cosine source", "cylsolid"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "evaluate the analytic solid angle");
    add_scene_options(compute, cfg);
    add_format_option(compute, cfg, "json");
    compute->add_flag("--trace", cfg.trace, "include every F evaluation and its intermediates");

    auto* sweep_cmd = app.add_subcommand("sweep", "tabulate the solid angle over one parameter");
    add_scene_options(sweep_cmd, cfg);
    add_format_option(sweep_cmd, cfg, "csv");
    sweep_cmd->add_option("--param", cfg.param, "alpha, d or L1 (cap position, fixed length)")
        ->required();
    sweep_cmd->add_option("--from", cfg.from, "first grid value")->required();
    sweep_cmd->add_option("--to", cfg.to, "last grid value")->required();
    sweep_cmd->add_option("--steps", cfg.steps, "grid points, at least 2")->capture_default_str();
    sweep_cmd->add_flag("--log", cfg.log, "logarithmic spacing");
    sweep_cmd->add_flag("--oracle", cfg.oracle, "append a quadrature column (omega_quad)");
    sweep_cmd->add_option("--abs-tol", cfg.abs_tol, "quadrature tolerance for --oracle")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "compare the analytic value with an oracle");
    add_scene_options(verify, cfg);
    add_format_option(verify, cfg, "json");
    verify->add_option("--method", cfg.method, "quad or mc")
        ->check(CLI::IsMember({"quad", "mc"}))
        ->capture_default_str();
    verify->add_option("--n", cfg.n, "Monte Carlo samples")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "Monte Carlo seed")->capture_default_str();
    verify->add_option("--partitions", cfg.partitions, "Monte Carlo sample streams")
        ->capture_default_str();
    verify->add_option("--threads", cfg.threads, "worker threads, 0 for all cores")
        ->capture_default_str();
    verify->add_option("--abs-tol", cfg.abs_tol, "quadrature tolerance")->capture_default_str();

    auto* case_cmd = app.add_subcommand("case", "classify the scene only");
    add_scene_options(case_cmd, cfg);
    add_format_option(case_cmd, cfg, "json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        report(err, "InvalidArgument", e.what());
        return kInvalidInput;
    }
    if (cfg.format.empty())
        cfg.format = sweep_cmd->parsed() ? "csv" : "json";

    try {
        if (compute->parsed())
            return cmd_compute(cfg, out);
        if (sweep_cmd->parsed())
            return cmd_sweep(cfg, out);
        if (verify->parsed())
            return cmd_verify(cfg, out);
        return cmd_case(cfg, out);
    } catch (const Failure& f) {
        report(err, f.code, f.message);
        return f.exit_code;
    } catch (const Error& e) {
        const Failure f = failure_from(e);
        report(err, f.code, f.message);
        return f.exit_code;
    } catch (const std::exception& e) {
        report(err, "InternalError", e.what());
        return kInternalError;
    }
}

} // namespace cylsolid::cli
