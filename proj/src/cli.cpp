#include "chaingeo/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "chaingeo/config.hpp"
#include "chaingeo/errors.hpp"
#include "chaingeo/oracle.hpp"
#include "chaingeo/render.hpp"
#include "chaingeo/serialize.hpp"

namespace chaingeo::cli {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numeric configs must match their exact values to this relative level.
constexpr double residual_limit = 1e-9;

struct Style {
    bool color = false;
    std::string verdict(bool pass) const
    {
        if (!color)
            return pass ? "PASS" : "FAIL";
        return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
    }
};

Rational parse_positive(const std::string& text)
{
    const Rational r = Rational::parse(text);
    if (r.sign() <= 0)
        throw ParameterError("a must be a positive rational, got '" + text + "'");
    return r;
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw IoError("cannot open '" + path + "' for writing");
    file << text;
    file.flush();
    if (!file)
        throw IoError("failed writing '" + path + "'");
}

std::string colorize_report(const VerificationReport& report, const Style& style)
{
    std::string text = render_report(report);
    if (!style.color)
        return text;
    std::string out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line.ends_with("PASS"))
            line = line.substr(0, line.size() - 4) + style.verdict(true);
        else if (line.ends_with("FAIL"))
            line = line.substr(0, line.size() - 4) + style.verdict(false);
        out += line + '\n';
    }
    return out;
}

std::string approx(const QNum& x)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x.to_double(),
                                   std::chars_format::general, 15);
    return std::string(buf, end);
}

struct OracleCheck {
    oracle::OracleResult result;
    double exact = 0.0;
    bool agrees = false;
};

OracleCheck check_chain_radius(const ChainConfig& cfg, double tol)
{
    OracleCheck c;
    const double a = cfg.a.to_double();
    c.result = cfg.kind == ChainKind::CB ? oracle::chain_radius_cb(cfg.n, a, tol)
                                         : oracle::chain_radius_ca(cfg.n, a, tol);
    c.exact = cfg.b.to_double();
    c.agrees = std::abs(c.result.value - c.exact) <= tol;
    return c;
}

void validate_tol(double tol, const Rational& a)
{
    if (!(tol > 0.0) || !(tol < a.to_double()))
        throw ParameterError("--tol must satisfy 0 < tol < a");
}

struct ChainArgs {
    unsigned n = 0;
    std::string a = "1";
    std::string format = "text";
    std::string out_path;
    double tol = 1e-10;
};

int run_chain(ChainKind kind, const ChainArgs& args, std::ostream& out, const Style& style)
{
    const Rational a = parse_positive(args.a);
    validate_tol(args.tol, a);
    const QNum qa = QNum::rational(a, args.n);
    const ChainConfig cfg = kind == ChainKind::CB ? build_cb(args.n, qa) : build_ca(args.n, qa);
    const VerificationReport report = verify_config(cfg);
    const OracleCheck oc = check_chain_radius(cfg, args.tol);
    const double residual = oracle::numeric_residuals(cfg);
    const bool pass = report.overall() && oc.agrees && residual <= residual_limit;

    std::ostringstream os;
    if (args.format == "json") {
        json j = cfg;
        j["report"] = report;
        j["oracle"] = json{{"chain_radius", oc.result},
                           {"agrees", oc.agrees},
                           {"numeric_residual", residual}};
        os << j.dump(2) << '\n';
    } else {
        const auto pt = [](const Point& p) {
            return "(" + p.x.to_string() + ", " + p.y.to_string() + ")";
        };
        os << to_string(kind) << '(' << cfg.n << "), a = " << a << '\n';
        os << "  b      = " << cfg.b << "  ~ " << approx(cfg.b) << '\n';
        os << "  d=|AB| = " << cfg.d << "  ~ " << approx(cfg.d) << '\n';
        os << "  |BC|   = " << cfg.bc << "  ~ " << approx(cfg.bc) << '\n';
        os << "  A = " << pt(cfg.A) << '\n';
        os << "  B = " << pt(cfg.B) << '\n';
        os << "  C = " << pt(cfg.C) << '\n';
        os << "  oracle b ~ " << format_fixed(oc.result.value, 12) << " after "
           << oc.result.iterations << " bisection steps: " << style.verdict(oc.agrees) << '\n';
        os << "  numeric residual " << residual << ": " << style.verdict(residual <= residual_limit)
           << "\n\n";
        os << colorize_report(report, style);
    }
    emit(os.str(), args.out_path, out);
    return pass ? ok : verification_failed;
}

struct SquareArgs {
    std::string a = "1";
    std::string format = "text";
    std::string out_path;
    double tol = 1e-10;
};

int run_square(const SquareArgs& args, std::ostream& out, const Style& style)
{
    const Rational a = parse_positive(args.a);
    validate_tol(args.tol, a);
    const QNum qa = QNum::rational(a, 1);
    const SquareResult sq = square_in_delta(qa);
    const bool identity = qa * Rational(2) == sq.side * Rational(5);
    const auto numeric = oracle::square_side(a.to_double(), args.tol);
    const bool agrees = std::abs(numeric.value - sq.side.to_double()) <= args.tol;

    std::ostringstream os;
    if (args.format == "json") {
        json j = sq;
        j["a"] = qa;
        j["identity_2a_eq_5side"] = identity;
        j["oracle"] = json{{"side", numeric}, {"agrees", agrees}};
        os << j.dump(2) << '\n';
    } else {
        const auto pt = [](const Point& p) {
            return "(" + p.x.to_string() + ", " + p.y.to_string() + ")";
        };
        os << "square in the curvilinear triangle, a = " << a << '\n';
        os << "  side = " << sq.side << "  ~ " << approx(sq.side) << '\n';
        os << "  rejected root = " << sq.rejected_side << '\n';
        os << "  A = " << pt(sq.A) << "  B = " << pt(sq.B) << '\n';
        os << "  C = " << pt(sq.C) << "  D = " << pt(sq.D) << '\n';
        os << "  oracle side ~ " << format_fixed(numeric.value, 12) << ": " << style.verdict(agrees)
           << '\n';
        os << "2a = 5|AB|: " << style.verdict(identity) << '\n';
    }
    emit(os.str(), args.out_path, out);
    return identity && agrees ? ok : verification_failed;
}

struct VerifyArgs {
    unsigned n_max = 100;
    std::vector<std::string> a{"1", "2/3", "7/5"};
    std::string format = "text";
    double tol = 1e-10;
};

struct SweepItem {
    ChainKind kind = ChainKind::CB;
    unsigned n = 0;
    Rational a;
    bool exact = false;
    bool oracle_ok = false;
    bool numeric_ok = false;
    std::string failure;

    bool pass() const { return exact && oracle_ok && numeric_ok; }
};

SweepItem sweep_one(ChainKind kind, unsigned n, const Rational& a, double tol)
{
    SweepItem item;
    item.kind = kind;
    item.n = n;
    item.a = a;
    try {
        const QNum qa = QNum::rational(a, n);
        const ChainConfig cfg = kind == ChainKind::CB ? build_cb(n, qa) : build_ca(n, qa);
        const auto report = verify_config(cfg);
        item.exact = report.overall();
        for (const auto& e : report.entries)
            if (!e.holds)
                item.failure = e.name;
        item.oracle_ok = check_chain_radius(cfg, tol).agrees;
        if (!item.oracle_ok && item.failure.empty())
            item.failure = "oracle disagreement";
        item.numeric_ok = oracle::numeric_residuals(cfg) <= residual_limit;
        if (!item.numeric_ok && item.failure.empty())
            item.failure = "numeric residual";
    } catch (const std::exception& e) {
        item.failure = e.what();
    }
    return item;
}

int run_verify(const VerifyArgs& args, std::ostream& out, const Style& style)
{
    std::vector<Rational> samples;
    for (const auto& text : args.a) {
        samples.push_back(parse_positive(text));
        validate_tol(args.tol, samples.back());
    }

    std::vector<std::tuple<ChainKind, unsigned, std::size_t>> jobs;
    for (unsigned n = 1; n <= args.n_max; ++n)
        for (std::size_t i = 0; i < samples.size(); ++i)
            jobs.emplace_back(ChainKind::CB, n, i);
    for (unsigned n = 2; n <= args.n_max; ++n)
        for (std::size_t i = 0; i < samples.size(); ++i)
            jobs.emplace_back(ChainKind::CA, n, i);

    // Results land in job order whatever the schedule.
    std::vector<SweepItem> results(jobs.size());
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < jobs.size(); k = next++) {
                    const auto& [kind, n, i] = jobs[k];
                    results[k] = sweep_one(kind, n, samples[i], args.tol);
                }
            });
        }
    }

    bool cb_pass = true;
    bool ca_pass = true;
    for (const auto& r : results)
        (r.kind == ChainKind::CB ? cb_pass : ca_pass) &= r.pass();

    bool square_pass = true;
    for (const auto& a : samples) {
        const QNum qa = QNum::rational(a, 1);
        const auto sq = square_in_delta(qa);
        const auto numeric = oracle::square_side(a.to_double(), args.tol);
        square_pass &= qa * Rational(2) == sq.side * Rational(5) &&
                       std::abs(numeric.value - sq.side.to_double()) <= args.tol;
    }
    const bool pass = cb_pass && ca_pass && square_pass;

    const std::string cb_range = "CB 1.." + std::to_string(args.n_max);
    const std::string ca_range = "CA 2.." + std::to_string(args.n_max);
    if (args.format == "json") {
        json failures = json::array();
        for (const auto& r : results)
            if (!r.pass())
                failures.push_back(json{{"kind", to_string(r.kind)},
                                        {"n", r.n},
                                        {"a", r.a},
                                        {"exact", r.exact},
                                        {"oracle", r.oracle_ok},
                                        {"numeric", r.numeric_ok},
                                        {"reason", r.failure}});
        json j{{"n_max", args.n_max},
               {"a", samples},
               {"tol", args.tol},
               {"cb", cb_pass},
               {"ca", ca_pass},
               {"square", square_pass},
               {"failures", failures},
               {"overall", pass}};
        out << j.dump(2) << '\n';
    } else {
        for (const auto& r : results)
            if (!r.pass())
                out << "FAIL " << to_string(r.kind) << '(' << r.n << "), a = " << r.a << ": "
                    << r.failure << '\n';
        out << "square 2a = 5|AB| " << style.verdict(square_pass) << '\n';
        out << cb_range << ' ' << style.verdict(cb_pass) << ", " << ca_range << ' '
            << style.verdict(ca_pass) << '\n';
    }
    return pass ? ok : verification_failed;
}

struct SvgArgs {
    std::string kind = "cb";
    unsigned n = 0;
    std::string a = "1";
    std::string out_path;
    int width = 800;
    int decimals = 6;
    std::string margin = "1/20";
    bool no_labels = false;
    bool square = false;
};

int run_svg(const SvgArgs& args, std::ostream& out)
{
    const Rational a = parse_positive(args.a);
    const QNum qa = QNum::rational(a, args.n);
    const ChainConfig cfg = args.kind == "cb" ? build_cb(args.n, qa) : build_ca(args.n, qa);
    RenderOptions opts;
    opts.width_px = args.width;
    opts.decimals = args.decimals;
    opts.margin_fraction = Rational::parse(args.margin);
    opts.show_labels = !args.no_labels;
    opts.show_square = args.square;
    emit(render_svg(cfg, opts), args.out_path, out);
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool styled)
{
    CLI::App app{"Exact tangent circle chain constructions", "chaingeo"};
    app.require_subcommand(1);

    ChainArgs cb_args;
    ChainArgs ca_args;
    SquareArgs square_args;
    VerifyArgs verify_args;
    SvgArgs svg_args;

    const auto add_format = [](CLI::App* sub, std::string& target) {
        sub->add_option("--format", target, "Output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    auto* cb = app.add_subcommand("cb", "Build and verify CB(n): a chain between two touching circles");
    cb->add_option("--n", cb_args.n, "Chain length")->required()->check(CLI::Range(1u, 1000000u));
    cb->add_option("--a", cb_args.a, "Outer radius as exact rational p/q")->capture_default_str();
    add_format(cb, cb_args.format);
    cb->add_option("--out", cb_args.out_path, "Write output to this file");
    cb->add_option("--tol", cb_args.tol, "Oracle bisection tolerance")->capture_default_str();

    auto* ca = app.add_subcommand("ca", "Build and verify CA(n): a circle resting on a chain");
    ca->add_option("--n", ca_args.n, "Chain length (>= 2)")->required()->check(CLI::Range(2u, 1000000u));
    ca->add_option("--a", ca_args.a, "Outer radius as exact rational p/q")->capture_default_str();
    add_format(ca, ca_args.format);
    ca->add_option("--out", ca_args.out_path, "Write output to this file");
    ca->add_option("--tol", ca_args.tol, "Oracle bisection tolerance")->capture_default_str();

    auto* square = app.add_subcommand("square", "Solve the square between two touching circles");
    square->add_option("--a", square_args.a, "Circle radius as exact rational p/q")->capture_default_str();
    add_format(square, square_args.format);
    square->add_option("--out", square_args.out_path, "Write output to this file");
    square->add_option("--tol", square_args.tol, "Oracle bisection tolerance")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Sweep CB(1..M) and CA(2..M) exactly and numerically");
    verify->add_option("--n-max", verify_args.n_max, "Largest chain length M")
        ->check(CLI::Range(2u, 100000u))
        ->capture_default_str();
    verify->add_option("--a", verify_args.a, "Outer radii to sweep (repeatable)")->capture_default_str();
    add_format(verify, verify_args.format);
    verify->add_option("--tol", verify_args.tol, "Oracle bisection tolerance")->capture_default_str();

    auto* svg = app.add_subcommand("svg", "Render a configuration as SVG");
    svg->add_option("--kind", svg_args.kind, "cb or ca")
        ->check(CLI::IsMember({"cb", "ca"}))
        ->capture_default_str();
    svg->add_option("--n", svg_args.n, "Chain length")->required()->check(CLI::Range(1u, 1000000u));
    svg->add_option("--a", svg_args.a, "Outer radius as exact rational p/q")->capture_default_str();
    svg->add_option("--out", svg_args.out_path, "Output file (default stdout)");
    svg->add_option("--width", svg_args.width, "Image width in pixels")->capture_default_str();
    svg->add_option("--decimals", svg_args.decimals, "Digits after the decimal point")
        ->capture_default_str();
    svg->add_option("--margin", svg_args.margin, "Margin as a fraction of the width")
        ->capture_default_str();
    svg->add_flag("--no-labels", svg_args.no_labels, "Omit text labels");
    svg->add_flag("--square", svg_args.square, "Overlay the square (CB(1) only)");

    const Style style{styled && std::getenv("CHAINGEO_NO_COLOR") == nullptr};

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& s : args)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return usage_error;
    }

    try {
        if (cb->parsed())
            return run_chain(ChainKind::CB, cb_args, out, style);
        if (ca->parsed())
            return run_chain(ChainKind::CA, ca_args, out, style);
        if (square->parsed())
            return run_square(square_args, out, style);
        if (verify->parsed())
            return run_verify(verify_args, out, style);
        if (svg->parsed())
            return run_svg(svg_args, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    } catch (const std::invalid_argument& e) {
        // ParameterError, RadicandMismatch, malformed rationals
        err << "error: " << e.what() << "\n\n";
        for (auto* sub : app.get_subcommands())
            err << sub->help();
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return verification_failed;
    }
    return usage_error;
}

} // namespace chaingeo::cli
