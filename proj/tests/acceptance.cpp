// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "chaingeo/config.hpp"
#include "chaingeo/oracle.hpp"
#include "chaingeo/render.hpp"
#include "support/generators.hpp"
#include "support/properties.hpp"
#include "support/svg_inspect.hpp"

using namespace chaingeo;
using Clock = std::chrono::steady_clock;

namespace {

const std::vector<Rational> a_samples{Rational(1), Rational(2, 3), Rational(7, 5)};

struct Outcome {
    bool pass = false;
    std::string detail;
};

double millis_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string ms(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f ms", v);
    return buf;
}

bool entry_holds(const VerificationReport& report, const std::string& name)
{
    for (const auto& e : report.entries)
        if (e.name == name)
            return e.holds;
    return false;
}

Outcome problem_square()
{
    const auto start = Clock::now();
    bool ok = true;
    for (const auto& a : a_samples) {
        const QNum qa = QNum::rational(a, 1);
        const auto sq = square_in_delta(qa);
        ok = ok && qa * Rational(2) == sq.side * Rational(5);
    }
    const double elapsed = millis_since(start);
    return {ok && elapsed < 10.0, "2a = 5s exactly, " + ms(elapsed) + " (limit 10 ms)"};
}

Outcome sweep(ChainKind kind)
{
    const bool cb = kind == ChainKind::CB;
    const std::vector<std::string> required =
        cb ? std::vector<std::string>{"contact divides centers a:b",
                                      "right triangle (a-h)^2 + (a-d)^2 = a^2",
                                      "chord law n|AB| = |BC|",
                                      "height law 2a = ((sqrt(n)+1)^2+1)|AB|"}
           : std::vector<std::string>{"contact divides centers a:b",
                                      "chord law (n-1)|AB| = |BC|",
                                      "height law 2a = ((n-1)^2+4)|AB|/4"};
    const auto start = Clock::now();
    int failures = 0;
    int built = 0;
    for (unsigned n = cb ? 1 : 2; n <= 100; ++n) {
        for (const auto& a : a_samples) {
            ++built;
            try {
                const QNum qa = QNum::rational(a, n);
                const auto report = verify_config(cb ? build_cb(n, qa) : build_ca(n, qa));
                bool ok = report.overall();
                for (const auto& name : required)
                    ok = ok && entry_holds(report, name);
                failures += ok ? 0 : 1;
            } catch (const std::exception&) {
                ++failures;
            }
        }
    }
    const double elapsed = millis_since(start);
    return {failures == 0 && elapsed < 5000.0,
            std::to_string(built - failures) + "/" + std::to_string(built) + " configs exact, " +
                ms(elapsed) + " (limit 5000 ms)"};
}

Outcome oracle_agreement()
{
    double worst = 0.0;
    const auto rel = [&](double approx, double exact) {
        worst = std::max(worst, std::abs(approx - exact) / std::abs(exact));
    };
    for (const auto& [num, den] : {std::pair{1L, 1L}, std::pair{7L, 10L}, std::pair{16L, 5L}}) {
        const Rational a(num, den);
        const double af = a.to_double();
        const double tol = 1e-13 * af;
        for (unsigned n = 1; n <= 20; ++n) {
            const QNum qa = QNum::rational(a, n);
            rel(oracle::chain_radius_cb(n, af, tol).value, chain_radius_cb(n, qa).to_double());
            if (n >= 2)
                rel(oracle::chain_radius_ca(n, af, tol).value, chain_radius_ca(n, qa).to_double());
        }
        rel(oracle::square_side(af, tol).value, square_in_delta(QNum::rational(a, 1)).side.to_double());
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst relative error %.3e (limit 1e-10)", worst);
    return {worst <= 1e-10, buf};
}

Outcome coincidence()
{
    bool ok = true;
    for (const auto& a : a_samples) {
        const QNum qa = QNum::rational(a, 1);
        const auto sq = square_in_delta(qa);
        const auto cfg = build_cb(1, qa);
        ok = ok && sq.B == cfg.B && sq.C == cfg.C && incircle_delta(qa) == cfg.chain.at(0);
    }
    return {ok, "square corners B, C and incircle match CB(1) exactly"};
}

Outcome minus_sign()
{
    int failures = 0;
    for (const auto& a : a_samples) {
        for (unsigned n = 2; n <= 100; ++n) {
            const QNum qa = QNum::rational(a, n);
            const QNum gap = chain_radius_cb(n, qa) * Rational(2) - rejected_height_cb(n, qa);
            failures += gap.sign() == -1 ? 0 : 1;
        }
    }
    return {failures == 0, "sign(2b - d-) = -1 for n = 2..100, " + std::to_string(failures) + " failures"};
}

Outcome determinism()
{
    bool ok = true;
    for (const auto& cfg :
         {build_cb(5, QNum::rational(Rational(1), 5)), build_ca(4, QNum::rational(Rational(1), 4))}) {
        const auto first = render_svg(cfg);
        const auto second = render_svg(cfg);
        const int circles = static_cast<int>(cfg.outer.size() + cfg.chain.size());
        ok = ok && first == second && testing::count_elements(first, "circle") == circles &&
             testing::count_elements(first, "line") == 1 &&
             testing::count_elements(first, "ellipse") == 3;
    }
    return {ok, "CB(5) and CA(4) byte-identical, element counts match"};
}

Outcome properties()
{
    testing::Gen gen(20261019);
    const int axioms = testing::field_axiom_failures(gen, 1000);
    const int roots = testing::sqrt_roundtrip_failures(gen, 1000);
    const int signs = testing::sign_consistency_failures(gen, 1000);
    return {axioms + roots + signs == 0,
            "failures: axioms " + std::to_string(axioms) + ", sqrt " + std::to_string(roots) +
                ", sign " + std::to_string(signs) + " (1000 cases each)"};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 square side 2a = 5|AB|", problem_square},
        {"AC2 CB(n) exact sweep n = 1..100", [] { return sweep(ChainKind::CB); }},
        {"AC3 CA(n) exact sweep n = 2..100", [] { return sweep(ChainKind::CA); }},
        {"AC4 oracle agreement", oracle_agreement},
        {"AC5 square / incircle coincidence", coincidence},
        {"AC6 minus-sign root rejected", minus_sign},
        {"AC7 SVG determinism", determinism},
        {"AC8 Q(sqrt n) property suites", properties},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
