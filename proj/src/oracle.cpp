#include "chaingeo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "chaingeo/errors.hpp"

namespace chaingeo::oracle {

namespace {

void check_inputs(double a, double tol)
{
    if (!(a > 0.0) || !std::isfinite(a))
        throw ParameterError("oracle needs a finite a > 0");
    if (!(tol > 0.0) || !(tol < a))
        throw ParameterError("oracle needs 0 < tol < a");
}

struct FPoint {
    double x = 0.0;
    double y = 0.0;
};

struct FCircle {
    FPoint c;
    double r = 0.0;
};

double dist(FPoint p, FPoint q)
{
    return std::hypot(p.x - q.x, p.y - q.y);
}

FPoint to_float(const Point& p)
{
    return {p.x.to_double(), p.y.to_double()};
}

FCircle to_float(const Circle& c)
{
    return {to_float(c.center), c.r.to_double()};
}

} // namespace

OracleResult chain_radius_cb(unsigned n, double a, double tol)
{
    if (n == 0)
        throw ParameterError("CB chain needs at least one circle");
    check_inputs(a, tol);
    const double gaps = static_cast<double>(n - 1);
    // Circle (x, b) touches ((-a, a), a) iff (x + a)^2 + (a - b)^2 = (a + b)^2,
    // i.e. x = -a + 2 sqrt(ab); by symmetry the last one sits at a - 2 sqrt(ab).
    // The chain closes when that span equals 2b(n - 1). f is increasing in b.
    const auto closure = [&](double b) {
        const double first = -a + 2.0 * std::sqrt(a * b);
        const double last = a - 2.0 * std::sqrt(a * b);
        return 2.0 * b * gaps - (last - first);
    };
    return bisect(closure, 0.0, a, tol);
}

OracleResult chain_radius_ca(unsigned n, double a, double tol)
{
    if (n < 2)
        throw ParameterError("CA chain needs at least two circles");
    check_inputs(a, tol);
    const double half_span = static_cast<double>(n - 1);
    // End circle ((n-1)b, b) touching ((0, a), a):
    //   ((n-1)b)^2 + (a - b)^2 - (a + b)^2 = 0.
    // b = 0 is a degenerate root, so bisect the residual per unit b, whose
    // limit at b -> 0 is -4a.
    const auto contact = [&](double b) {
        if (b == 0.0)
            return -4.0 * a;
        const double dx = half_span * b;
        const double dy = a - b;
        return (dx * dx + dy * dy - (a + b) * (a + b)) / b;
    };
    // At b = 4a + 1 the horizontal offset alone already exceeds the reach of
    // the contact, so the residual is positive there for every n >= 2.
    return bisect(contact, 0.0, 4.0 * a + 1.0, tol);
}

OracleResult square_side(double a, double tol)
{
    check_inputs(a, tol);
    // Corner (s/2, s) on the circle ((a, a), a); decreasing on (0, a).
    const auto on_circle = [&](double s) {
        const double dx = s / 2.0 - a;
        const double dy = s - a;
        return dx * dx + dy * dy - a * a;
    };
    return bisect(on_circle, 0.0, a, tol);
}

double numeric_residuals(const ChainConfig& cfg)
{
    if (cfg.outer.empty() || cfg.chain.empty())
        return std::numeric_limits<double>::infinity();

    const double a = cfg.a.to_double();
    const double b = cfg.b.to_double();
    const double d = cfg.d.to_double();
    const double bc = cfg.bc.to_double();
    const double n = static_cast<double>(cfg.n);
    const FPoint A = to_float(cfg.A);
    const FPoint B = to_float(cfg.B);
    const FPoint C = to_float(cfg.C);

    std::vector<FCircle> outer;
    std::vector<FCircle> chain;
    for (const auto& c : cfg.outer)
        outer.push_back(to_float(c));
    for (const auto& c : cfg.chain)
        chain.push_back(to_float(c));
    const FCircle& left = outer.front();
    const FCircle& right = outer.back();

    double worst = 0.0;
    const auto track = [&](double r) { worst = std::max(worst, std::abs(r)); };
    const auto touching = [&](const FCircle& c1, const FCircle& c2) {
        track(dist(c1.c, c2.c) - (c1.r + c2.r));
    };
    const auto on = [&](FPoint p, const FCircle& c) { track(dist(p, c.c) - c.r); };

    for (const auto& c : outer)
        track(c.c.y - c.r);
    for (const auto& c : chain) {
        track(c.c.y - c.r);
        track(c.r - b);
    }
    for (std::size_t i = 1; i < chain.size(); ++i)
        touching(chain[i - 1], chain[i]);
    if (cfg.kind == ChainKind::CB)
        touching(left, right);
    touching(left, chain.front());
    touching(right, chain.back());
    on(C, left);
    on(C, chain.front());
    on(B, right);
    on(B, chain.back());

    track(A.y);
    track(A.x - B.x);
    track(d - B.y);
    track(bc - dist(B, C));
    track(C.x + B.x);
    // Contact point divides the center segment a:b.
    track((d - b) - b * (a - b) / (a + b));
    if (cfg.kind == ChainKind::CB) {
        const double s = std::sqrt(n) + 1.0;
        track(n * d - bc);
        track(2.0 * a - (s * s + 1.0) * d);
    } else {
        const double m = n - 1.0;
        track(m * d - bc);
        track(2.0 * a - (m * m + 4.0) * d / 4.0);
    }
    return worst / a;
}

} // namespace chaingeo::oracle
