#include "chaingeo/config.hpp"

#include <functional>

#include "chaingeo/errors.hpp"

namespace chaingeo {

namespace {

void require_positive(const QNum& a, const char* what)
{
    if (a.sign() <= 0)
        throw ParameterError(std::string(what) + " must be positive, got " + a.to_string());
}

QNum scalar(long v, Radicand n)
{
    return QNum::rational(Rational(v), n);
}

/// Congruent chain of radius b centered on x = 0, left to right.
std::vector<Circle> congruent_chain(unsigned n, const QNum& b)
{
    std::vector<Circle> chain;
    chain.reserve(n);
    for (unsigned i = 1; i <= n; ++i) {
        const long offset = 2 * static_cast<long>(i) - 1 - static_cast<long>(n);
        chain.emplace_back(Point(b * Rational(offset), b), b);
    }
    return chain;
}

void finish(ChainConfig& cfg, const Circle& left, const Circle& right)
{
    cfg.C = tangency_point(left, cfg.chain.front());
    cfg.B = tangency_point(right, cfg.chain.back());
    cfg.A = foot_on_baseline(cfg.B);
    cfg.d = cfg.B.y;
    cfg.bc = cfg.B.x * Rational(2);

    const auto report = verify_config(cfg);
    if (!report.overall()) {
        for (const auto& e : report.entries)
            if (!e.holds)
                throw GeometryError(std::string("constructed ") + to_string(cfg.kind) + "(" +
                                    std::to_string(cfg.n) + ") fails: " + e.name);
    }
}

/// Runs one check, treating any exception from a malformed config as failure.
bool holds(const std::function<bool()>& check)
{
    try {
        return check();
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

const char* to_string(ChainKind kind)
{
    return kind == ChainKind::CB ? "CB" : "CA";
}

bool VerificationReport::overall() const
{
    for (const auto& e : entries)
        if (!e.holds)
            return false;
    return true;
}

QNum chain_radius_cb(unsigned n, const QNum& a)
{
    if (n == 0)
        throw ParameterError("CB chain needs at least one circle");
    require_positive(a, "outer radius a");
    const QNum an = a.promoted_to(n);
    const QNum s = QNum::root(n) + scalar(1, n);
    return an / (s * s);
}

ChainConfig build_cb(unsigned n, const QNum& a)
{
    ChainConfig cfg;
    cfg.kind = ChainKind::CB;
    cfg.n = n;
    cfg.b = chain_radius_cb(n, a);
    cfg.a = a.promoted_to(n);
    cfg.outer = {Circle(Point(-cfg.a, cfg.a), cfg.a), Circle(Point(cfg.a, cfg.a), cfg.a)};
    cfg.chain = congruent_chain(n, cfg.b);
    finish(cfg, cfg.outer[0], cfg.outer[1]);
    return cfg;
}

QNum chain_radius_ca(unsigned n, const QNum& a)
{
    if (n < 2)
        throw ParameterError("CA chain needs at least two circles");
    require_positive(a, "outer radius a");
    const QNum an = a.promoted_to(n);
    const long m = static_cast<long>(n) - 1;
    return an * Rational(4) / Rational(m * m);
}

ChainConfig build_ca(unsigned n, const QNum& a)
{
    ChainConfig cfg;
    cfg.kind = ChainKind::CA;
    cfg.n = n;
    cfg.b = chain_radius_ca(n, a);
    cfg.a = a.promoted_to(n);
    cfg.outer = {Circle(Point(scalar(0, n), cfg.a), cfg.a)};
    cfg.chain = congruent_chain(n, cfg.b);
    finish(cfg, cfg.outer[0], cfg.outer[0]);
    return cfg;
}

Circle incircle_delta(const QNum& a)
{
    require_positive(a, "outer radius a");
    const QNum r = a / Rational(4);
    return Circle(Point(QNum::rational(Rational(0), a.radicand()), r), r);
}

SquareResult square_in_delta(const QNum& a)
{
    require_positive(a, "outer radius a");
    const Radicand n = a.radicand();
    // B = (s/2, s) on the right circle ((a, a), a):
    // (s/2 - a)^2 + (s - a)^2 = a^2  <=>  (5/4) s^2 - 3a s + a^2 = 0.
    const Rational lead(5, 4);
    const QNum linear = a * Rational(-3);
    const QNum constant = a * a;
    const QNum disc = linear * linear - constant * (Rational(4) * lead);
    const auto root = disc.sqrt();
    if (!root)
        throw ArithmeticError("square placement discriminant has no root in the field");
    const QNum s1 = (-linear - *root) / (Rational(2) * lead);
    const QNum s2 = (-linear + *root) / (Rational(2) * lead);

    // Only the root below a fits between the two circles.
    const bool first = s1.sign() > 0 && compare(s1, a) < 0;
    SquareResult sq;
    sq.side = first ? s1 : s2;
    sq.rejected_side = first ? s2 : s1;
    if (sq.side.sign() <= 0 || compare(sq.side, a) >= 0)
        throw GeometryError("no square fits between the circles");

    const QNum half = sq.side / Rational(2);
    const QNum zero = QNum::rational(Rational(0), n);
    sq.A = Point(half, zero);
    sq.B = Point(half, sq.side);
    sq.C = Point(-half, sq.side);
    sq.D = Point(-half, zero);

    const Circle left(Point(-a, a), a);
    const Circle right(Point(a, a), a);
    if (!on_circle(sq.B, right) || !on_circle(sq.C, left))
        throw GeometryError("square corners are not on the outer circles");
    return sq;
}

QNum rejected_height_cb(unsigned n, const QNum& a)
{
    if (n == 0)
        throw ParameterError("CB chain needs at least one circle");
    require_positive(a, "outer radius a");
    const QNum an = a.promoted_to(n);
    const QNum m = scalar(1, n) - QNum::root(n);
    return an * Rational(2) / (scalar(1, n) + m * m);
}

VerificationReport verify_config(const ChainConfig& cfg)
{
    VerificationReport report;
    const bool cb = cfg.kind == ChainKind::CB;
    const Radicand n = cfg.radicand();
    const QNum& a = cfg.a;
    const QNum& b = cfg.b;
    const QNum& d = cfg.d;
    const QNum h = cfg.bc / Rational(2);

    const std::size_t expected_outer = cb ? 2 : 1;
    const bool shape_ok = cfg.outer.size() == expected_outer && cfg.chain.size() == cfg.n &&
                          !cfg.chain.empty();
    report.add("shape", shape_ok);
    if (!shape_ok)
        return report;

    const Circle& left = cfg.outer.front();
    const Circle& right = cfg.outer.back();

    report.add("radii", holds([&] {
        if (a.sign() <= 0 || b.sign() <= 0)
            return false;
        for (const auto& c : cfg.outer)
            if (c.r != a)
                return false;
        for (const auto& c : cfg.chain)
            if (c.r != b)
                return false;
        return true;
    }));
    report.add("baseline contact", holds([&] {
        for (const auto& c : cfg.outer)
            if (!touches_baseline(c))
                return false;
        for (const auto& c : cfg.chain)
            if (!touches_baseline(c))
                return false;
        return true;
    }));
    report.add("chain adjacency", holds([&] {
        for (std::size_t i = 1; i < cfg.chain.size(); ++i)
            if (tangency_kind(cfg.chain[i - 1], cfg.chain[i]) != Tangency::external)
                return false;
        return true;
    }));
    if (cb)
        report.add("outer circles touch",
                   holds([&] { return tangency_kind(left, right) == Tangency::external; }));
    report.add("first chain circle touches outer",
               holds([&] { return tangency_kind(left, cfg.chain.front()) == Tangency::external; }));
    report.add("last chain circle touches outer",
               holds([&] { return tangency_kind(right, cfg.chain.back()) == Tangency::external; }));
    report.add("C is a contact point",
               holds([&] { return on_circle(cfg.C, left) && on_circle(cfg.C, cfg.chain.front()); }));
    report.add("B is a contact point",
               holds([&] { return on_circle(cfg.B, right) && on_circle(cfg.B, cfg.chain.back()); }));
    report.add("A is the foot of B", holds([&] { return cfg.A == foot_on_baseline(cfg.B); }));
    report.add("d = |AB|", holds([&] {
        return d.sign() >= 0 && d * d == distance_squared(cfg.A, cfg.B) && d == cfg.B.y;
    }));
    report.add("bc = |BC|", holds([&] {
        return cfg.bc.sign() >= 0 && cfg.bc * cfg.bc == distance_squared(cfg.B, cfg.C);
    }));
    report.add("mirror symmetry", holds([&] {
        if (cfg.C.x != -cfg.B.x || cfg.C.y != cfg.B.y)
            return false;
        if (left.center.x != -right.center.x || left.center.y != right.center.y)
            return false;
        const std::size_t k = cfg.chain.size();
        for (std::size_t i = 0; i < k; ++i)
            if (cfg.chain[i].center.x != -cfg.chain[k - 1 - i].center.x)
                return false;
        return true;
    }));
    report.add("contact divides centers a:b", holds([&] {
        return (d - b) / b == (a - b) / (a + b);
    }));
    if (cb) {
        report.add("right triangle (a-h)^2 + (a-d)^2 = a^2", holds([&] {
            return (a - h) * (a - h) + (a - d) * (a - d) == a * a;
        }));
        report.add("half chord h = a - sqrt((2a-d)d)", holds([&] {
            const auto root = ((a * Rational(2) - d) * d).sqrt();
            return root && *root == a - h;
        }));
        report.add("radius law a = (sqrt(n)+1)^2 b", holds([&] {
            const QNum s = QNum::root(n) + Rational(1);
            return a == s * s * b;
        }));
        report.add("chord law n|AB| = |BC|",
                   holds([&] { return d * Rational(static_cast<long>(cfg.n)) == cfg.bc; }));
        report.add("height law 2a = ((sqrt(n)+1)^2+1)|AB|", holds([&] {
            const QNum s = QNum::root(n) + Rational(1);
            return a * Rational(2) == (s * s + Rational(1)) * d;
        }));
    } else {
        const long m = static_cast<long>(cfg.n) - 1;
        report.add("right triangle h^2 + (a-d)^2 = a^2", holds([&] {
            return h * h + (a - d) * (a - d) == a * a;
        }));
        report.add("half chord h = sqrt((2a-d)d)", holds([&] {
            const auto root = ((a * Rational(2) - d) * d).sqrt();
            return root && *root == h;
        }));
        report.add("radius ratio a:b = (n-1)^2:4",
                   holds([&] { return a * Rational(4) == b * Rational(m * m); }));
        report.add("chord law (n-1)|AB| = |BC|",
                   holds([&] { return d * Rational(m) == cfg.bc; }));
        report.add("height law 2a = ((n-1)^2+4)|AB|/4", holds([&] {
            return a * Rational(2) == d * Rational(m * m + 4) / Rational(4);
        }));
    }
    return report;
}

} // namespace chaingeo
