#include "chaingeo/geom.hpp"

#include "chaingeo/errors.hpp"

namespace chaingeo {

Point::Point(QNum x_, QNum y_) : x(std::move(x_)), y(std::move(y_))
{
    if (x.radicand() != y.radicand())
        throw RadicandMismatch("point coordinates from different fields");
}

Circle::Circle(Point center_, QNum r_) : center(std::move(center_)), r(std::move(r_))
{
    if (center.radicand() != r.radicand())
        throw RadicandMismatch("circle center and radius from different fields");
    if (r.sign() <= 0)
        throw ParameterError("circle radius must be positive, got " + r.to_string());
}

const char* to_string(Tangency kind)
{
    switch (kind) {
    case Tangency::external: return "external";
    case Tangency::internal: return "internal";
    case Tangency::none: return "none";
    }
    return "none";
}

QNum distance_squared(const Point& p1, const Point& p2)
{
    const QNum dx = p2.x - p1.x;
    const QNum dy = p2.y - p1.y;
    return dx * dx + dy * dy;
}

Tangency tangency_kind(const Circle& c1, const Circle& c2)
{
    if (c1 == c2)
        throw GeometryError("contact of a circle with itself is undefined");
    const QNum dist2 = distance_squared(c1.center, c2.center);
    const QNum sum = c1.r + c2.r;
    if (dist2 == sum * sum)
        return Tangency::external;
    if (c1.r != c2.r) {
        const QNum diff = c1.r - c2.r;
        if (dist2 == diff * diff)
            return Tangency::internal;
    }
    return Tangency::none;
}

Point tangency_point(const Circle& c1, const Circle& c2)
{
    if (tangency_kind(c1, c2) != Tangency::external)
        throw GeometryError("tangency point requested for circles that are not externally tangent");
    const QNum t = c1.r / (c1.r + c2.r);
    Point p(c1.center.x + t * (c2.center.x - c1.center.x),
            c1.center.y + t * (c2.center.y - c1.center.y));
    if (!on_circle(p, c1) || !on_circle(p, c2))
        throw GeometryError("tangency point not on both circles");
    return p;
}

bool on_circle(const Point& p, const Circle& c)
{
    return distance_squared(p, c.center) == c.r * c.r;
}

bool touches_baseline(const Circle& c)
{
    return c.center.y == c.r;
}

Point foot_on_baseline(const Point& p)
{
    return Point(p.x, QNum::rational(Rational(0), p.radicand()));
}

} // namespace chaingeo
