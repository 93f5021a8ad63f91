#pragma once

#include "chaingeo/qnum.hpp"

namespace chaingeo {

// Every circle in this library rests on the baseline y = 0 from above, so the
// tangent line never needs its own type.

struct Point {
    QNum x;
    QNum y;

    Point() = default;
    Point(QNum x_, QNum y_);

    Radicand radicand() const { return x.radicand(); }

    friend bool operator==(const Point&, const Point&) = default;
};

struct Circle {
    Point center;
    QNum r;

    Circle() = default;
    /// Throws ParameterError unless r > 0, RadicandMismatch on mixed fields.
    Circle(Point center_, QNum r_);

    friend bool operator==(const Circle&, const Circle&) = default;
};

enum class Tangency { external, internal, none };

const char* to_string(Tangency kind);

/// Squared Euclidean distance.
QNum distance_squared(const Point& p1, const Point& p2);

/// Contact relation decided on squared distances. Throws GeometryError for
/// two identical circles.
Tangency tangency_kind(const Circle& c1, const Circle& c2);

/// The contact point of two externally tangent circles, which divides the
/// center segment internally in the ratio r1 : r2. Throws GeometryError when
/// the circles are not externally tangent.
Point tangency_point(const Circle& c1, const Circle& c2);

bool on_circle(const Point& p, const Circle& c);

bool touches_baseline(const Circle& c);

/// Orthogonal projection onto the baseline.
Point foot_on_baseline(const Point& p);

} // namespace chaingeo
