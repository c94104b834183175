#pragma once

// Generalized circles (circles and lines) in the plane, tangency residuals,
// and circle inversion with exact line/circle case handling.

#include <cmath>
#include <string>
#include <variant>

#include "hypmut/errors.hpp"

namespace hypmut::geom {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(norm2(a)); }
inline Vec2 unit(Vec2 a) {
    const double n = norm(a);
    if (n == 0) throw domain_error("unit: zero vector");
    return {a.x / n, a.y / n};
}
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

struct Circle {
    Vec2 center;
    double radius;
};

// Points x with dot(normal, x) == offset; normal has unit norm.
struct Line {
    Vec2 normal;
    double offset;
};

using GeneralizedCircle = std::variant<Circle, Line>;

inline bool is_circle(const GeneralizedCircle& g) {
    return std::holds_alternative<Circle>(g);
}
inline const Circle& as_circle(const GeneralizedCircle& g) {
    return std::get<Circle>(g);
}
inline const Line& as_line(const GeneralizedCircle& g) {
    return std::get<Line>(g);
}

// Signed external-tangency residual; zero exactly at tangency.
// Circle-circle uses center distance, circle-line the unsigned distance.
inline double tangency_residual(const GeneralizedCircle& a,
                                const GeneralizedCircle& b) {
    if (is_circle(a) && is_circle(b)) {
        const Circle& ca = as_circle(a);
        const Circle& cb = as_circle(b);
        return norm(ca.center - cb.center) - (ca.radius + cb.radius);
    }
    if (!is_circle(a) && !is_circle(b))
        throw domain_error("tangency_residual: line-line tangency undefined");
    const Circle& c = is_circle(a) ? as_circle(a) : as_circle(b);
    const Line& l = is_circle(a) ? as_line(b) : as_line(a);
    return std::abs(dot(l.normal, c.center) - l.offset) - c.radius;
}

// Inversion z -> center + k2 * (z - center)/|z - center|^2.
struct Inversion {
    Vec2 center;
    double k2 = 1.0;
};

inline Vec2 apply(const Inversion& inv, Vec2 p) {
    const Vec2 d = p - inv.center;
    const double n2 = norm2(d);
    if (n2 == 0) throw domain_error("inversion: point at center");
    return inv.center + (inv.k2 / n2) * d;
}

// Case-exact image of a generalized circle. A circle through the inversion
// center maps to a line and vice versa; the incidence test uses eps.
inline GeneralizedCircle apply(const Inversion& inv, const GeneralizedCircle& g,
                               double eps = 1e-12) {
    if (is_circle(g)) {
        const Circle& c = as_circle(g);
        const Vec2 d = c.center - inv.center;
        const double s = norm2(d) - c.radius * c.radius;
        if (std::abs(s) > eps * std::max(1.0, norm2(d))) {
            return Circle{inv.center + (inv.k2 / s) * d,
                          std::abs(inv.k2) * c.radius / std::abs(s)};
        }
        // circle through the center -> line perpendicular to d
        const Vec2 u = unit(d);
        const double offset = dot(u, inv.center) + inv.k2 / (2.0 * norm(d));
        return Line{u, offset};
    }
    const Line& l = as_line(g);
    const double h = l.offset - dot(l.normal, inv.center);
    if (std::abs(h) <= eps) return g;  // line through the center is fixed
    const double r = std::abs(inv.k2 / (2.0 * h));
    return Circle{inv.center + (inv.k2 / (2.0 * h)) * l.normal, r};
}

// Orientation-preserving similarity x -> scale * R(theta) x + shift.
struct Similarity {
    double scale = 1.0;
    double cos_t = 1.0;
    double sin_t = 0.0;
    Vec2 shift;
};

inline Vec2 apply(const Similarity& s, Vec2 p) {
    return Vec2{s.scale * (s.cos_t * p.x - s.sin_t * p.y) + s.shift.x,
                s.scale * (s.sin_t * p.x + s.cos_t * p.y) + s.shift.y};
}

inline GeneralizedCircle apply(const Similarity& s,
                               const GeneralizedCircle& g) {
    if (is_circle(g)) {
        const Circle& c = as_circle(g);
        return Circle{apply(s, c.center), s.scale * c.radius};
    }
    const Line& l = as_line(g);
    const Vec2 n{s.cos_t * l.normal.x - s.sin_t * l.normal.y,
                 s.sin_t * l.normal.x + s.cos_t * l.normal.y};
    return Line{n, s.scale * l.offset + dot(n, s.shift)};
}

// Reflection across a vertical axis x = axis_x, available for normalizing
// mirror-symmetric configurations to a fixed handedness.
inline GeneralizedCircle mirror_x(const GeneralizedCircle& g, double axis_x) {
    if (is_circle(g)) {
        const Circle& c = as_circle(g);
        return Circle{{2 * axis_x - c.center.x, c.center.y}, c.radius};
    }
    const Line& l = as_line(g);
    return Line{{-l.normal.x, l.normal.y},
                l.offset - 2 * axis_x * l.normal.x};
}

}  // namespace hypmut::geom
