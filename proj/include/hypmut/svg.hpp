#pragma once

// SVG 1.1 rendering of solved cusp rectangles: y-down screen space, the unit
// rectangle height mapped to 500 user units, one <circle> or <line> element
// per generalized circle with face classes, plus the corner maximal-horoball
// shadows.

#include <algorithm>
#include <cstdio>
#include <string>

#include "hypmut/packing.hpp"

namespace hypmut::svg {

namespace detail {

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string css_class(const std::string& name) {
    if (name.rfind("wall", 0) == 0) return "shaded-face";
    if (name.rfind("horoball", 0) == 0) return "horoball";
    return "white-face";
}

}  // namespace detail

inline std::string render_rectangle(const packing::CuspRectangle& rect) {
    constexpr double kHeight = 500.0;  // one geometric unit
    constexpr double kStroke = 0.003 * kHeight;

    // geometric bounding box over all circles, then extend for horoballs
    double x_min = 0.0, x_max = rect.ell_w;
    for (const auto& [name, gc] : rect.elements) {
        if (!geom::is_circle(gc)) continue;
        const geom::Circle& c = geom::as_circle(gc);
        x_min = std::min(x_min, c.center.x - c.radius);
        x_max = std::max(x_max, c.center.x + c.radius);
    }
    x_min -= 0.55;
    x_max += 0.55;
    const double y_lo = -0.55, y_hi = 1.55;

    auto X = [&](double x) { return (x - x_min) * kHeight; };
    auto Y = [&](double y) { return (y_hi - y) * kHeight; };  // y-down

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
           detail::fmt((x_max - x_min) * kHeight) + " " +
           detail::fmt((y_hi - y_lo) * kHeight) + "\">\n";
    out += "  <style>.white-face{stroke:#1b4b8a;fill:none}"
           ".shaded-face{stroke:#888;stroke-dasharray:9 6;fill:none}"
           ".horoball{stroke:#b03030;fill:none}"
           "circle,line{stroke-width:" + detail::fmt(kStroke) + "}</style>\n";

    auto emit_line = [&](const std::string& cls, const geom::Line& l) {
        // vertical walls and horizontal faces only
        if (std::abs(l.normal.x) > std::abs(l.normal.y)) {
            const double x = l.offset / l.normal.x;
            out += "  <line class=\"" + cls + "\" x1=\"" + detail::fmt(X(x)) +
                   "\" y1=\"" + detail::fmt(Y(y_lo)) + "\" x2=\"" +
                   detail::fmt(X(x)) + "\" y2=\"" + detail::fmt(Y(y_hi)) +
                   "\"/>\n";
        } else {
            const double y = l.offset / l.normal.y;
            out += "  <line class=\"" + cls + "\" x1=\"" +
                   detail::fmt(X(x_min)) + "\" y1=\"" + detail::fmt(Y(y)) +
                   "\" x2=\"" + detail::fmt(X(x_max)) + "\" y2=\"" +
                   detail::fmt(Y(y)) + "\"/>\n";
        }
    };
    auto emit_circle = [&](const std::string& cls, const geom::Circle& c) {
        out += "  <circle class=\"" + cls + "\" cx=\"" +
               detail::fmt(X(c.center.x)) + "\" cy=\"" +
               detail::fmt(Y(c.center.y)) + "\" r=\"" +
               detail::fmt(c.radius * kHeight) + "\"/>\n";
    };

    for (const auto& [name, gc] : rect.elements) {
        const std::string cls = detail::css_class(name);
        if (geom::is_circle(gc))
            emit_circle(cls, geom::as_circle(gc));
        else
            emit_line(cls, geom::as_line(gc));
    }
    // maximal-horoball shadows at the rectangle corners
    double wall_lo = 0.0, wall_hi = rect.ell_w;
    if (rect.rect_kind == packing::RectKind::KnotCusp) {
        wall_lo = -0.5 * rect.ell_w;
        wall_hi = 0.5 * rect.ell_w;
    }
    for (double x : {wall_lo, wall_hi})
        for (double y : {0.0, 1.0})
            emit_circle("horoball", geom::Circle{{x, y}, 0.5});

    out += "</svg>\n";
    return out;
}

}  // namespace hypmut::svg
