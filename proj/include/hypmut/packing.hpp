#pragma once

// Tangent-circle packings for the two cusp cross-section rectangles of the
// untwisted augmented links: a damped Gauss-Newton solver over declared
// tangency graphs, and an independent Mobius/Steiner-chain construction of
// the same configurations.
//
// Geometry conventions (the cusp-expansion normalization):
//   * the shaded step has length ell_s = 1, realized as two horizontal lines
//     y = 0 and y = 1;
//   * in the crossing rectangle the shaded walls pass through the centers of
//     the diameter-1 circles A and B, which forces ell_w = 1 + D(P*);
//   * in the knot rectangle the walls pass through the centers of the two
//     diameter-1 wall circles.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypmut/errors.hpp"
#include "hypmut/geometry.hpp"
#include "hypmut/numeric.hpp"

namespace hypmut::packing {

using geom::Circle;
using geom::GeneralizedCircle;
using geom::Line;
using geom::Vec2;

// A coordinate is either fixed or an affine image of one solver parameter;
// sharing a parameter across nodes encodes a symmetry identification.
struct Binding {
    int param = -1;
    double scale = 1.0;
    double offset = 0.0;
    static Binding fixed(double v) { return Binding{-1, 0.0, v}; }
    static Binding var(int idx, double scale = 1.0, double offset = 0.0) {
        return Binding{idx, scale, offset};
    }
    double eval(const std::vector<double>& p) const {
        return param < 0 ? offset : scale * p[param] + offset;
    }
};

struct CircleSpec {
    std::string name;
    Binding cx, cy, r;
};

struct FixedLine {
    std::string name;
    Line line;
};

struct NodeRef {
    bool is_line = false;
    int index = 0;
};

struct TangencyGraph {
    std::vector<CircleSpec> circles;
    std::vector<FixedLine> lines;
    std::vector<std::pair<NodeRef, NodeRef>> edges;
    int param_count = 0;

    NodeRef circle(int i) const { return NodeRef{false, i}; }
    NodeRef line(int i) const { return NodeRef{true, i}; }

    GeneralizedCircle materialize(const NodeRef& ref,
                                  const std::vector<double>& p) const {
        if (ref.is_line) return lines[ref.index].line;
        const CircleSpec& c = circles[ref.index];
        return Circle{{c.cx.eval(p), c.cy.eval(p)}, c.r.eval(p)};
    }

    std::vector<double> residuals(const std::vector<double>& p) const {
        std::vector<double> r;
        r.reserve(edges.size());
        for (const auto& [a, b] : edges)
            r.push_back(geom::tangency_residual(materialize(a, p),
                                                materialize(b, p)));
        return r;
    }

    double max_residual(const std::vector<double>& p) const {
        double m = 0.0;
        for (double v : residuals(p)) m = std::max(m, std::abs(v));
        return m;
    }

    bool radii_positive(const std::vector<double>& p) const {
        for (const CircleSpec& c : circles)
            if (!(c.r.eval(p) > 0)) return false;
        return true;
    }
};

namespace detail {

// Dense least-squares step: solves (J^T J) d = -J^T r by Gaussian
// elimination with partial pivoting. Systems here have at most a few dozen
// parameters.
inline std::vector<double> normal_equation_step(
    const std::vector<std::vector<double>>& J, const std::vector<double>& r,
    int n) {
    const int m = static_cast<int>(r.size());
    std::vector<std::vector<double>> A(n, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < m; ++k) s += J[k][i] * J[k][j];
            A[i][j] = s;
        }
        double s = 0.0;
        for (int k = 0; k < m; ++k) s += J[k][i] * r[k];
        A[i][n] = -s;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row)
            if (std::abs(A[row][col]) > std::abs(A[pivot][col])) pivot = row;
        if (std::abs(A[pivot][col]) < 1e-14)
            throw numerical_error("solve_tangency: Jacobian is singular");
        std::swap(A[col], A[pivot]);
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            const double f = A[row][col] / A[col][col];
            for (int j = col; j <= n; ++j) A[row][j] -= f * A[col][j];
        }
    }
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = A[i][n] / A[i][i];
    return d;
}

}  // namespace detail

// Damped Gauss-Newton on the tangency residuals. Converges to
// max |residual| < 1e-12 or throws with a residual trace.
inline std::vector<double> solve_tangency(const TangencyGraph& g,
                                          std::vector<double> params,
                                          double target = 1e-12,
                                          int max_iterations = 100) {
    const int n = g.param_count;
    if (static_cast<int>(params.size()) != n)
        throw usage_error("solve_tangency: initial assignment size mismatch");

    auto inf_norm = [](const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    };

    std::vector<double> r = g.residuals(params);
    double best = inf_norm(r);
    std::string trace;
    int stalls = 0;
    for (int it = 0; it < max_iterations; ++it) {
        if (best < target && g.radii_positive(params)) return params;
        const int m = static_cast<int>(r.size());
        std::vector<std::vector<double>> J(m, std::vector<double>(n, 0.0));
        for (int j = 0; j < n; ++j) {
            const double h = 1e-7 * std::max(1.0, std::abs(params[j]));
            std::vector<double> pp = params, pm = params;
            pp[j] += h;
            pm[j] -= h;
            const std::vector<double> rp = g.residuals(pp);
            const std::vector<double> rm = g.residuals(pm);
            for (int i = 0; i < m; ++i) J[i][j] = (rp[i] - rm[i]) / (2 * h);
        }
        std::vector<double> step = detail::normal_equation_step(J, r, n);
        double lambda = 1.0;
        bool improved = false;
        for (int half = 0; half < 40; ++half) {
            std::vector<double> trial = params;
            for (int j = 0; j < n; ++j) trial[j] += lambda * step[j];
            if (g.radii_positive(trial)) {
                const std::vector<double> rt = g.residuals(trial);
                const double nt = inf_norm(rt);
                if (nt < best) {
                    params = std::move(trial);
                    r = rt;
                    best = nt;
                    improved = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        trace += (trace.empty() ? "" : " ") + std::to_string(best);
        if (!improved && ++stalls >= 3)
            throw numerical_error(
                "solve_tangency: diverged, residual trace: " + trace, best);
    }
    if (best < target && g.radii_positive(params)) return params;
    throw numerical_error(
        "solve_tangency: no convergence after max iterations, trace: " + trace,
        best);
}

enum class RectKind { CrossingCircle, KnotCusp };

// Solved cusp cross-section rectangle. ell_s is always 1 by normalization.
struct CuspRectangle {
    RectKind rect_kind = RectKind::CrossingCircle;
    int n = 0;
    double ell_s = 1.0;
    double ell_w = 0.0;
    double residual = 0.0;
    std::map<std::string, double> circle_diameters;
    // Solved geometry in rectangle coordinates, for rendering and dumps.
    std::vector<std::pair<std::string, GeneralizedCircle>> elements;
};

namespace detail {

inline void check_rectangle(const CuspRectangle& rect) {
    if (!(rect.residual < 1e-10))
        throw numerical_error("packing residual exceeds 1e-10",
                              rect.residual);
    if (!(rect.ell_w > 1.0 && rect.ell_w < 2.0))
        throw consistency_error("packing: ell_w outside (1, 2)");
    if (rect.rect_kind == RectKind::CrossingCircle) {
        const double expect = 1.0 + rect.circle_diameters.at("Pstar");
        if (std::abs(rect.ell_w - expect) > 1e-9)
            throw consistency_error(
                "packing: crossing rectangle violates ell_w = 1 + D(P*)");
    }
}

}  // namespace detail

// Crossing-circle rectangle: images of P_i, P_i+1 are the lines y = 0, 1;
// A and B are diameter-1 circles at mid-height; the remaining 2n-1 circles
// form a vertical chain on the bisector, each tangent to A, B and its
// neighbors, the ends tangent to the lines. Mirror symmetry about mid-height
// is bound into the parameterization before solving.
inline CuspRectangle solve_crossing_rectangle(int n) {
    if (n < 2) throw domain_error("solve_crossing_rectangle: n must be >= 2");
    const int k = 2 * n - 1;
    const int half = (k + 1) / 2;

    TangencyGraph g;
    // params: [0] chain x, [1] A-B center distance d,
    //         [2 .. 2+half-1] radii rho_1..rho_half (mirror-shared),
    //         then y_1..y_{(k-1)/2} (mirror pairs via y -> 1 - y).
    const int y_base = 2 + half;
    g.param_count = y_base + (k - 1) / 2;

    g.lines.push_back({"face_bottom", Line{{0, 1}, 0.0}});
    g.lines.push_back({"face_top", Line{{0, 1}, 1.0}});
    g.circles.push_back({"A", Binding::fixed(0.0), Binding::fixed(0.5),
                         Binding::fixed(0.5)});
    g.circles.push_back({"B", Binding::var(1), Binding::fixed(0.5),
                         Binding::fixed(0.5)});
    for (int j = 1; j <= k; ++j) {
        const int mirror = k + 1 - j;
        const int rp = 2 + std::min(j, mirror) - 1;
        Binding cy = Binding::fixed(0.5);
        if (j < mirror)
            cy = Binding::var(y_base + j - 1);
        else if (j > mirror)
            cy = Binding::var(y_base + mirror - 1, -1.0, 1.0);
        g.circles.push_back(
            {"P" + std::to_string(j), Binding::var(0), cy, Binding::var(rp)});
    }
    const int chain0 = 2;
    for (int j = 0; j < k; ++j) {
        g.edges.emplace_back(g.circle(chain0 + j), g.circle(0));
        g.edges.emplace_back(g.circle(chain0 + j), g.circle(1));
        if (j + 1 < k)
            g.edges.emplace_back(g.circle(chain0 + j), g.circle(chain0 + j + 1));
    }
    g.edges.emplace_back(g.circle(chain0), g.line(0));
    g.edges.emplace_back(g.circle(chain0 + k - 1), g.line(1));

    std::vector<double> p(g.param_count, 0.0);
    const double rho0 = 1.0 / (2.0 * k);
    p[0] = 0.5 * (1.0 + 2 * rho0);
    p[1] = 1.0 + 2 * rho0;
    for (int j = 0; j < half; ++j) p[2 + j] = rho0;
    for (int j = 1; j <= (k - 1) / 2; ++j)
        p[y_base + j - 1] = (2.0 * j - 1.0) * rho0;

    p = solve_tangency(g, p);

    CuspRectangle rect;
    rect.rect_kind = RectKind::CrossingCircle;
    rect.n = n;
    rect.ell_w = p[1];
    rect.residual = g.max_residual(p);
    rect.circle_diameters["A"] = 1.0;
    rect.circle_diameters["B"] = 1.0;
    double d_min = 2.0;
    for (int j = 1; j <= k; ++j) {
        const double d = 2.0 * g.circles[chain0 + j - 1].r.eval(p);
        rect.circle_diameters["P" + std::to_string(j)] = d;
        d_min = std::min(d_min, d);
    }
    rect.circle_diameters["Pstar"] = d_min;
    for (const FixedLine& l : g.lines) rect.elements.emplace_back(l.name, l.line);
    for (std::size_t i = 0; i < g.circles.size(); ++i)
        rect.elements.emplace_back(g.circles[i].name,
                                   g.materialize(g.circle(static_cast<int>(i)), p));
    rect.elements.emplace_back("wall_left", Line{{1, 0}, 0.0});
    rect.elements.emplace_back("wall_right", Line{{1, 0}, rect.ell_w});
    detail::check_rectangle(rect);
    return rect;
}

namespace detail {

// Concentric Steiner-chain normal form: inner circle radius 1 (A), outer
// radius R (B), 2n+1 equal circles between them.
struct SteinerChain {
    double R;
    double rho;
    double rc;
    std::vector<Vec2> centers;
};

inline SteinerChain steiner_chain(int n) {
    const int m = 2 * n + 1;
    const double s = std::sin(numeric::kPi / m);
    SteinerChain sc;
    sc.R = (1 + s) / (1 - s);
    sc.rho = (sc.R - 1) / 2;
    sc.rc = (sc.R + 1) / 2;
    for (int j = 0; j < m; ++j) {
        const double t = 2 * numeric::kPi * j / m;
        sc.centers.push_back({sc.rc * std::cos(t), sc.rc * std::sin(t)});
    }
    return sc;
}

// Rotate, scale and translate so that two parallel lines land on y = 0 and
// y = 1 (in the given order), then apply to every circle. The lines may
// carry opposite normals (images of circles tangent at the inversion
// center always do).
inline std::vector<GeneralizedCircle> normalize_strip(
    const Line& to_bottom, const Line& to_top,
    const std::vector<GeneralizedCircle>& items) {
    const Vec2 n = to_bottom.normal;
    const double o_b = to_bottom.offset;
    const double o_t =
        to_top.offset * (geom::dot(to_top.normal, n) > 0 ? 1.0 : -1.0);

    // rotation R = [[ny, -nx], [nx, ny]] takes n to (0, 1); line offsets
    // along their normals are rotation invariant
    geom::Similarity rot;
    rot.cos_t = n.y;
    rot.sin_t = n.x;

    // affine map in y sending o_b -> 0 and o_t -> 1; when the strip is
    // upside down, compose with a half turn to keep the scale positive
    geom::Similarity fix;
    if (o_t > o_b) {
        fix.scale = 1.0 / (o_t - o_b);
        fix.shift = {0.0, -o_b / (o_t - o_b)};
    } else {
        fix.cos_t = -1.0;
        fix.sin_t = 0.0;
        fix.scale = 1.0 / (o_b - o_t);
        fix.shift = {0.0, o_b / (o_b - o_t)};
    }
    std::vector<GeneralizedCircle> out;
    out.reserve(items.size());
    for (const GeneralizedCircle& gc : items)
        out.push_back(geom::apply(fix, geom::apply(rot, gc)));
    return out;
}

inline double circle_x(const GeneralizedCircle& g) {
    return geom::as_circle(g).center.x;
}
inline double circle_y(const GeneralizedCircle& g) {
    return geom::as_circle(g).center.y;
}
inline double diameter(const GeneralizedCircle& g) {
    return 2 * geom::as_circle(g).radius;
}

}  // namespace detail

// Independent construction of the crossing rectangle: build the concentric
// Steiner chain, send the tangency point P_1 n P_2 to infinity by inversion,
// and rescale the resulting parallel lines to unit distance.
inline CuspRectangle steiner_cross_check(int n) {
    if (n < 2) throw domain_error("steiner_cross_check: n must be >= 2");
    const int m = 2 * n + 1;
    const auto sc = detail::steiner_chain(n);

    const geom::Inversion inv{0.5 * (sc.centers[0] + sc.centers[1]), 1.0};
    const GeneralizedCircle line_a =
        geom::apply(inv, GeneralizedCircle{Circle{sc.centers[0], sc.rho}});
    const GeneralizedCircle line_b =
        geom::apply(inv, GeneralizedCircle{Circle{sc.centers[1], sc.rho}});

    std::vector<GeneralizedCircle> items;
    items.push_back(geom::apply(inv, GeneralizedCircle{Circle{{0, 0}, 1.0}}));
    items.push_back(geom::apply(inv, GeneralizedCircle{Circle{{0, 0}, sc.R}}));
    for (int j = 2; j < m; ++j)
        items.push_back(geom::apply(
            inv, GeneralizedCircle{Circle{sc.centers[j], sc.rho}}));

    items = detail::normalize_strip(geom::as_line(line_a),
                                    geom::as_line(line_b), items);
    // shift A to x = 0, reflect if B landed on the negative side
    const double ax = detail::circle_x(items[0]);
    for (auto& gc : items) {
        geom::Similarity t;
        t.shift = {-ax, 0.0};
        gc = geom::apply(t, gc);
    }
    if (detail::circle_x(items[1]) < 0)
        for (auto& gc : items) gc = geom::mirror_x(gc, 0.0);

    std::vector<GeneralizedCircle> chain(items.begin() + 2, items.end());
    std::sort(chain.begin(), chain.end(),
              [](const GeneralizedCircle& a, const GeneralizedCircle& b) {
                  return detail::circle_y(a) < detail::circle_y(b);
              });

    CuspRectangle rect;
    rect.rect_kind = RectKind::CrossingCircle;
    rect.n = n;
    rect.ell_w = detail::circle_x(items[1]);
    rect.circle_diameters["A"] = detail::diameter(items[0]);
    rect.circle_diameters["B"] = detail::diameter(items[1]);
    double d_min = 2.0;
    for (std::size_t j = 0; j < chain.size(); ++j) {
        const double d = detail::diameter(chain[j]);
        rect.circle_diameters["P" + std::to_string(j + 1)] = d;
        d_min = std::min(d_min, d);
    }
    rect.circle_diameters["Pstar"] = d_min;

    const Line bottom{{0, 1}, 0.0};
    const Line top{{0, 1}, 1.0};
    double resid = 0.0;
    auto upd = [&](const GeneralizedCircle& a, const GeneralizedCircle& b) {
        resid = std::max(resid, std::abs(geom::tangency_residual(a, b)));
    };
    for (std::size_t j = 0; j < chain.size(); ++j) {
        upd(chain[j], items[0]);
        upd(chain[j], items[1]);
        if (j + 1 < chain.size()) upd(chain[j], chain[j + 1]);
    }
    upd(chain.front(), GeneralizedCircle{bottom});
    upd(chain.back(), GeneralizedCircle{top});
    upd(items[0], GeneralizedCircle{bottom});
    upd(items[0], GeneralizedCircle{top});
    upd(items[1], GeneralizedCircle{bottom});
    upd(items[1], GeneralizedCircle{top});
    rect.residual = resid;

    rect.elements.emplace_back("face_bottom", GeneralizedCircle{bottom});
    rect.elements.emplace_back("face_top", GeneralizedCircle{top});
    rect.elements.emplace_back("A", items[0]);
    rect.elements.emplace_back("B", items[1]);
    for (std::size_t j = 0; j < chain.size(); ++j)
        rect.elements.emplace_back("P" + std::to_string(j + 1), chain[j]);
    rect.elements.emplace_back("wall_left", GeneralizedCircle{Line{{1, 0}, 0.0}});
    rect.elements.emplace_back("wall_right",
                               GeneralizedCircle{Line{{1, 0}, rect.ell_w}});
    detail::check_rectangle(rect);
    return rect;
}

namespace detail {

// Knot rectangle, Mobius route: invert the global Steiner configuration at
// the tangency point P_1 n A. P_1 and A become the parallel lines, the two
// chain circles adjacent to P_1 become the diameter-1 wall circles, and B
// becomes the circle hanging from the top line above a chain of 2n-2.
inline CuspRectangle knot_rectangle_mobius(int n) {
    const int m = 2 * n + 1;
    const auto sc = steiner_chain(n);

    const Vec2 z0 = geom::unit(sc.centers[0]);  // P_1 n A, on the unit circle
    const geom::Inversion inv{z0, 1.0};
    const GeneralizedCircle line_p =
        geom::apply(inv, GeneralizedCircle{Circle{sc.centers[0], sc.rho}});
    const GeneralizedCircle line_a =
        geom::apply(inv, GeneralizedCircle{Circle{{0, 0}, 1.0}});

    std::vector<GeneralizedCircle> items;
    // wall circles (images of the chain neighbors of P_1), then B, then chain
    items.push_back(geom::apply(
        inv, GeneralizedCircle{Circle{sc.centers[m - 1], sc.rho}}));
    items.push_back(
        geom::apply(inv, GeneralizedCircle{Circle{sc.centers[1], sc.rho}}));
    items.push_back(geom::apply(inv, GeneralizedCircle{Circle{{0, 0}, sc.R}}));
    for (int j = 2; j < m - 1; ++j)
        items.push_back(geom::apply(
            inv, GeneralizedCircle{Circle{sc.centers[j], sc.rho}}));

    // A-line to the bottom (the chain hangs onto it), P_1-line to the top.
    items = normalize_strip(geom::as_line(line_a), geom::as_line(line_p),
                            items);
    const double mid = 0.5 * (circle_x(items[0]) + circle_x(items[1]));
    for (auto& gc : items) {
        geom::Similarity t;
        t.shift = {-mid, 0.0};
        gc = geom::apply(t, gc);
    }
    if (circle_x(items[0]) > 0)
        for (auto& gc : items) gc = geom::mirror_x(gc, 0.0);

    std::vector<GeneralizedCircle> chain(items.begin() + 3, items.end());
    std::sort(chain.begin(), chain.end(),
              [](const GeneralizedCircle& a, const GeneralizedCircle& b) {
                  return circle_x(a) < circle_x(b);
              });

    CuspRectangle rect;
    rect.rect_kind = RectKind::KnotCusp;
    rect.n = n;
    rect.ell_w = circle_x(items[1]) - circle_x(items[0]);
    rect.circle_diameters["P1"] = diameter(items[0]);
    rect.circle_diameters["P3"] = diameter(items[1]);
    rect.circle_diameters["B"] = diameter(items[2]);
    double d_min = 2.0;
    for (std::size_t j = 0; j < chain.size(); ++j) {
        const double d = diameter(chain[j]);
        rect.circle_diameters["P" + std::to_string(j + 4)] = d;
        d_min = std::min(d_min, d);
    }
    rect.circle_diameters["Pstar"] = d_min;

    const Line bottom{{0, 1}, 0.0};
    const Line top{{0, 1}, 1.0};
    double resid = 0.0;
    auto upd = [&](const GeneralizedCircle& a, const GeneralizedCircle& b) {
        resid = std::max(resid, std::abs(geom::tangency_residual(a, b)));
    };
    for (int w = 0; w < 2; ++w) {
        upd(items[w], GeneralizedCircle{bottom});
        upd(items[w], GeneralizedCircle{top});
        upd(items[w], items[2]);
    }
    upd(items[2], GeneralizedCircle{top});
    for (std::size_t j = 0; j < chain.size(); ++j) {
        upd(chain[j], GeneralizedCircle{bottom});
        upd(chain[j], items[2]);
        if (j + 1 < chain.size()) upd(chain[j], chain[j + 1]);
    }
    upd(chain.front(), items[0]);
    upd(chain.back(), items[1]);
    rect.residual = resid;

    rect.elements.emplace_back("face_bottom", GeneralizedCircle{bottom});
    rect.elements.emplace_back("face_top", GeneralizedCircle{top});
    rect.elements.emplace_back("P1", items[0]);
    rect.elements.emplace_back("P3", items[1]);
    rect.elements.emplace_back("B", items[2]);
    for (std::size_t j = 0; j < chain.size(); ++j)
        rect.elements.emplace_back("P" + std::to_string(j + 4), chain[j]);
    rect.elements.emplace_back(
        "wall_left", GeneralizedCircle{Line{{1, 0}, circle_x(items[0])}});
    rect.elements.emplace_back(
        "wall_right", GeneralizedCircle{Line{{1, 0}, circle_x(items[1])}});
    return rect;
}

// Knot rectangle, Newton route. The chain adjacency (ends on the wall
// circles, interior circles on the bottom line, B and their neighbors only)
// is read off the figures, so this route is only ever used as a cross-check
// against the Mobius construction.
inline CuspRectangle knot_rectangle_newton(int n) {
    const int chain_count = 2 * n - 2;
    const int pairs = chain_count / 2;

    TangencyGraph g;
    // params: [0] W, [1] rho_B, then per mirror pair (x_i, rho_i) with the
    // left position stored (x_i < 0), the right one bound to -x_i.
    g.param_count = 2 + 2 * pairs;
    g.lines.push_back({"face_bottom", Line{{0, 1}, 0.0}});
    g.lines.push_back({"face_top", Line{{0, 1}, 1.0}});
    g.circles.push_back({"P1", Binding::var(0, -0.5, 0.0), Binding::fixed(0.5),
                         Binding::fixed(0.5)});
    g.circles.push_back({"P3", Binding::var(0, 0.5, 0.0), Binding::fixed(0.5),
                         Binding::fixed(0.5)});
    g.circles.push_back({"B", Binding::fixed(0.0), Binding::var(1, -1.0, 1.0),
                         Binding::var(1)});
    for (int j = 1; j <= chain_count; ++j) {
        const int mirror = chain_count + 1 - j;
        const int pair = std::min(j, mirror) - 1;
        const double sign = (j <= pairs) ? 1.0 : -1.0;
        g.circles.push_back({"C" + std::to_string(j),
                             Binding::var(2 + 2 * pair, sign, 0.0),
                             Binding::var(3 + 2 * pair),
                             Binding::var(3 + 2 * pair)});
    }
    const int c0 = 3;
    g.edges.emplace_back(g.circle(2), g.circle(0));
    g.edges.emplace_back(g.circle(2), g.circle(1));
    for (int j = 0; j < chain_count; ++j) {
        g.edges.emplace_back(g.circle(c0 + j), g.circle(2));
        if (j + 1 < chain_count)
            g.edges.emplace_back(g.circle(c0 + j), g.circle(c0 + j + 1));
    }
    g.edges.emplace_back(g.circle(c0), g.circle(0));
    g.edges.emplace_back(g.circle(c0 + chain_count - 1), g.circle(1));

    std::vector<double> p(g.param_count, 0.0);
    const double db0 = 0.5 * (1.0 + std::max(0.5, (n - 2.0) / (n - 1.0)));
    p[0] = 1.0 + 0.9 * db0;
    p[1] = 0.5 * db0;
    const double span = p[0] - 1.0;
    for (int i = 0; i < pairs; ++i) {
        p[2 + 2 * i] = -0.5 * span + (i + 0.5) * span / chain_count;
        p[3 + 2 * i] = 0.5 * span / chain_count;
    }
    p = solve_tangency(g, p);

    CuspRectangle rect;
    rect.rect_kind = RectKind::KnotCusp;
    rect.n = n;
    rect.ell_w = p[0];
    rect.residual = g.max_residual(p);
    rect.circle_diameters["P1"] = 1.0;
    rect.circle_diameters["P3"] = 1.0;
    rect.circle_diameters["B"] = 2.0 * p[1];
    double d_min = 2.0;
    for (int j = 1; j <= chain_count; ++j) {
        const double d = 2.0 * g.circles[c0 + j - 1].r.eval(p);
        rect.circle_diameters["P" + std::to_string(j + 3)] = d;
        d_min = std::min(d_min, d);
    }
    rect.circle_diameters["Pstar"] = d_min;
    for (const FixedLine& l : g.lines) rect.elements.emplace_back(l.name, l.line);
    for (std::size_t i = 0; i < g.circles.size(); ++i)
        rect.elements.emplace_back(g.circles[i].name,
                                   g.materialize(g.circle(static_cast<int>(i)), p));
    rect.elements.emplace_back("wall_left",
                               GeneralizedCircle{Line{{1, 0}, -0.5 * p[0]}});
    rect.elements.emplace_back("wall_right",
                               GeneralizedCircle{Line{{1, 0}, 0.5 * p[0]}});
    return rect;
}

}  // namespace detail

// Knot-cusp rectangle: the Mobius construction is the result of record; the
// independent Newton solve must agree with it to 1e-8 on every named
// quantity, otherwise a consistency error is raised.
inline CuspRectangle solve_knot_rectangle(int n) {
    if (n < 2) throw domain_error("solve_knot_rectangle: n must be >= 2");
    CuspRectangle mob = detail::knot_rectangle_mobius(n);
    const CuspRectangle newt = detail::knot_rectangle_newton(n);

    double gap = std::abs(mob.ell_w - newt.ell_w);
    for (const char* key : {"B", "Pstar"})
        gap = std::max(gap, std::abs(mob.circle_diameters.at(key) -
                                     newt.circle_diameters.at(key)));
    if (gap > 1e-8)
        throw consistency_error(
            "solve_knot_rectangle: Mobius and Newton routes disagree by " +
            std::to_string(gap));
    detail::check_rectangle(mob);
    return mob;
}

// Normalized length of the filling slope that restores q_i crossings:
// sqrt(ell_w^2 + q_i^2) / sqrt(2 ell_w) with ell_s = 1. Odd q_i corresponds
// to a crossing circle enclosing a half twist (slope (1, (q_i-1)/2)), the
// single even one to slope (1, q_i/2); both parities reduce to the same
// formula.
inline double normalized_slope_length(const CuspRectangle& rect, long long q_i,
                                      bool half_twist) {
    if (rect.rect_kind != RectKind::CrossingCircle)
        throw domain_error(
            "normalized_slope_length: crossing-circle rectangle required");
    if (q_i <= 0) throw domain_error("normalized_slope_length: q must be > 0");
    if ((q_i % 2 != 0) != half_twist)
        throw domain_error(
            "normalized_slope_length: half-twist flag contradicts parity");
    const double w = rect.ell_w;
    const double q = static_cast<double>(q_i);
    return std::sqrt(w * w + q * q) / std::sqrt(2.0 * w);
}

// Tiling data for the knot cusp: 4(2n+1) rectangles, lattice basis
// (2s, 2(2n+1)w + 2ks) with the shear integer k carried symbolically and
// removed by a basis change, leaving a 2 x 2(2n+1)ell_w rectangle.
struct KnotCuspTiling {
    int rectangle_count = 0;
    std::string meridian;
    std::string longitude;
    double side_s = 0.0;
    double side_w = 0.0;
    bool square = false;
};

inline KnotCuspTiling knot_cusp_tiling(int n, const CuspRectangle& rect) {
    if (rect.rect_kind != RectKind::KnotCusp || rect.n != n)
        throw domain_error("knot_cusp_tiling: knot rectangle for n required");
    KnotCuspTiling t;
    t.rectangle_count = 4 * (2 * n + 1);
    t.meridian = "2s";
    t.longitude = "2(2n+1)w + 2ks";
    t.side_s = 2.0 * rect.ell_s;
    t.side_w = 2.0 * (2 * n + 1) * rect.ell_w;
    t.square = std::abs(t.side_s - t.side_w) < 1e-12;
    return t;
}

}  // namespace hypmut::packing
