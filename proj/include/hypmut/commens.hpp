#pragma once

// Lattice/horoball-pattern symmetry core of the hidden-symmetry obstruction,
// plus the commensurability-criteria checklist.

#include <array>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "hypmut/errors.hpp"
#include "hypmut/geometry.hpp"
#include "hypmut/packing.hpp"
#include "hypmut/pretzel.hpp"

namespace hypmut::commens {

using geom::Vec2;

// Doubly periodic pattern of horoball shadows: positions are taken modulo
// the lattice spanned by the basis.
struct HoroballPattern {
    Vec2 basis_w;
    Vec2 basis_s;
    struct Mark {
        Vec2 position;
        double diameter;
    };
    std::vector<Mark> marks;
};

// Maximal-horoball pattern of the knot cusp read off a solved rectangle:
// same-cusp horoballs repeat every 2*ell_s = 2 in the s direction and every
// ell_w in the w direction, all with diameter 1.
inline HoroballPattern crossing_pattern(int n,
                                        const packing::CuspRectangle& rect) {
    if (rect.n != n) throw domain_error("crossing_pattern: rectangle n mismatch");
    HoroballPattern p;
    p.basis_w = {rect.ell_w, 0.0};
    p.basis_s = {0.0, 2.0 * rect.ell_s};
    p.marks.push_back({{0.0, 0.0}, 1.0});
    return p;
}

namespace detail {

struct LatticeFrame {
    Vec2 b1, b2;
    double det;
    Vec2 to_coords(Vec2 v) const {
        return {(v.x * b2.y - v.y * b2.x) / det,
                (b1.x * v.y - b1.y * v.x) / det};
    }
};

inline LatticeFrame frame_of(const HoroballPattern& p) {
    const double det =
        p.basis_w.x * p.basis_s.y - p.basis_w.y * p.basis_s.x;
    if (std::abs(det) < 1e-14)
        throw domain_error("rotation_orders: degenerate lattice basis");
    return LatticeFrame{p.basis_w, p.basis_s, det};
}

inline Vec2 rotate(Vec2 v, double c, double s) {
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// v lies in the lattice when its basis coordinates are integers within the
// Cartesian tolerance.
inline bool in_lattice(const LatticeFrame& f, Vec2 v, double tol) {
    const Vec2 c = f.to_coords(v);
    const Vec2 nearest{std::round(c.x), std::round(c.y)};
    const Vec2 delta = v - (nearest.x * f.b1 + nearest.y * f.b2);
    return geom::norm(delta) <= tol;
}

}  // namespace detail

// Rotation orders (among 2, 3, 4, 6) admitted by the periodic mark pattern.
// A candidate order survives only if the rotation maps the lattice to itself
// and the rotated marks coincide with original marks modulo the lattice, for
// some center among the marks and the 1/3-, 1/2- and 2/3-points of one
// fundamental domain. Never reports an order absent from the true symmetry
// group.
inline std::set<int> rotation_orders(const HoroballPattern& p,
                                     double tol = 1e-9) {
    if (!(tol > 0 && tol <= 1e-3))
        throw domain_error("rotation_orders: tol outside (0, 1e-3]");
    const detail::LatticeFrame f = detail::frame_of(p);
    const double scale =
        std::max({1.0, geom::norm(p.basis_w), geom::norm(p.basis_s)});
    const double ctol = tol * scale;

    static constexpr std::array<double, 4> offsets{0.0, 1.0 / 3.0, 0.5,
                                                   2.0 / 3.0};
    std::set<int> orders;
    for (int order : {2, 3, 4, 6}) {
        const double ang = 2.0 * numeric::kPi / order;
        const double c = std::cos(ang), s = std::sin(ang);
        if (!detail::in_lattice(f, detail::rotate(p.basis_w, c, s), ctol) ||
            !detail::in_lattice(f, detail::rotate(p.basis_s, c, s), ctol))
            continue;
        bool found_center = false;
        for (const auto& mark : p.marks) {
            for (double a : offsets) {
                for (double b : offsets) {
                    const Vec2 center =
                        mark.position + a * p.basis_w + b * p.basis_s;
                    bool all_match = true;
                    for (const auto& m : p.marks) {
                        const Vec2 image =
                            center +
                            detail::rotate(m.position - center, c, s);
                        bool matched = false;
                        for (const auto& m2 : p.marks) {
                            if (std::abs(m.diameter - m2.diameter) > tol)
                                continue;
                            if (detail::in_lattice(f, image - m2.position,
                                                   ctol)) {
                                matched = true;
                                break;
                            }
                        }
                        if (!matched) {
                            all_match = false;
                            break;
                        }
                    }
                    if (all_match) {
                        found_center = true;
                        break;
                    }
                }
                if (found_center) break;
            }
            if (found_center) break;
        }
        if (found_center) orders.insert(order);
    }
    return orders;
}

// Candidate distances between nearest same-cusp horoballs: one w step, one
// (doubled) s step, and the diagonal. The w step is the unique minimum
// exactly when 1 < ell_w < 2.
struct NearestStringReport {
    double distance_w = 0.0;
    double distance_s = 0.0;
    double distance_diagonal = 0.0;
    double min_distance = 0.0;
    bool unique_minimum = false;
    bool in_range = false;
    Vec2 direction;
};

inline NearestStringReport nearest_string_analysis(const HoroballPattern& p) {
    NearestStringReport r;
    r.distance_w = geom::norm(p.basis_w);
    r.distance_s = geom::norm(p.basis_s);
    r.distance_diagonal = geom::norm(p.basis_w + p.basis_s);
    r.min_distance = std::min(
        {r.distance_w, r.distance_s, r.distance_diagonal});
    r.in_range = r.distance_w > 1.0 && r.distance_w < 2.0;
    r.unique_minimum = r.distance_w < r.distance_s - 1e-12 &&
                       r.distance_w < r.distance_diagonal - 1e-12;
    r.direction = geom::unit(p.basis_w);
    if (r.in_range && std::abs(r.distance_s - 2.0) < 1e-9 &&
        !r.unique_minimum)
        throw consistency_error(
            "nearest_string_analysis: w step not the unique minimum despite "
            "1 < ell_w < 2");
    return r;
}

enum class ChecklistConclusion { CertifiedConditional, NotApplicable };

inline const char* to_string(ChecklistConclusion c) {
    return c == ChecklistConclusion::CertifiedConditional
               ? "CertifiedConditional"
               : "NotApplicable";
}

struct ChecklistItem {
    std::string name;
    bool passed = false;
    bool conditional = false;
    std::string note;
};

struct CommensurabilityChecklist {
    std::vector<ChecklistItem> items;
    ChecklistConclusion conclusion = ChecklistConclusion::NotApplicable;
    std::set<int> limit_rotation_orders;
};

// Checklist for "only knot complement in its commensurability class":
// no lens-space surgery, strong inversion as the only symmetry, and no
// order-3/4 rotational symmetry of the limiting cusp horoball pattern. The
// last item holds in the geometric limit of large q_i, with no effective
// bound, so a full pass is only ever CertifiedConditional.
inline CommensurabilityChecklist commensurability_checklist(
    const pretzel::PretzelTuple& t) {
    CommensurabilityChecklist out;
    const int m = t.size();
    if (m < 5 || m % 2 == 0) {
        out.conclusion = ChecklistConclusion::NotApplicable;
        out.items.push_back({"applicability", false, false,
                             "criteria require an odd tuple with n >= 2"});
        return out;
    }
    const int n = t.n();
    const auto violations = pretzel::validate(t);
    auto has = [&](pretzel::Violation v) {
        return std::find(violations.begin(), violations.end(), v) !=
               violations.end();
    };

    ChecklistItem lens{"lens_space_surgery", true, false,
                       "classification of pretzel lens-space surgeries: only "
                       "the (-2,3,7) form admits one"};
    lens.passed = !pretzel::dihedral_equivalent(
        t, pretzel::PretzelTuple{{-2, 3, 7}});
    out.items.push_back(lens);

    ChecklistItem sym{"symmetry", true, false,
                      "strong inversion only, requires exactly one even "
                      "entry and distinct entries"};
    sym.passed = !has(pretzel::Violation::MoreThanOneEven) &&
                 !has(pretzel::Violation::NoEvenEntry) &&
                 !has(pretzel::Violation::DuplicateEntry);
    out.items.push_back(sym);

    const packing::CuspRectangle rect = packing::solve_knot_rectangle(n);
    out.limit_rotation_orders = rotation_orders(crossing_pattern(n, rect));
    ChecklistItem hidden{"hidden_symmetry", true, true,
                         "rotation orders of the limiting maximal-horoball "
                         "pattern; valid for sufficiently large q_i (no "
                         "effective constant)"};
    hidden.passed = !out.limit_rotation_orders.count(3) &&
                    !out.limit_rotation_orders.count(4) &&
                    !out.limit_rotation_orders.count(6);
    out.items.push_back(hidden);

    bool all_pass = true;
    for (const auto& item : out.items) all_pass = all_pass && item.passed;
    out.conclusion = all_pass ? ChecklistConclusion::CertifiedConditional
                              : ChecklistConclusion::NotApplicable;
    return out;
}

}  // namespace hypmut::commens
