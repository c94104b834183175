#include <cmath>
#include <map>

#include "doctest.h"
#include "hypmut/packing.hpp"

using namespace hypmut;
using namespace hypmut::packing;
using geom::Circle;
using geom::Line;

namespace {

// analytic n = 2 crossing oracle: the symmetric 3-chain reduces to
// t^2 + 2t - 1/4 = 0 for the middle radius t, giving ell_w = 1 + 2t
struct CrossingOracle {
    double t;
    double rho_end;
    double ell_w;
};

CrossingOracle crossing_oracle_n2() {
    const double t = (-2.0 + std::sqrt(5.0)) / 2.0;
    return {t, (1.0 - 2.0 * t) / 4.0, 1.0 + 2.0 * t};
}

// analytic n = 2 knot oracle: with u = sqrt(2r) the wall/chain tangencies
// reduce to u^2 + u - 1 = 0, giving chain radius r, width W = 2(1-r) and
// D(B) = (1-r)^2
struct KnotOracle {
    double r;
    double ell_w;
    double d_b;
};

KnotOracle knot_oracle_n2() {
    const double u = (-1.0 + std::sqrt(5.0)) / 2.0;
    const double r = u * u / 2.0;
    return {r, 2.0 * (1.0 - r), (1.0 - r) * (1.0 - r)};
}

}  // namespace

TEST_CASE("generalized circle inversion cases") {
    const geom::Inversion inv{{0.0, 0.0}, 1.0};
    // circle through the center maps to a line
    const auto img =
        geom::apply(inv, geom::GeneralizedCircle{Circle{{1.0, 0.0}, 1.0}});
    REQUIRE_FALSE(geom::is_circle(img));
    CHECK(geom::as_line(img).offset == doctest::Approx(0.5));
    // line off the center maps to a circle through the center
    const auto back =
        geom::apply(inv, geom::GeneralizedCircle{Line{{0.0, 1.0}, 2.0}});
    REQUIRE(geom::is_circle(back));
    CHECK(geom::as_circle(back).radius == doctest::Approx(0.25));
    CHECK(geom::as_circle(back).center.y == doctest::Approx(0.25));
    // line through the center is fixed
    const auto fixed =
        geom::apply(inv, geom::GeneralizedCircle{Line{{0.0, 1.0}, 0.0}});
    CHECK_FALSE(geom::is_circle(fixed));
    // tangency is preserved by inversion
    const Circle a{{3.0, 0.0}, 1.0};
    const Circle b{{3.0, 2.0}, 1.0};
    const auto ia = geom::apply(inv, geom::GeneralizedCircle{a});
    const auto ib = geom::apply(inv, geom::GeneralizedCircle{b});
    CHECK(std::abs(geom::tangency_residual(ia, ib)) < 1e-12);
}

TEST_CASE("solve_tangency: two unit circles between parallel lines") {
    TangencyGraph g;
    g.param_count = 5;
    g.lines.push_back({"bottom", Line{{0, 1}, 0.0}});
    g.lines.push_back({"top", Line{{0, 1}, 1.0}});
    g.circles.push_back({"left", Binding::fixed(0.0), Binding::var(0),
                         Binding::var(1)});
    g.circles.push_back({"right", Binding::var(2), Binding::var(3),
                         Binding::var(4)});
    g.edges.emplace_back(g.circle(0), g.line(0));
    g.edges.emplace_back(g.circle(0), g.line(1));
    g.edges.emplace_back(g.circle(1), g.line(0));
    g.edges.emplace_back(g.circle(1), g.line(1));
    g.edges.emplace_back(g.circle(0), g.circle(1));

    const auto p = solve_tangency(g, {0.4, 0.45, 1.2, 0.6, 0.4});
    CHECK(g.max_residual(p) < 1e-12);
    CHECK(std::abs(p[2]) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(p[4] == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("solve_tangency: unused parameter makes the Jacobian singular") {
    TangencyGraph g;
    g.param_count = 2;  // param 1 touches nothing
    g.lines.push_back({"bottom", Line{{0, 1}, 0.0}});
    g.circles.push_back({"c", Binding::fixed(0.0), Binding::var(0),
                         Binding::fixed(0.5)});
    g.edges.emplace_back(g.circle(0), g.line(0));
    CHECK_THROWS_AS(solve_tangency(g, {0.9, 0.0}), numerical_error);
}

TEST_CASE("solve_tangency: infeasible configuration diverges") {
    // three mutually tangent circles each tangent to both lines of a unit
    // strip cannot exist
    TangencyGraph g;
    g.param_count = 3;
    g.lines.push_back({"bottom", Line{{0, 1}, 0.0}});
    g.lines.push_back({"top", Line{{0, 1}, 1.0}});
    for (int i = 0; i < 3; ++i) {
        g.circles.push_back({"c" + std::to_string(i), Binding::var(i),
                             Binding::fixed(0.5), Binding::fixed(0.5)});
        g.edges.emplace_back(g.circle(i), g.line(0));
        g.edges.emplace_back(g.circle(i), g.line(1));
    }
    g.edges.emplace_back(g.circle(0), g.circle(1));
    g.edges.emplace_back(g.circle(1), g.circle(2));
    g.edges.emplace_back(g.circle(0), g.circle(2));
    CHECK_THROWS_AS(solve_tangency(g, {0.0, 1.0, 2.0}), numerical_error);
}

TEST_CASE("crossing rectangle at n = 2 matches the quadratic oracle") {
    const CrossingOracle oracle = crossing_oracle_n2();
    CHECK(oracle.ell_w == doctest::Approx(std::sqrt(5.0) - 1.0).epsilon(1e-15));

    const CuspRectangle rect = solve_crossing_rectangle(2);
    CHECK(rect.rect_kind == RectKind::CrossingCircle);
    CHECK(rect.residual < 1e-10);
    CHECK(std::abs(rect.ell_w - oracle.ell_w) < 1e-9);
    CHECK(std::abs(rect.circle_diameters.at("Pstar") - 2 * oracle.t) < 1e-9);
    CHECK(std::abs(rect.circle_diameters.at("P1") - 2 * oracle.rho_end) < 1e-9);
    CHECK(std::abs(rect.circle_diameters.at("P3") - 2 * oracle.rho_end) < 1e-9);
    CHECK(rect.circle_diameters.at("A") == 1.0);
}

TEST_CASE("crossing rectangle bounds and symmetries for n = 2..20") {
    for (int n = 2; n <= 20; ++n) {
        const CuspRectangle rect = solve_crossing_rectangle(n);
        const int k = 2 * n - 1;
        CHECK(rect.residual < 1e-10);
        CHECK(rect.ell_w > 1.0);
        CHECK(rect.ell_w <= 2.0 * n / (2.0 * n - 1.0) + 1e-12);
        CHECK(std::abs(rect.ell_w - 1.0 - rect.circle_diameters.at("Pstar")) <
              1e-9);
        double sum = 0.0;
        for (int j = 1; j <= k; ++j) {
            const double dj =
                rect.circle_diameters.at("P" + std::to_string(j));
            const double mirrored =
                rect.circle_diameters.at("P" + std::to_string(k + 1 - j));
            CHECK(std::abs(dj - mirrored) < 1e-10);
            sum += dj;
        }
        CHECK(std::abs(sum - 1.0) < 1e-10);
    }
}

TEST_CASE("steiner construction agrees with the newton solve") {
    // n = 2 concentric outer radius
    const double s36 = std::sin(numeric::kPi / 5.0);
    CHECK((1 + s36) / (1 - s36) ==
          doctest::Approx(3.85183999631918).epsilon(1e-12));
    for (int n = 2; n <= 12; ++n) {
        const CuspRectangle a = solve_crossing_rectangle(n);
        const CuspRectangle b = steiner_cross_check(n);
        CHECK(b.residual < 1e-10);
        CHECK(std::abs(a.ell_w - b.ell_w) < 1e-9);
        CHECK(std::abs(a.circle_diameters.at("Pstar") -
                       b.circle_diameters.at("Pstar")) < 1e-9);
        // the two hub images always come out with unit diameter
        CHECK(std::abs(b.circle_diameters.at("A") - 1.0) < 1e-12);
        CHECK(std::abs(b.circle_diameters.at("B") - 1.0) < 1e-12);
    }
}

TEST_CASE("knot rectangle at n = 2 matches the quadratic oracle") {
    const KnotOracle oracle = knot_oracle_n2();
    CHECK(oracle.ell_w ==
          doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-15));

    const CuspRectangle rect = solve_knot_rectangle(2);
    CHECK(rect.rect_kind == RectKind::KnotCusp);
    CHECK(rect.residual < 1e-10);
    CHECK(std::abs(rect.ell_w - oracle.ell_w) < 1e-9);
    CHECK(std::abs(rect.circle_diameters.at("B") - oracle.d_b) < 1e-9);
    CHECK(std::abs(rect.circle_diameters.at("Pstar") - 2 * oracle.r) < 1e-9);
    CHECK(std::abs(rect.circle_diameters.at("P1") - 1.0) < 1e-10);
    CHECK(std::abs(rect.circle_diameters.at("P3") - 1.0) < 1e-10);
}

TEST_CASE("knot rectangle size bounds for n = 2..20") {
    for (int n = 2; n <= 20; ++n) {
        const CuspRectangle rect = solve_knot_rectangle(n);
        const double db = rect.circle_diameters.at("B");
        const double dps = rect.circle_diameters.at("Pstar");
        CHECK(rect.residual < 1e-10);
        CHECK(rect.ell_w > 1.0);
        CHECK(rect.ell_w < 2.0);
        CHECK(db > (n - 2.0) / (n - 1.0));
        CHECK(db < 1.0);
        CHECK(db > 0.5);
        CHECK(dps < 1.0 / (n - 1.0));
    }
}

TEST_CASE("normalized slope lengths") {
    const CuspRectangle rect = solve_crossing_rectangle(2);
    const double L7 = normalized_slope_length(rect, 7, true);
    CHECK(L7 == doctest::Approx(4.52094573634058).epsilon(1e-9));
    CHECK(L7 >= std::sqrt(18.75));

    // parity contract: odd entries carry the half twist
    CHECK_THROWS_AS(normalized_slope_length(rect, 7, false), domain_error);
    CHECK_THROWS_AS(normalized_slope_length(rect, 8, true), domain_error);
    CHECK_THROWS_AS(normalized_slope_length(rect, -3, true), domain_error);
    const CuspRectangle knot = solve_knot_rectangle(2);
    CHECK_THROWS_AS(normalized_slope_length(knot, 7, true), domain_error);

    // dominant-term asymptotics
    const double Lbig = normalized_slope_length(rect, 1000001, true);
    CHECK(Lbig / 1000001.0 ==
          doctest::Approx(1.0 / std::sqrt(2.0 * rect.ell_w)).epsilon(1e-9));

    // lower bound across n and q
    for (int n = 2; n <= 10; ++n) {
        const CuspRectangle r = solve_crossing_rectangle(n);
        for (long long q : {7LL, 9LL, 101LL, 1001LL}) {
            const double L = normalized_slope_length(r, q, true);
            const double bound = std::sqrt(
                (2.0 * n - 1.0) * (1.0 + static_cast<double>(q) * q) /
                (4.0 * n));
            CHECK(L >= bound);
        }
    }
}

TEST_CASE("knot cusp tiling") {
    const CuspRectangle rect = solve_knot_rectangle(2);
    const KnotCuspTiling t = knot_cusp_tiling(2, rect);
    CHECK(t.rectangle_count == 20);
    CHECK(t.side_s == doctest::Approx(2.0));
    CHECK(t.side_w == doctest::Approx(10.0 * rect.ell_w).epsilon(1e-12));
    CHECK_FALSE(t.square);
    CHECK(t.longitude == "2(2n+1)w + 2ks");

    for (int n = 3; n <= 20; n += 4) {
        const CuspRectangle r = solve_knot_rectangle(n);
        const KnotCuspTiling tn = knot_cusp_tiling(n, r);
        CHECK(tn.rectangle_count == 4 * (2 * n + 1));
        CHECK_FALSE(tn.square);
        CHECK(tn.side_w / tn.side_s > 1.0);
    }
    CHECK_THROWS_AS(knot_cusp_tiling(2, solve_crossing_rectangle(2)),
                    domain_error);
}

TEST_CASE("rectangle solves reject n < 2") {
    CHECK_THROWS_AS(solve_crossing_rectangle(1), domain_error);
    CHECK_THROWS_AS(solve_knot_rectangle(0), domain_error);
    CHECK_THROWS_AS(steiner_cross_check(1), domain_error);
}
