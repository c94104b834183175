// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are pinned in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hypmut/certify.hpp"
#include "hypmut/commens.hpp"
#include "hypmut/dehn.hpp"
#include "hypmut/hypcore.hpp"
#include "hypmut/packing.hpp"
#include "hypmut/pretzel.hpp"

using namespace hypmut;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("CRITERION %d %s: %s\n", criterion, pass ? "PASS" : "FAIL",
                detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void criterion_1_threshold_constants() {
    const auto t0 = std::chrono::steady_clock::now();
    const double L_radius =
        dehn::min_L_for_radius(2 * std::log(1 + std::sqrt(2.0)));
    const double L_length = dehn::min_L_for_total_length(0.015);
    const double elapsed = seconds_since(t0);
    const bool pass = L_radius >= 14.80 && L_radius <= 14.90 &&
                      L_length >= 20.66 && L_length <= 20.81 && elapsed < 1.0;
    report(1, pass,
           "min_L_for_radius = " + fmt(L_radius) + " in [14.80, 14.90], "
           "min_L_for_total_length = " + fmt(L_length) +
           " in [20.66, 20.81], runtime " + fmt(elapsed) + " s");
}

void criterion_2_collar_cutoff() {
    const double root = hypcore::max_length_for_chi(2.0);
    const double collar = hypcore::collar_radius(0.015);
    const double gate = 2 * std::log(1 + std::sqrt(2.0));
    const bool pass =
        std::abs(root - 0.01516) <= 0.0005 && collar > gate;
    report(2, pass,
           "root of sqrt(1-2k)/k = 17 at l = " + fmt(root) +
           " (0.01516 +/- 0.0005), collar_radius(0.015) = " + fmt(collar) +
           " > " + fmt(gate));
}

void criterion_3_i_value() {
    const double I = dehn::I_of(std::tanh(2 * std::log(1 + std::sqrt(2.0))));
    const bool pass = I <= dehn::kPublishedISquaredBound;
    report(3, pass,
           "I(tanh(2 ln(1+sqrt 2))) = " + fmt(I) + " <= 222.01");
}

void criterion_4_packing_exactness() {
    const auto t0 = std::chrono::steady_clock::now();
    const double oracle = std::sqrt(5.0) - 1.0;  // 1 + 2t, t^2 + 2t - 1/4 = 0
    const packing::CuspRectangle newt = packing::solve_crossing_rectangle(2);
    const packing::CuspRectangle stein = packing::steiner_cross_check(2);
    bool pass = std::abs(newt.ell_w - oracle) < 1e-9 &&
                std::abs(stein.ell_w - oracle) < 1e-9;
    double worst = std::abs(newt.ell_w - stein.ell_w);
    for (int n = 3; n <= 12; ++n) {
        const double delta = std::abs(packing::solve_crossing_rectangle(n).ell_w -
                                      packing::steiner_cross_check(n).ell_w);
        worst = std::max(worst, delta);
    }
    const double elapsed = seconds_since(t0);
    pass = pass && worst < 1e-9 && elapsed < 5.0;
    report(4, pass,
           "ell_w(2) = " + fmt(newt.ell_w) + " vs sqrt(5)-1, route gap <= " +
           fmt(worst) + " for n = 2..12, runtime " + fmt(elapsed) + " s");
}

void criterion_5_bound_suites() {
    bool pass = true;
    std::string worst;
    double size_margin = 1e300;
    for (int n = 2; n <= 20; ++n) {
        const packing::CuspRectangle rect = packing::solve_knot_rectangle(n);
        const double db = rect.circle_diameters.at("B");
        const double dps = rect.circle_diameters.at("Pstar");
        const double margin = std::min(
            {rect.ell_w - 1.0, 2.0 - rect.ell_w, db - (n - 2.0) / (n - 1.0),
             1.0 - db, db - 0.5, 1.0 / (n - 1.0) - dps});
        size_margin = std::min(size_margin, margin);
        if (!(margin > 0)) {
            pass = false;
            worst = "size bounds failed at n = " + std::to_string(n);
        }
    }
    double nl_margin = 1e300;
    for (int n = 2; n <= 10 && pass; ++n) {
        const packing::CuspRectangle rect = packing::solve_crossing_rectangle(n);
        for (long long q : {7LL, 9LL, 101LL, 1001LL}) {
            const double L = packing::normalized_slope_length(rect, q, true);
            const double bound =
                std::sqrt((2.0 * n - 1.0) *
                          (1.0 + static_cast<double>(q) * q) / (4.0 * n));
            nl_margin = std::min(nl_margin, L - bound);
            if (!(L >= bound)) {
                pass = false;
                worst = "normalized-length bound failed at n = " +
                        std::to_string(n) + ", q = " + std::to_string(q);
            }
        }
    }
    if (pass)
        worst = "all bounds strict, min size-bound margin " +
                fmt(size_margin) + ", min normalized-length margin " +
                fmt(nl_margin);
    report(5, pass, worst);
}

void criterion_6_combinatorics() {
    const auto t0 = std::chrono::steady_clock::now();
    const pretzel::PretzelTuple t5{{8, 9, 11, 13, 15}};
    const pretzel::PretzelTuple t7{{8, 9, 11, 13, 15, 17, 19}};
    const auto forms5 = pretzel::enumerate_mutants(
        t5, pretzel::MutationGenerators::make(pretzel::GeneratorKind::All, 5));
    const auto forms7 = pretzel::enumerate_mutants(
        t7, pretzel::MutationGenerators::make(pretzel::GeneratorKind::All, 7));
    bool distinct = true;
    for (std::size_t i = 0; i < forms5.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < forms5.size() && distinct; ++j)
            distinct = !pretzel::dihedral_equivalent(forms5[i], forms5[j]);
    for (std::size_t i = 0; i < forms7.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < forms7.size() && distinct; ++j)
            distinct = !pretzel::dihedral_equivalent(forms7[i], forms7[j]);
    const double elapsed = seconds_since(t0);
    const bool pass = forms5.size() == 12 && forms7.size() == 360 && distinct &&
                      elapsed < 30.0;
    report(6, pass,
           "counts " + std::to_string(forms5.size()) + " (n=2) and " +
           std::to_string(forms7.size()) +
           " (n=3), pairwise dihedral-distinct, runtime " + fmt(elapsed) +
           " s");
}

void criterion_7_symmetry_core() {
    bool pass = true;
    std::string detail = "rotation orders {2} for all solved patterns";
    for (int n = 2; n <= 12 && pass; ++n) {
        for (bool knot : {false, true}) {
            const packing::CuspRectangle rect =
                knot ? packing::solve_knot_rectangle(n)
                     : packing::solve_crossing_rectangle(n);
            if (!(rect.ell_w > 1.0 && rect.ell_w < 2.0)) continue;
            const auto orders = commens::rotation_orders(
                commens::crossing_pattern(n, rect));
            if (orders != std::set<int>{2}) {
                pass = false;
                detail = "unexpected orders at n = " + std::to_string(n);
            }
        }
    }
    commens::HoroballPattern square;
    square.basis_w = {1, 0};
    square.basis_s = {0, 1};
    square.marks.push_back({{0, 0}, 1.0});
    commens::HoroballPattern hex;
    hex.basis_w = {1, 0};
    hex.basis_s = {0.5, std::sqrt(3.0) / 2};
    hex.marks.push_back({{0, 0}, 1.0});
    if (commens::rotation_orders(square) != std::set<int>{2, 4}) {
        pass = false;
        detail = "square control failed";
    }
    if (commens::rotation_orders(hex) != std::set<int>{2, 3, 6}) {
        pass = false;
        detail = "hexagonal control failed";
    }
    report(7, pass, detail);
}

void criterion_8_property_suites() {
    bool pass = true;
    std::string detail =
        "half-angle identity, cone/disk agreement, certify mutation "
        "invariance, quadrature halving oracle";
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> rs(1e-6, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double r = rs(rng);
        if (std::abs((std::cosh(r) - 1) / std::sinh(r) - std::tanh(r / 2)) >=
            1e-12) {
            pass = false;
            detail = "half-angle identity failed at r = " + fmt(r);
        }
    }
    for (double r : {0.1, 1.0, 3.0}) {
        const double cone =
            hypcore::cone_area(2 * numeric::kPi * std::sinh(r), r);
        if (std::abs(cone - hypcore::geodesic_disk_area(r)) > 1e-9) {
            pass = false;
            detail = "cone over geodesic circle failed at r = " + fmt(r);
        }
    }
    const pretzel::PretzelTuple t{{76, 77, 79, 81, 83}};
    const auto base = pretzel::certify(t, pretzel::CertifyMode::Cusped);
    for (int a = 1; a <= 4; ++a) {
        const auto other =
            pretzel::certify(pretzel::mutate(t, a), pretzel::CertifyMode::Cusped);
        if (other.thresholds_met != base.thresholds_met ||
            other.mutant_count_enumerated != base.mutant_count_enumerated ||
            other.preserved_lengths != base.preserved_lengths ||
            other.volume_bounds != base.volume_bounds) {
            pass = false;
            detail = "certify changed under mutation at slot " +
                     std::to_string(a);
        }
    }
    for (double z : {0.2, 0.5, 0.8, 0.95}) {
        const double adaptive =
            numeric::integrate([](double w) { return dehn::F_integrand(w); },
                               1.0, z);
        const int steps = 2048;
        auto simpson = [&](int m) {
            const double h = (z - 1.0) / m;
            double s = dehn::F_integrand(1.0) + dehn::F_integrand(z);
            for (int i = 1; i < m; ++i)
                s += dehn::F_integrand(1.0 + i * h) * (i % 2 ? 4 : 2);
            return s * h / 3.0;
        };
        if (std::abs(adaptive - simpson(steps)) > 1e-10 ||
            std::abs(adaptive - simpson(2 * steps)) > 1e-10) {
            pass = false;
            detail = "quadrature oracle failed at z = " + fmt(z);
        }
    }
    report(8, pass, detail);
}

void criterion_9_q_threshold() {
    const double Q2 = pretzel::q_threshold(2);
    const auto r = pretzel::certify(pretzel::PretzelTuple{{76, 77, 79, 81, 83}},
                                    pretzel::CertifyMode::Cusped);
    const bool pass = std::abs(Q2 - 75.80) <= 0.01 && r.thresholds_met &&
                      r.preserved_lengths == 5;
    report(9, pass,
           "Q(2) = " + fmt(Q2) + " (75.80 +/- 0.01), certify(76,77,79,81,83) "
           "thresholds_met = " + (r.thresholds_met ? "true" : "false") +
           ", preserved_lengths = " + std::to_string(r.preserved_lengths));
}

}  // namespace

int main() {
    criterion_1_threshold_constants();
    criterion_2_collar_cutoff();
    criterion_3_i_value();
    criterion_4_packing_exactness();
    criterion_5_bound_suites();
    criterion_6_combinatorics();
    criterion_7_symmetry_core();
    criterion_8_property_suites();
    criterion_9_q_threshold();
    if (failures == 0)
        std::printf("ACCEPTANCE: all 9 criteria passed\n");
    else
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
