#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>

#include "hypmut/errors.hpp"

namespace hypmut::numeric {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

struct RootOptions {
    double residual_tol = 1e-12;
    int max_iterations = 200;
    // Geometrically widen the bracket (keeping inside hard limits) when the
    // initial endpoints do not straddle a sign change.
    bool widen = false;
    double widen_lo_limit = -std::numeric_limits<double>::infinity();
    double widen_hi_limit = std::numeric_limits<double>::infinity();
};

// Safeguarded Newton: Newton steps with a numeric derivative, falling back to
// bisection whenever a step leaves the bracket or fails to shrink |f|.
// The target function must be continuous with a sign change on [lo, hi].
inline double find_root(const std::function<double(double)>& f, double lo,
                        double hi, const RootOptions& opt = {}) {
    double flo = f(lo);
    double fhi = f(hi);
    if (opt.widen) {
        for (int i = 0; i < 64 && (flo < 0) == (fhi < 0); ++i) {
            const double span = hi - lo;
            lo = std::max(opt.widen_lo_limit, lo - span);
            hi = std::min(opt.widen_hi_limit, hi + span);
            flo = f(lo);
            fhi = f(hi);
        }
    }
    if ((flo < 0) == (fhi < 0))
        throw numerical_error("find_root: no sign change on bracket",
                              std::min(std::abs(flo), std::abs(fhi)));
    if (std::abs(flo) <= opt.residual_tol) return lo;
    if (std::abs(fhi) <= opt.residual_tol) return hi;

    double x = 0.5 * (lo + hi);
    double fx = f(x);
    for (int it = 0; it < opt.max_iterations; ++it) {
        if (std::abs(fx) <= opt.residual_tol) return x;
        // maintain bracket
        if ((fx < 0) == (flo < 0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        const double h = std::max(1e-7, 1e-7 * std::abs(x));
        const double dfx = (f(x + h) - f(x - h)) / (2 * h);
        double xn = (dfx != 0.0) ? x - fx / dfx : lo;
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        double fn = f(xn);
        if (std::abs(fn) > 0.9 * std::abs(fx)) {
            // insufficient decrease, bisect instead
            xn = 0.5 * (lo + hi);
            fn = f(xn);
        }
        x = xn;
        fx = fn;
        if (hi - lo < std::numeric_limits<double>::epsilon() *
                          (std::abs(lo) + std::abs(hi)))
            break;
    }
    if (std::abs(fx) <= opt.residual_tol) return x;
    throw numerical_error("find_root: did not reach residual tolerance",
                          std::abs(fx));
}

namespace detail {
inline double adaptive_simpson_step(const std::function<double(double)>& f,
                                    double a, double b, double fa, double fm,
                                    double fb, double whole, double tol,
                                    int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0)
        throw numerical_error("integrate: recursion limit reached",
                              std::abs(delta));
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol,
                                 depth - 1) +
           adaptive_simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol,
                                 depth - 1);
}
}  // namespace detail

// Adaptive Simpson quadrature with absolute tolerance. Signed: a may exceed b.
inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double abs_tol = 1e-12) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
    return detail::adaptive_simpson_step(f, a, b, fa, fm, fb, whole, abs_tol,
                                         60);
}

}  // namespace hypmut::numeric
