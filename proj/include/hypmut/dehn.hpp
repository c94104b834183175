#pragma once

// Cone-deformation bounds for Dehn filling: the special functions F, f, A, I,
// their inverse solves, and the normalized-length thresholds that control the
// tube radius and total length of filled-in core geodesics.

#include <cmath>
#include <numeric>
#include <vector>

#include "hypmut/errors.hpp"
#include "hypmut/hypcore.hpp"
#include "hypmut/numeric.hpp"

namespace hypmut::dehn {

using numeric::kPi;

// Leading coefficient of f and A, taken verbatim from the source tables.
inline constexpr double kHkCoefficient = 3.3957;
// All normalized-length results require the combined length to exceed this.
inline constexpr double kMinNormalizedLength = 7.5832;
// Published per-slope multipliers for the radius and length conclusions.
inline constexpr double kPublishedRadiusMultiplier = 14.90;
inline constexpr double kPublishedLengthMultiplier = 20.76;
// Published bound on I(z) at z = tanh(2 ln(1+sqrt 2)). The computed value is
// ~221.95; it is reported as computed and compared against this, never
// silently replaced by it.
inline constexpr double kPublishedISquaredBound = 222.01;

// One Dehn-filling slope with its normalized length on the cusp torus.
struct SlopeSpec {
    long long p;
    long long q;
    double normalized_length;
    SlopeSpec(long long p_in, long long q_in, double nl)
        : p(p_in), q(q_in), normalized_length(nl) {
        if (std::gcd(std::abs(p), std::abs(q)) != 1)
            throw domain_error("SlopeSpec: (p, q) must be coprime");
        if (!(normalized_length > 0))
            throw domain_error("SlopeSpec: normalized length must be > 0");
    }
};

// F(w) = -(1 + 4w + 6w^2 + w^4) / ((w+1)(1+w^2)^2) on (0, 1].
inline double F_integrand(double w) {
    if (!(w > 0 && w <= 1)) throw domain_error("F_integrand: w outside (0,1]");
    const double w2 = w * w;
    const double num = 1 + 4 * w + 6 * w2 + w2 * w2;
    const double den = (w + 1) * (1 + w2) * (1 + w2);
    return -num / den;
}

// f(z) = 3.3957 (1-z) exp(-int_1^z F(w) dw) by adaptive quadrature.
inline double f_hk(double z) {
    if (!(z > 0 && z < 1)) throw domain_error("f_hk: z outside (0,1)");
    const double integral =
        numeric::integrate([](double w) { return F_integrand(w); }, 1.0, z);
    return kHkCoefficient * (1.0 - z) * std::exp(-integral);
}

// A(z) = 3.3957 z (1-z^2) / (1+z^2).
inline double A_visual(double z) {
    if (!(z > 0 && z < 1)) throw domain_error("A_visual: z outside (0,1)");
    return kHkCoefficient * z * (1 - z * z) / (1 + z * z);
}

// I(z) = (2 pi)^2 / f(z).
inline double I_of(double z) {
    return (2 * kPi) * (2 * kPi) / f_hk(z);
}

// Evaluated bundle at one tube-radius parameter z = tanh(r).
struct HKState {
    double z;
    double f_value;
    double A_value;
    double I_value;
};

inline HKState hk_state(double z) {
    const double f = f_hk(z);
    return HKState{z, f, A_visual(z), (2 * kPi) * (2 * kPi) / f};
}

// Minimal combined normalized length guaranteeing every filled core keeps a
// tube radius above R_target: sqrt(I(tanh R_target)).
inline double min_L_for_radius(double R_target) {
    if (!(R_target > 0))
        throw domain_error("min_L_for_radius: target radius must be > 0");
    const double L = std::sqrt(I_of(std::tanh(R_target)));
    if (!(L > kMinNormalizedLength))
        throw validity_error(
            "min_L_for_radius: required length does not exceed 7.5832, "
            "hypotheses not met");
    return L;
}

// Minimal combined normalized length forcing the total filled-core length
// below target: pick z* nearest 1 with A(z*) = 2 pi * target, then
// sqrt((2 pi)^2 / f(z*)). The bracket [0.5, 1) contains exactly one root for
// target < 0.1 because A is strictly decreasing there.
inline double min_L_for_total_length(double target) {
    if (!(target > 0 && target < 0.1))
        throw domain_error("min_L_for_total_length: target outside (0, 0.1)");
    const double rhs = 2 * kPi * target;
    const double z_star = numeric::find_root(
        [&](double z) { return A_visual(z) - rhs; }, 0.5, 1.0 - 1e-9);
    const double L = 2 * kPi / std::sqrt(f_hk(z_star));
    if (!(L > kMinNormalizedLength))
        throw validity_error(
            "min_L_for_total_length: required length does not exceed 7.5832");
    return L;
}

// Combined normalized length: (sum L_i^-2)^(-1/2).
inline double combine_slopes(const std::vector<double>& lengths) {
    if (lengths.empty()) throw usage_error("combine_slopes: empty slope list");
    double inv_sq = 0.0;
    for (double L : lengths) {
        if (!(L > 0))
            throw domain_error("combine_slopes: lengths must be > 0");
        inv_sq += 1.0 / (L * L);
    }
    return 1.0 / std::sqrt(inv_sq);
}

enum class FillingMode { Radius, Length };

// Multi-slope verdict: certified when every slope's normalized length clears
// multiplier * sqrt(k). For |chi| <= 2 the published multipliers apply;
// larger surfaces get the thresholds recomputed through the inverse solves.
inline hypcore::IsotopyVerdict filling_verdict(
    const std::vector<SlopeSpec>& slopes, double chi_abs, FillingMode mode) {
    if (slopes.empty()) throw usage_error("filling_verdict: no slopes given");
    if (!(chi_abs > 0)) throw domain_error("filling_verdict: chi must be > 0");

    double multiplier = 0.0;
    if (chi_abs <= 2.0) {
        multiplier = (mode == FillingMode::Radius)
                         ? kPublishedRadiusMultiplier
                         : kPublishedLengthMultiplier;
    } else if (mode == FillingMode::Radius) {
        multiplier = min_L_for_radius(hypcore::h_threshold(chi_abs));
    } else {
        multiplier =
            min_L_for_total_length(hypcore::length_cutoff(chi_abs));
    }

    const double k = static_cast<double>(slopes.size());
    hypcore::IsotopyVerdict v;
    v.threshold_used = multiplier * std::sqrt(k);
    v.certified = true;
    for (const SlopeSpec& s : slopes)
        if (!(s.normalized_length >= v.threshold_used)) v.certified = false;
    v.reason = v.certified ? hypcore::IsotopyReason::NormalizedLength
                           : hypcore::IsotopyReason::None;
    return v;
}

}  // namespace hypmut::dehn
