#pragma once

// Elementary hyperbolic-geometry formulas: geodesic disk and cone areas, the
// mass ratio, the collar lemma, and the Euler-characteristic threshold
// functions h and g used to separate short geodesics from incompressible
// surfaces.

#include <cmath>
#include <optional>

#include "hypmut/errors.hpp"
#include "hypmut/numeric.hpp"

namespace hypmut::hypcore {

using numeric::kPi;

// Closed geodesic with an embedded tube of the given radius. Lengths are in
// hyperbolic units, dimensionless.
struct TubeData {
    double length;
    double radius;
    TubeData(double length_in, double radius_in)
        : length(length_in), radius(radius_in) {
        if (!(length > 0)) throw domain_error("TubeData: length must be > 0");
        if (!(radius > 0)) throw domain_error("TubeData: radius must be > 0");
    }
};

// Complex translation length l + i*theta with theta normalized to [0, 2pi).
struct ComplexLength {
    double real_part;
    double rotation;
    ComplexLength(double real_in, double rotation_in)
        : real_part(real_in), rotation(normalize_angle(rotation_in)) {
        if (!(real_part > 0))
            throw domain_error("ComplexLength: real part must be > 0");
    }
    static double normalize_angle(double theta) {
        double t = std::fmod(theta, 2 * kPi);
        if (t < 0) t += 2 * kPi;
        return t;
    }
};

enum class IsotopyReason { TubeRadius, Length, NormalizedLength, None };

inline const char* to_string(IsotopyReason r) {
    switch (r) {
        case IsotopyReason::TubeRadius: return "TubeRadius";
        case IsotopyReason::Length: return "Length";
        case IsotopyReason::NormalizedLength: return "NormalizedLength";
        default: return "None";
    }
}

// certified is true exactly when reason != None.
struct IsotopyVerdict {
    bool certified = false;
    IsotopyReason reason = IsotopyReason::None;
    double threshold_used = 0.0;
};

// Area of a totally geodesic disk of radius r: 4*pi*sinh^2(r/2).
inline double geodesic_disk_area(double r) {
    if (!(r > 0)) throw domain_error("geodesic_disk_area: r must be > 0");
    const double s = std::sinh(0.5 * r);
    return 4 * kPi * s * s;
}

// Area of the cone over a curve of the given length on a radius-r sphere:
// boundary_length * (cosh r - 1)/sinh r.
inline double cone_area(double boundary_length, double r) {
    if (!(r > 0)) throw domain_error("cone_area: r must be > 0");
    if (!(boundary_length >= 0))
        throw domain_error("cone_area: boundary length must be >= 0");
    return boundary_length * (std::cosh(r) - 1.0) / std::sinh(r);
}

// Disk area inside a radius-r ball divided by the totally geodesic disk area.
inline double mass_ratio(double disk_area, double r) {
    if (!(disk_area >= 0)) throw domain_error("mass_ratio: area must be >= 0");
    return disk_area / geodesic_disk_area(r);
}

// The collar lemma applies below this published length cutoff. The exact
// supremum (sqrt(3)/4pi)*ln(1+sqrt 2)^2 = 0.10707... is slightly larger; the
// truncated constant is used as the hard gate so certificates never rest on
// the trailing digits.
inline constexpr double kCollarLengthLimit = 0.107;
inline double collar_length_limit_exact() {
    const double l = std::log(std::sqrt(2.0) + 1.0);
    return std::sqrt(3.0) / (4 * kPi) * l * l;
}

inline double collar_k(double length) {
    return std::cosh(std::sqrt(4 * kPi * length / std::sqrt(3.0))) - 1.0;
}

// Radius of the embedded tube guaranteed around a closed geodesic of the
// given length: sinh^2(r) = ((sqrt(1-2k)/k) - 1)/2 with
// k = cosh(sqrt(4*pi*length/sqrt 3)) - 1. Strictly decreasing in length.
inline double collar_radius(double length) {
    if (!(length > 0) || !(length < kCollarLengthLimit))
        throw domain_error("collar_radius: length must lie in (0, 0.107)");
    const double k = collar_k(length);
    if (!(k < 0.5))
        throw domain_error("collar_radius: k(length) >= 1/2, tube undefined");
    const double ratio = std::sqrt(1.0 - 2.0 * k) / k;
    if (!(ratio >= 1.0))
        throw domain_error("collar_radius: collar equation has no solution");
    return std::asinh(std::sqrt(0.5 * (ratio - 1.0)));
}

// Tube-radius threshold h(x) = 2*asinh(sqrt(x/2)). Source statements write
// the same function as both f and h; h is used throughout here.
inline double h_threshold(double chi_abs) {
    if (!(chi_abs > 0)) throw domain_error("h_threshold: chi must be > 0");
    return 2.0 * std::asinh(std::sqrt(0.5 * chi_abs));
}

// Collar-ratio threshold g(x) = 2x^2 + 4x + 1.
inline double g_threshold(double chi_abs) {
    if (!(chi_abs > 0)) throw domain_error("g_threshold: chi must be > 0");
    return 2 * chi_abs * chi_abs + 4 * chi_abs + 1;
}

// Largest geodesic length l* with sqrt(1-2k(l))/k(l) = g(chi_abs); any
// shorter geodesic clears the collar-ratio threshold. Bracketed root solve
// on the strictly decreasing ratio.
inline double max_length_for_chi(double chi_abs) {
    const double g = g_threshold(chi_abs);
    auto residual = [&](double length) {
        const double k = collar_k(length);
        return std::sqrt(1.0 - 2.0 * k) / k - g;
    };
    const double lo = 1e-9;
    const double hi = kCollarLengthLimit - 1e-9;
    if (residual(hi) > 0)
        throw numerical_error("max_length_for_chi: no root below collar limit",
                              residual(hi));
    return numeric::find_root(residual, lo, hi);
}

// Published cutoff for |chi| <= 2; the derived root is ~0.01515, slightly
// larger, so min(l*, 0.015) keeps certificates at least as strong as the
// published statement.
inline constexpr double kPublishedLengthCutoff = 0.015;

inline double length_cutoff(double chi_abs) {
    const double derived = max_length_for_chi(chi_abs);
    if (chi_abs == 2.0) return std::min(derived, kPublishedLengthCutoff);
    return derived;
}

// Disjunction of the separation conditions: large tube radius first, short
// length second. At least one of tube_radius/length must be supplied.
inline IsotopyVerdict isotopy_verdict(double chi_abs,
                                      std::optional<double> tube_radius,
                                      std::optional<double> length) {
    if (!tube_radius && !length)
        throw usage_error("isotopy_verdict: supply a tube radius or a length");
    if (tube_radius && !(*tube_radius > 0))
        throw domain_error("isotopy_verdict: tube radius must be > 0");
    if (length && !(*length > 0))
        throw domain_error("isotopy_verdict: length must be > 0");

    IsotopyVerdict v;
    if (tube_radius) {
        v.threshold_used = h_threshold(chi_abs);
        if (*tube_radius > v.threshold_used) {
            v.certified = true;
            v.reason = IsotopyReason::TubeRadius;
            return v;
        }
    }
    if (length) {
        v.threshold_used = length_cutoff(chi_abs);
        if (*length < v.threshold_used) {
            v.certified = true;
            v.reason = IsotopyReason::Length;
            return v;
        }
    }
    v.certified = false;
    v.reason = IsotopyReason::None;
    return v;
}

}  // namespace hypmut::hypcore
