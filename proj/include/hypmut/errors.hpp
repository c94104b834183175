#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypmut {

// Bad caller input (values outside an operation's documented domain).
using domain_error = std::domain_error;

// Malformed request at the API/CLI boundary (missing inputs, unparseable lists).
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An iterative scheme (root finder, quadrature, Newton solve) failed to reach
// its tolerance. Carries the last residual for diagnostics.
struct numerical_error : std::runtime_error {
    double residual;
    explicit numerical_error(const std::string& what,
                             double residual_in = std::nan(""))
        : std::runtime_error(what), residual(residual_in) {}
};

// Inputs are numerically fine but a theorem hypothesis is not met, so no
// conclusion can be certified.
struct validity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two independent computation routes disagree beyond tolerance.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A combinatorial request would exceed desk-scale limits.
struct size_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hypmut
