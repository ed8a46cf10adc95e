#pragma once

#include <functional>

#include "hypzeta/specfun.hpp"

namespace hz {

struct QuadratureResult {
    cplx value{0.0};
    double error_estimate = 0.0;
    long evaluations = 0;
};

using ComplexIntegrand = std::function<cplx(double)>;

// Adaptive 15-point Gauss-Kronrod on [a, b].
QuadratureResult integrate(const ComplexIntegrand& f, double a, double b, double tol = 1e-11,
                           int max_depth = 18);

// Integral over [0, inf) after s = tan(theta).
QuadratureResult integrate_half_line(const ComplexIntegrand& f, double tol = 1e-11,
                                     int max_depth = 18);

// Integral over [0, inf) of f with |f(s)| ~ s^{-alpha} (alpha > 1) as s -> inf: [0, 1] directly,
// [1, inf) after s = e^x, truncated where e^{-(alpha-1)x} drops below 1e-17.
QuadratureResult integrate_algebraic(const ComplexIntegrand& f, double alpha, double tol = 1e-11,
                                     int max_depth = 18);

}  // namespace hz
