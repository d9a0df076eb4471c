#pragma once

#include <functional>
#include <span>
#include <vector>

#include "divcheck/errors.hpp"

namespace divcheck {

/// Nodes/weights on [-1, 1], computed once by Newton iteration on the
/// Legendre recurrence (no literal tables to mistype).
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussLegendre& gauss_legendre(int order);

double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    const GaussLegendre& rule);

/// Adaptive bisection with a fixed-order Gauss--Legendre panel; the error
/// estimate compares one panel against its two halves. Throws
/// QuadratureFailureError at the refinement limit. Deterministic: recursion
/// order is fixed (left before right).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol);

/// Integrates over [breaks.front(), breaks.back()] splitting at every
/// breakpoint; per-segment results are combined by pairwise summation in
/// ascending segment order.
double integrate_piecewise(const std::function<double(double)>& f,
                           std::span<const double> breaks, double abs_tol);

double pairwise_sum(std::span<const double> values);

}  // namespace divcheck
