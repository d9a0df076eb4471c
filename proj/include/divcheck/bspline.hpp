#pragma once

#include "divcheck/divdiff.hpp"
#include "divcheck/nodes.hpp"

namespace divcheck {

/// Pointwise value of the B-spline density
///   F(t) = (n-1)/2 sum_j |x_j - t| (x_j - t)^{n-3} / prod_{k!=j} (x_j - x_k),
/// a probability density supported on [x_1, x_n]. For n = 2 the formula
/// degenerates pointwise and the simplified closed form (uniform density
/// 1/(x_2-x_1) strictly inside, 0 strictly outside) is used instead;
/// evaluation exactly at a node is a DegenerateOrderError then. For n = 3 the
/// raw formula applies with |0| * 0^0 terms read as 0.
double bspline_eval(double t, const NodeSet<double>& nodes);

/// integral of F over the support (== 1), by per-knot-interval quadrature.
double bspline_integral(const NodeSet<double>& nodes, double tol = 1e-10);

/// first moment of F (== mean of the nodes).
double bspline_mean(const NodeSet<double>& nodes, double tol = 1e-10);

/// Peano representation f[x_1..x_n] = (1/(n-1)!) int f^{(n-1)}(t) F(t) dt.
double peano_divdiff(const FunctionSpec& f, const NodeSet<double>& nodes, double tol = 1e-10);

}  // namespace divcheck
