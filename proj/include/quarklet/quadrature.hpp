#pragma once

#include <functional>

namespace quarklet {

/// Composite Gauss-Legendre quadrature over [a, b] on dyadic cells of width
/// 2^-level.  a and b must be multiples of 2^-level.  nodes in {2, 4, 8};
/// exact for piecewise polynomials of degree 2*nodes-1 whose pieces are
/// aligned with the cell grid.
double integrate_dyadic(const std::function<double(double)>& f, double a, double b, int level, int nodes = 8);

/// Gauss-Legendre on a single interval [a, b].
double integrate_interval(const std::function<double(double)>& f, double a, double b, int nodes = 8);

/// Abscissas and weights of the n-point Gauss-Legendre rule on [0, 1],
/// n in {2, 4, 8}.
void gauss_rule_01(int nodes, const double*& x, const double*& w);

}  // namespace quarklet
