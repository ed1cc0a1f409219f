#pragma once

#include <functional>

namespace svol {

// Adaptive Simpson quadrature with an absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 60);

// Fixed 16-node Gauss-Legendre rule on [a, b].
double gauss_legendre_16(const std::function<double(double)>& f, double a, double b);

} // namespace svol
