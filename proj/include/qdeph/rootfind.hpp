// rootfind.hpp — Bracketed bisection and golden-section minimization

#pragma once

#include <functional>

namespace qdeph::rootfind {

// Root of f in [a, b] with f(a) f(b) <= 0, located to |b - a| <= tol_x.
// Throws qdeph::domain_error when the bracket does not straddle a sign change.
double bisect_root(const std::function<double(double)>& f, double a, double b,
                   double tol_x = 1e-9);

// Abscissa of a local minimum of f inside [a, b], to |interval| <= tol_x.
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double tol_x = 1e-9);

} // namespace qdeph::rootfind
