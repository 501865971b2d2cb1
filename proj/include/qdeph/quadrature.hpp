// quadrature.hpp — Adaptive Gauss quadrature on finite intervals

#pragma once

#include <functional>

namespace qdeph::quad {

struct QuadResult {
    double value = 0.0;
    double est_abs_error = 0.0;
    bool converged = false;
    int panels = 0;
};

struct QuadOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14; // absolute floor
    int max_panels = 20000;
};

// Integrate f over [a, b]. Each panel is evaluated with nested 7- and
// 15-point Gauss-Legendre rules; the worst panel is bisected until the
// summed error estimate meets tol or the panel budget runs out.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts = {});

// Convenience wrapper that throws qdeph::convergence_error when the
// requested tolerance is not met.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          const QuadOptions& opts = {});

} // namespace qdeph::quad
