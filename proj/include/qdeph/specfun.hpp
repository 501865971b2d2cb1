// specfun.hpp — Gamma, log-gamma and Hurwitz zeta for the bath/threshold formulas

#pragma once

namespace qdeph::specfun {

struct SpecFunResult {
    double value = 0.0;
    double est_abs_error = 0.0; // estimated absolute truncation/rounding error
};

// Gamma(x) for x > 0. Throws qdeph::domain_error for x <= 0.
// Relative error below 1e-12 on [1e-3, 50].
double gamma_fn(double x);

// ln Gamma(x) for x > 0. Throws qdeph::domain_error for x <= 0.
double log_gamma_fn(double x);

// Generalized (Hurwitz) zeta  zeta(s,a) = sum_{n>=0} (n+a)^-s,  s > 1, a > 0.
// Euler-Maclaurin summation with Bernoulli tail through B_12; relative
// error below 1e-12 on s in (1, 12], a in (1e-3, 100].
// Throws qdeph::domain_error for s <= 1 or a <= 0.
double hurwitz_zeta(double s, double a);

// Same as hurwitz_zeta, with the Euler-Maclaurin truncation estimate attached.
SpecFunResult hurwitz_zeta_result(double s, double a);

SpecFunResult gamma_fn_result(double x);

} // namespace qdeph::specfun
