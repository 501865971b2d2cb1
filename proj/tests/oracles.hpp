// oracles.hpp — Test-only reference implementations, kept independent of the
// library code paths they check: direct quadrature of the bath integrals,
// brute-force matrix-element evaluation of the correlation factor, naive Bose
// summation, and dense-grid interval scans.

#pragma once

#include "qdeph/bath.hpp"
#include "qdeph/measurement.hpp"
#include "qdeph/quadrature.hpp"

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace oracles {

using qdeph::bath::BathParams;
using qdeph::bath::QubitParams;
using qdeph::measurement::MeasurementScheme;
using cplx = std::complex<double>;

// ---- adaptive-quadrature references -------------------------------------
// The integrable w^{s-1} endpoint (s < 1) is removed by substituting
// w = v^{1/s} on [0, w_break]; no series segment is shared with the library.

inline double phi_quadrature(double t, const BathParams& b) {
    const double s = b.s, wc = b.omega_c;
    const double pref = b.lambda * std::pow(wc, 1.0 - s);
    const auto f = [&](double w) {
        return std::pow(w, s - 2.0) * std::exp(-w / wc) * std::sin(w * t);
    };
    const double wb = 0.5 * wc;
    const auto sub = [&](double v) { // w = v^{1/s}, dw = (1/s) v^{1/s-1} dv
        const double w = std::pow(v, 1.0 / s);
        return std::exp(-w / wc) * std::sin(w * t) / (s * w);
    };
    qdeph::quad::QuadOptions o;
    o.rel_tol = 1e-12;
    o.abs_tol = 1e-15;
    o.max_panels = 60000;
    double head = qdeph::quad::integrate_or_throw(sub, 0.0, std::pow(wb, s), o);
    double tail = qdeph::quad::integrate_or_throw(f, wb, wc * (42.0 + 10.0 * s), o);
    return pref * (head + tail);
}

inline double gamma_quadrature(double t, const BathParams& b) {
    const double s = b.s, wc = b.omega_c, T = b.temperature;
    const double pref = b.lambda * std::pow(wc, 1.0 - s);
    const auto kern = [&](double w) {
        const double sn = std::sin(0.5 * w * t);
        const double oneminuscos = 2.0 * sn * sn;
        const double coth = (T > 0.0) ? 1.0 + 2.0 / std::expm1(w / T) : 1.0;
        return std::exp(-w / wc) * coth * oneminuscos;
    };
    const auto f = [&](double w) { return std::pow(w, s - 2.0) * kern(w); };
    const double wb = 0.5 * wc;
    const auto sub = [&](double v) {
        const double w = std::pow(v, 1.0 / s);
        return kern(w) / (s * w * w);
    };
    qdeph::quad::QuadOptions o;
    o.rel_tol = 1e-12;
    o.abs_tol = 1e-15;
    o.max_panels = 60000;
    double head = qdeph::quad::integrate_or_throw(sub, 0.0, std::pow(wb, s), o);
    double tail = qdeph::quad::integrate_or_throw(f, wb, wc * (42.0 + 10.0 * s), o);
    return pref * (head + tail);
}

// Naive partial Bose sum (s > 1), exactly the series
//   2 lam wc^{1-s} G(s-1) sum_n [p_n^{-(s-1)} - (p_n^2+t^2)^{-(s-1)/2} cos((s-1) atan(t/p_n))]
inline double gamma_thermal_series_naive(double t, const BathParams& b, int n_terms) {
    const double eps = b.s - 1.0;
    double sum = 0.0;
    for (int n = n_terms; n >= 1; --n) {
        const double p = 1.0 / b.omega_c + n / b.temperature;
        sum += std::pow(p, -eps) -
               std::pow(p * p + t * t, -0.5 * eps) * std::cos(eps * std::atan(t / p));
    }
    return 2.0 * b.lambda * std::pow(b.omega_c, 1.0 - b.s) * std::tgamma(eps) * sum;
}

// ---- brute-force measurement-scheme evaluation ---------------------------

struct Mat2 {
    cplx m[2][2];
};

inline Mat2 outer(const qdeph::measurement::PureState& k,
                  const qdeph::measurement::PureState& b) {
    Mat2 r;
    r.m[0][0] = k.amp_up * std::conj(b.amp_up);
    r.m[0][1] = k.amp_up * std::conj(b.amp_down);
    r.m[1][0] = k.amp_down * std::conj(b.amp_up);
    r.m[1][1] = k.amp_down * std::conj(b.amp_down);
    return r;
}

// X_i = sum_m <i| Omega_m^+ sigma_+ Omega_m |i> in the basis (|1>, |0>),
// with sigma_+ = |1><0|.  Column |0> is index 1, |1> is index 0.
inline std::pair<cplx, cplx> sigma_plus_elements(const MeasurementScheme& sch) {
    using namespace qdeph::measurement;
    const PureState a = state_from_angles(sch.a);
    const PureState ma = orthogonal_state(sch.a);
    const PureState b1 = state_from_angles(sch.b1);
    const PureState b2 = state_from_angles(sch.b2);
    const Mat2 om[2] = {outer(b1, a), outer(b2, ma)};
    cplx x0 = 0.0, x1 = 0.0;
    for (const auto& O : om) {
        // v = Omega |i>; <v| sigma_+ |v> = conj(v_up) v_down
        const cplx v0u = O.m[0][1], v0d = O.m[1][1]; // Omega |0>
        const cplx v1u = O.m[0][0], v1d = O.m[1][0]; // Omega |1>
        x0 += std::conj(v0u) * v0d;
        x1 += std::conj(v1u) * v1d;
    }
    return {x0, x1};
}

// Correlation factor of the direct coherence expression at phase Phi:
//   [X0 e^{b0 + i Phi} + X1 e^{-b0 - i Phi}] / [X0 e^{b0} + X1 e^{-b0}]
inline cplx correlation_factor(const MeasurementScheme& sch, double omega0, double T,
                               double phi) {
    const auto [x0, x1] = sigma_plus_elements(sch);
    const double b0 = 0.5 * omega0 / T;
    const cplx num = x0 * std::exp(b0) * std::polar(1.0, phi) +
                     x1 * std::exp(-b0) * std::polar(1.0, -phi);
    const cplx den = x0 * std::exp(b0) + x1 * std::exp(-b0);
    return num / den;
}

// Full direct evaluation of <sigma_+(t)> (modulus and phase), bath factors
// taken from quadrature to stay off the library's closed forms.
inline cplx coherence_direct(const MeasurementScheme& sch, const BathParams& b,
                             const QubitParams& q, double t, bool bath_by_quadrature) {
    const auto [x0, x1] = sigma_plus_elements(sch);
    const double b0 = 0.5 * q.omega0 / b.temperature;
    const cplx sig0 = (x0 * std::exp(b0) + x1 * std::exp(-b0)) / (2.0 * std::cosh(b0));
    const double phi =
        bath_by_quadrature ? phi_quadrature(t, b) : qdeph::bath::phi(t, b);
    const double gam =
        bath_by_quadrature ? gamma_quadrature(t, b) : qdeph::bath::decoherence_fn(t, b);
    return sig0 * std::polar(1.0, q.omega0 * t) * std::exp(-gam) *
           correlation_factor(sch, q.omega0, b.temperature, phi);
}

// <sigma_3> at t = 0 via matrix elements.
inline double sigma3_direct(const MeasurementScheme& sch, double omega0, double T) {
    using namespace qdeph::measurement;
    const PureState a = state_from_angles(sch.a);
    const PureState ma = orthogonal_state(sch.a);
    const PureState b1 = state_from_angles(sch.b1);
    const PureState b2 = state_from_angles(sch.b2);
    const Mat2 om[2] = {outer(b1, a), outer(b2, ma)};
    const double b0 = 0.5 * omega0 / T;
    double acc = 0.0;
    for (const auto& O : om) {
        const cplx v0u = O.m[0][1], v0d = O.m[1][1];
        const cplx v1u = O.m[0][0], v1d = O.m[1][0];
        const double e0 = std::norm(v0u) - std::norm(v0d); // <sigma_3> of Omega|0>
        const double e1 = std::norm(v1u) - std::norm(v1d);
        acc += e0 * std::exp(b0) + e1 * std::exp(-b0);
    }
    return acc / (2.0 * std::cosh(b0));
}

// ---- dense interval scan --------------------------------------------------

template <typename F>
std::vector<std::pair<double, double>> scan_negative_intervals(F&& f, double t_max,
                                                               double dt) {
    std::vector<std::pair<double, double>> out;
    bool neg = false;
    double start = 0.0, prev = 0.0, fprev = 0.0;
    for (double t = dt; t <= t_max; t += dt) {
        const double v = f(t);
        if (!neg && v < 0.0) {
            start = (prev == 0.0) ? 0.0 : prev - fprev * (t - prev) / (v - fprev);
            neg = true;
        } else if (neg && v >= 0.0) {
            out.emplace_back(start, prev - fprev * (t - prev) / (v - fprev));
            neg = false;
        }
        prev = t;
        fprev = v;
    }
    if (neg)
        out.emplace_back(start, t_max);
    return out;
}

} // namespace oracles
