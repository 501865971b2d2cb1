// bath.hpp — Spectral density of the phonon bath and the two bath integrals
// driving the qubit dynamics: the decoherence function gamma(t) and the
// correlation phase Phi(t).

#pragma once

namespace qdeph::bath {

// Power-law bath with exponential cutoff, J(w) = lambda wc^{1-s} w^s e^{-w/wc}.
// All quantities dimensionless with wc as the unit scale (default wc = 1).
struct BathParams {
    double lambda = 1.0;      // dimensionless coupling
    double s = 1.0;           // ohmicity index (s<1 sub-Ohmic, s=1 Ohmic, s>1 super-Ohmic)
    double temperature = 1.0; // T in units of wc; T = 0 means vacuum only
    double omega_c = 1.0;     // cutoff frequency

    void validate() const; // throws qdeph::domain_error on violation
};

struct QubitParams {
    double omega0 = 0.1; // level splitting in units of wc

    void validate() const;
};

// J(omega); returns 0 at omega = 0 for s > 0.
double spectral_density(double omega, const BathParams& bath);

// Phi(t) = int J(w) sin(wt)/w^2 dw, evaluated in closed form
//   Phi = lambda Gamma(s-1) sin((s-1) atan(wc t)) / (1 + wc^2 t^2)^{(s-1)/2}
// with the s -> 1 limit lambda atan(wc t) handled exactly.
double phi(double t, const BathParams& bath);

// gamma(t) = int J(w) coth(w/2T) (1 - cos wt)/w^2 dw >= 0.
// Vacuum part in closed form; thermal part summed over Bose modes with an
// Euler-Maclaurin tail (exact to ~1e-13 relative, O(30) evaluations).
double decoherence_fn(double t, const BathParams& bath);

// Pieces of decoherence_fn, exposed for cross-checks and envelope bounds.
double decoherence_vacuum(double t, const BathParams& bath);
double decoherence_thermal(double t, const BathParams& bath);

// Alternative route for the thermal part: adaptive quadrature of
// 2 J(w) (1 - cos wt) / (w^2 (e^{w/T} - 1)) on [0, wc(40+10s)], with the
// integrable small-w region handled by a power-series segment.
double decoherence_thermal_quadrature(double t, const BathParams& bath);

// First frequency moments of the spectral density:
//   m1     = int J(w)/w dw              = lambda wc Gamma(s)
//   m_coth = int J(w) coth(w/2T) dw     = lambda wc^2 Gamma(s+1) [1 + 2 (T/wc)^{s+1} zeta(s+1, 1+T/wc)]
// (at T = 0 the bracket is 1).
struct Moments {
    double m_coth = 0.0;
    double m1 = 0.0;
};
Moments small_t_moments(const BathParams& bath);

// |Phi(t')| <= phi_envelope(t) for all t' >= t when s > 1 (Phi decays).
double phi_envelope(double t, const BathParams& bath);

} // namespace qdeph::bath
