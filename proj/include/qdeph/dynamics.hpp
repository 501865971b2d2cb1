// dynamics.hpp — Time-dependent decoherence functions and the coherence
// trajectory: gamma_cor(t), gamma_tot(t), phase shift chi(t), |<sigma_+(t)>|.

#pragma once

#include "qdeph/bath.hpp"
#include "qdeph/measurement.hpp"

#include <vector>

namespace qdeph::dynamics {

struct Trajectory {
    std::vector<double> times;
    std::vector<double> gamma;
    std::vector<double> gamma_cor;
    std::vector<double> gamma_tot;
    std::vector<double> chi;
    std::vector<double> abs_sigma;
};

// Correlation contribution for a diagonal-Gram scheme:
//   gamma_cor = -1/2 ln[1 + sin^2 Phi(t) / sinh^2(w0/2T)],
// state-independent, always in [-ln coth(w0/2T), 0].  Requires T > 0.
double gamma_cor_diagonal(double t, const bath::BathParams& bath,
                          const bath::QubitParams& qubit);

// Same quantity computed from Phi directly (shared by trajectory code).
double gamma_cor_diagonal_phi(double phi_value, double omega0, double temperature);

// General scheme:
//   gamma_cor = -1/2 ln{1 + [(N1^2+N2^2)/D^2 - 1] sin^2 Phi + (N2/D) sin 2Phi}.
// Throws qdeph::degenerate_scheme_error when the log argument falls below
// 1e-14 (closed form breaks down for the given scheme/time).
double gamma_cor_general(double t, const measurement::MeasurementScheme& scheme,
                         const bath::BathParams& bath, const bath::QubitParams& qubit);

// chi(t) = arctan[N1 sin Phi / (D cos Phi + N2 sin Phi)], principal value.
double phase_shift(double t, const measurement::MeasurementScheme& scheme,
                   const bath::BathParams& bath, const bath::QubitParams& qubit);

// Largest possible |gamma_cor| for the diagonal-Gram dynamics: ln coth(w0/2T).
double gamma_cor_bound(const bath::QubitParams& qubit, double temperature);

struct TrajectoryOptions {
    bool unwrap_chi = false;  // accumulate chi continuously instead of principal values
    bool refine_grid = true;  // cap the step at (Phi oscillation period)/20
};

// Evaluates the trajectory on t_grid (plus refinement points when enabled).
// <sigma_+(t)> = <sigma_+> e^{i(w0 t + chi)} e^{-gamma_tot}.
Trajectory coherence_trajectory(const std::vector<double>& t_grid,
                                const measurement::MeasurementScheme& scheme,
                                const bath::BathParams& bath,
                                const bath::QubitParams& qubit,
                                const TrajectoryOptions& opts = {});

} // namespace qdeph::dynamics
