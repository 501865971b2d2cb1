// recoherence.hpp — Extraction of recoherence observables from gamma_tot(t):
// recoherence time t*, extremum gamma_extr, negative intervals, RDE count,
// and the critical coupling lambda_min(s, T).

#pragma once

#include "qdeph/bath.hpp"
#include "qdeph/measurement.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qdeph::recoherence {

enum class TStarDefinition {
    crossing, // end of the first negative branch (default)
    extremum, // time of the global minimum of gamma_tot
};

struct AnalyzeOptions {
    TStarDefinition t_star_def = TStarDefinition::crossing;
    double horizon_cap = 1e4;   // in units of 1/omega_c, scaled internally
    double root_tol = 1e-9;     // |t| tolerance for interval endpoints
};

struct RecoherenceReport {
    std::optional<double> t_star;
    std::optional<double> t_extr;      // location of the global minimum
    std::optional<double> gamma_extr;  // global minimum of gamma_tot (< 0)
    std::optional<double> t_extr_first;
    std::optional<double> gamma_extr_first; // minimum within the first interval
    std::vector<std::pair<double, double>> intervals; // gamma_tot < 0 inside
    double t_star_tot = 0.0; // sum of interval lengths
    int rde_count = 0;       // number of negative intervals (i_max)
    bool truncated = false;  // scan hit the horizon cap before the stop rule fired
    double t_horizon = 0.0;  // last time examined
};

// Critical coupling separating pure decoherence (lambda < lambda_min) from
// initial coherence enhancement, in the pole-free form
//   lambda_min = sinh^2(w0/2T) Gamma(s+1)/Gamma(s)^2
//                [1 + 2 (T/wc)^{s+1} zeta(s+1, 1 + T/wc)].
double lambda_min(double s, double temperature, const bath::QubitParams& qubit,
                  double omega_c = 1.0);

// c2 in gamma_tot(t) = c2 t^2 + O(t^4):
//   c2 = (m_coth - m1^2 / sinh^2(w0/2T)) / 2.
double small_t_curvature(const bath::BathParams& bath, const bath::QubitParams& qubit);

// Independent route to the threshold: bisect lambda on the sign of the
// small-t curvature, to relative width 1e-6.
double lambda_min_bisect(double s, double temperature, const bath::QubitParams& qubit,
                         double omega_c = 1.0);

// Scans gamma_tot = gamma + gamma_cor on an adaptive grid, brackets every
// sign change by bisection, and locates extrema by golden-section search.
// Uses the diagonal-Gram gamma_cor (state-independent).  Requires T > 0.
RecoherenceReport analyze(const bath::BathParams& bath, const bath::QubitParams& qubit,
                          const AnalyzeOptions& opts = {});

// Same scan with the general-scheme gamma_cor.
RecoherenceReport analyze(const bath::BathParams& bath, const bath::QubitParams& qubit,
                          const measurement::MeasurementScheme& scheme,
                          const AnalyzeOptions& opts = {});

struct ThresholdGrid {
    std::vector<double> s_values;
    std::vector<double> t_values;      // temperatures
    std::vector<double> lambda_min;    // row-major: [i_s * t_values.size() + i_t]
};

ThresholdGrid lambda_min_grid(const std::vector<double>& s_values,
                              const std::vector<double>& t_values,
                              const bath::QubitParams& qubit, double omega_c = 1.0);

} // namespace qdeph::recoherence
