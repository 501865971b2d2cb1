// sweep.hpp — Parameter-sweep harness and serialization: recoherence sweeps
// over ohmicity/temperature, lambda_min maps, trajectory dumps, presets.

#pragma once

#include "qdeph/dynamics.hpp"
#include "qdeph/recoherence.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qdeph::sweep {

enum class VaryAxis { ohmicity, temperature };
enum class OutputFormat { csv, json };

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int count = 2; // >= 2, linear spacing, endpoints included
};

std::vector<double> linspace(const GridSpec& g);

struct SweepSpec {
    VaryAxis vary = VaryAxis::ohmicity;
    GridSpec grid;
    double fixed_lambda = 1.0;
    std::vector<double> series; // temperatures for an s-sweep, ohmicities for a T-sweep
    bath::QubitParams qubit;
    double omega_c = 1.0;
    recoherence::AnalyzeOptions analyze;

    void validate() const;
};

struct SweepRow {
    double x = 0.0;            // grid value (s or T)
    double series_value = 0.0; // family value (T or s)
    double lambda = 0.0;
    double lambda_min = 0.0;
    std::optional<double> t_star;
    std::optional<double> t_extr;
    std::optional<double> gamma_extr;
    double t_star_tot = 0.0;
    int rde_count = 0;
    std::string status; // "ok", "truncated" or "error: ..."
};

// One row per (series value x grid point), series-major, grid ascending.
// Per-point failures are recorded in the row status; the sweep never aborts.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs = 1);

std::vector<double> run_lambda_min_map_values(const std::vector<double>& s_grid,
                                              const std::vector<double>& t_grid,
                                              const bath::QubitParams& qubit,
                                              double omega_c, int jobs);

// ---- serialization (CSV: 12 significant digits, '.' decimals, LF, empty
// fields for missing values; JSON: null for missing values) ----

std::string format_g12(double v);

void write_sweep(std::ostream& os, VaryAxis vary, const std::vector<SweepRow>& rows,
                 OutputFormat fmt);
void write_lambda_min_map(std::ostream& os, const recoherence::ThresholdGrid& grid,
                          OutputFormat fmt);
void write_trajectory(std::ostream& os, const dynamics::Trajectory& tr, OutputFormat fmt);

nlohmann::json report_to_json(const recoherence::RecoherenceReport& rep);
void write_report(std::ostream& os, const recoherence::RecoherenceReport& rep,
                  OutputFormat fmt);

// ---- presets mirroring the published parameter sets ----
// fig1: lambda_min contour grids; fig2/fig3: trajectory families;
// fig4: t*/gamma_extr vs s; fig5: t*/gamma_extr vs T.

struct TrajectoryRun {
    double lambda = 1.0;
    double s = 1.0;
    double temperature = 1.0;
    double t_max = 20.0;
    int samples = 2000;
};

std::vector<SweepSpec> preset_sweep_specs(const std::string& name,
                                          const bath::QubitParams& qubit);
std::vector<TrajectoryRun> preset_trajectory_runs(const std::string& name);
void preset_lambda_min_grids(std::vector<double>& s_grid, std::vector<double>& t_grid);

// Runs every spec and streams the concatenated rows (series-major per spec,
// specs in order); identical bytes for any jobs value.
void run_preset_sweep(const std::vector<SweepSpec>& specs, int jobs, std::ostream& os,
                      OutputFormat fmt);

} // namespace qdeph::sweep
