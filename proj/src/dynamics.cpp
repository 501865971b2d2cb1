#include "qdeph/dynamics.hpp"
#include "qdeph/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qdeph::dynamics {

namespace {

void check_temperature(double T) {
    if (!(T > 0.0))
        throw domain_error("dynamics: temperature must be > 0, got " + std::to_string(T));
}

double gamma_cor_from_nnd(double phi_value, const measurement::CorrelationCoefficients& c) {
    const double sp = std::sin(phi_value);
    const double s2p = std::sin(2.0 * phi_value);
    const double x = ((c.n1 * c.n1 + c.n2 * c.n2) / (c.d * c.d) - 1.0) * sp * sp +
                     (c.n2 / c.d) * s2p;
    if (1.0 + x <= 1e-14)
        throw degenerate_scheme_error(
            "gamma_cor_general: log argument <= 1e-14 at Phi = " + std::to_string(phi_value) +
            " (closed form breaks down for this scheme)");
    return -0.5 * std::log1p(x);
}

double chi_from_nnd(double phi_value, const measurement::CorrelationCoefficients& c) {
    const double num = c.n1 * std::sin(phi_value);
    const double den = c.d * std::cos(phi_value) + c.n2 * std::sin(phi_value);
    if (num == 0.0)
        return 0.0;
    return std::atan(num / den);
}

} // namespace

double gamma_cor_diagonal_phi(double phi_value, double omega0, double temperature) {
    const double sh = std::sinh(0.5 * omega0 / temperature);
    const double sp = std::sin(phi_value);
    return -0.5 * std::log1p(sp * sp / (sh * sh));
}

double gamma_cor_diagonal(double t, const bath::BathParams& bath,
                          const bath::QubitParams& qubit) {
    qubit.validate();
    check_temperature(bath.temperature);
    return gamma_cor_diagonal_phi(bath::phi(t, bath), qubit.omega0, bath.temperature);
}

double gamma_cor_general(double t, const measurement::MeasurementScheme& scheme,
                         const bath::BathParams& bath, const bath::QubitParams& qubit) {
    check_temperature(bath.temperature);
    const auto c = measurement::nnd_coefficients(scheme, qubit, bath.temperature);
    return gamma_cor_from_nnd(bath::phi(t, bath), c);
}

double phase_shift(double t, const measurement::MeasurementScheme& scheme,
                   const bath::BathParams& bath, const bath::QubitParams& qubit) {
    check_temperature(bath.temperature);
    const auto c = measurement::nnd_coefficients(scheme, qubit, bath.temperature);
    return chi_from_nnd(bath::phi(t, bath), c);
}

double gamma_cor_bound(const bath::QubitParams& qubit, double temperature) {
    qubit.validate();
    check_temperature(temperature);
    return -std::log(std::tanh(0.5 * qubit.omega0 / temperature));
}

Trajectory coherence_trajectory(const std::vector<double>& t_grid,
                                const measurement::MeasurementScheme& scheme,
                                const bath::BathParams& bath,
                                const bath::QubitParams& qubit,
                                const TrajectoryOptions& opts) {
    bath.validate();
    qubit.validate();
    check_temperature(bath.temperature);
    if (t_grid.empty())
        throw domain_error("coherence_trajectory: empty time grid");
    if (!(t_grid.front() >= 0.0))
        throw domain_error("coherence_trajectory: times must be >= 0");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw domain_error("coherence_trajectory: times must be strictly increasing");

    const auto coeff = measurement::nnd_coefficients(scheme, qubit, bath.temperature);
    const auto obs = measurement::initial_observables(scheme, qubit, bath.temperature);
    const double sig0 = std::abs(obs.sigma_plus_0);

    // Refinement: dPhi/dt(0) = m1 bounds the phase speed everywhere, so a step
    // of (2 pi / m1)/20 keeps >= 20 samples per Phi oscillation.
    std::vector<double> grid;
    if (opts.refine_grid) {
        const double m1 = bath::small_t_moments(bath).m1;
        const double cap = (m1 > 0.0) ? 0.1 * std::numbers::pi / m1
                                      : std::numeric_limits<double>::infinity();
        grid.push_back(t_grid.front());
        for (std::size_t i = 1; i < t_grid.size(); ++i) {
            const double dt = t_grid[i] - t_grid[i - 1];
            const int pieces = std::max(1, static_cast<int>(std::ceil(dt / cap)));
            for (int j = 1; j <= pieces; ++j)
                grid.push_back(t_grid[i - 1] + dt * j / pieces);
        }
    } else {
        grid = t_grid;
    }

    Trajectory tr;
    tr.times = std::move(grid);
    const std::size_t n = tr.times.size();
    tr.gamma.resize(n);
    tr.gamma_cor.resize(n);
    tr.gamma_tot.resize(n);
    tr.chi.resize(n);
    tr.abs_sigma.resize(n);

    double prev_chi = 0.0, wind = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = tr.times[i];
        const double p = bath::phi(t, bath);
        tr.gamma[i] = bath::decoherence_fn(t, bath);
        tr.gamma_cor[i] = gamma_cor_from_nnd(p, coeff);
        tr.gamma_tot[i] = tr.gamma[i] + tr.gamma_cor[i];
        double chi = chi_from_nnd(p, coeff);
        if (opts.unwrap_chi) {
            // atan branch jumps by pi; shift into the continuation of prev_chi
            double d = chi + wind - prev_chi;
            while (d > 0.5 * std::numbers::pi) {
                wind -= std::numbers::pi;
                d -= std::numbers::pi;
            }
            while (d < -0.5 * std::numbers::pi) {
                wind += std::numbers::pi;
                d += std::numbers::pi;
            }
            chi += wind;
            prev_chi = chi;
        }
        tr.chi[i] = chi;
        tr.abs_sigma[i] = sig0 * std::exp(-tr.gamma_tot[i]);
    }
    return tr;
}

} // namespace qdeph::dynamics
