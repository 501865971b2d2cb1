#include "qdeph/recoherence.hpp"
#include "qdeph/dynamics.hpp"
#include "qdeph/errors.hpp"
#include "qdeph/rootfind.hpp"
#include "qdeph/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

namespace qdeph::recoherence {

namespace {

void check_st(double s, double T) {
    if (!(s > 0.0))
        throw domain_error("recoherence: ohmicity s must be > 0");
    if (!(T > 0.0))
        throw domain_error("recoherence: temperature must be > 0");
}

// Correlation factor parameters: gamma_cor = -1/2 ln(1 + A sin^2 Phi + B sin 2Phi).
// Diagonal Gram: A = 1/sinh^2(w0/2T), B = 0.
struct CorShape {
    double A = 0.0;
    double B = 0.0;

    double gamma_cor(double phi_value) const {
        const double sp = std::sin(phi_value);
        const double x = A * sp * sp + B * std::sin(2.0 * phi_value);
        if (1.0 + x <= 1e-14)
            throw degenerate_scheme_error("analyze: gamma_cor log argument <= 1e-14");
        return -0.5 * std::log1p(x);
    }
    // max of -gamma_cor over Phi (Eq.-style oscillation bound)
    double neg_bound() const {
        const double xhi = 0.5 * A + std::sqrt(0.25 * A * A + B * B);
        return 0.5 * std::log1p(xhi);
    }
    // sound bound on -gamma_cor when |sin Phi| <= p:  ln(1+x) <= x
    double neg_envelope(double p) const {
        return 0.5 * (std::abs(A) * p * p + 2.0 * std::abs(B) * p);
    }
};

RecoherenceReport analyze_impl(const bath::BathParams& bp, const bath::QubitParams& qubit,
                               const CorShape& cor, const AnalyzeOptions& opts) {
    bp.validate();
    qubit.validate();
    check_st(bp.s, bp.temperature);

    RecoherenceReport rep;
    if (bp.lambda == 0.0)
        return rep; // Phi == 0, gamma_cor == 0, gamma >= 0

    const double cap = opts.horizon_cap / bp.omega_c;
    const double bound = cor.neg_bound();
    const double m1 = bath::small_t_moments(bp).m1;
    const double step_phase = std::numbers::pi / (20.0 * m1);

    const auto gamma_tot = [&](double t) {
        return bath::decoherence_fn(t, bp) + cor.gamma_cor(bath::phi(t, bp));
    };

    // For s > 1 both Phi and the vacuum-part oscillation decay like
    // (1 + wc^2 t^2)^{-(s-1)/2}; once the gamma_cor envelope drops below the
    // monotone vacuum floor, gamma_tot stays positive for good.
    const bool has_envelope_rule = bp.s > 1.0;
    const double gamma_vac_limit =
        has_envelope_rule
            ? bp.lambda * std::tgamma(bp.s + 1.0) / (bp.s * (bp.s - 1.0))
            : 0.0;

    // Grid: linear step resolves the Phi oscillation, relative step 1/128
    // resolves the power-law envelopes of wide near-threshold dips.
    const double t_start = std::min(step_phase, 1e-9 / bp.omega_c);

    std::vector<std::pair<double, double>> intervals;
    bool in_neg = false;
    double cur_start = 0.0;
    double t_prev = 0.0, g_prev = 0.0; // gamma_tot(0) = 0
    double t = t_start;
    bool stopped = false;

    while (true) {
        if (t > cap) {
            rep.truncated = true;
            rep.t_horizon = cap;
            if (in_neg) {
                intervals.emplace_back(cur_start, cap);
                in_neg = false;
            }
            break;
        }
        const double g = gamma_tot(t);
        if (!in_neg && g < 0.0) {
            cur_start = (t_prev == 0.0) ? 0.0
                                        : rootfind::bisect_root(gamma_tot, t_prev, t,
                                                                opts.root_tol);
            in_neg = true;
        } else if (in_neg && g >= 0.0) {
            intervals.emplace_back(
                cur_start, rootfind::bisect_root(gamma_tot, t_prev, t, opts.root_tol));
            in_neg = false;
        }

        if (!in_neg) {
            const double gb = bath::decoherence_fn(t, bp);
            if (bp.s < 2.0 && gb > bound) { // gamma is non-decreasing for s < 2
                rep.t_horizon = t;
                stopped = true;
            } else if (has_envelope_rule) {
                const double env = cor.neg_envelope(std::min(1.0, bath::phi_envelope(t, bp)));
                const double vac_floor = gamma_vac_limit - bath::phi_envelope(t, bp);
                if (env < vac_floor) {
                    rep.t_horizon = t;
                    stopped = true;
                }
            }
        }
        if (stopped)
            break;
        t_prev = t;
        g_prev = g;
        t += std::min(step_phase, t / 128.0);
    }
    (void)g_prev;

    rep.intervals = std::move(intervals);
    rep.rde_count = static_cast<int>(rep.intervals.size());
    for (const auto& iv : rep.intervals)
        rep.t_star_tot += iv.second - iv.first;
    if (rep.intervals.empty())
        return rep;

    // Locate the minimum inside each interval: coarse in-interval sampling,
    // then golden-section around the best sample.
    double best_g = 0.0, best_t = 0.0;
    bool first = true;
    for (const auto& iv : rep.intervals) {
        const int M = 64;
        const double h = (iv.second - iv.first) / (M + 1);
        double lo_t = iv.first + h;
        double lo_g = gamma_tot(lo_t);
        for (int j = 2; j <= M; ++j) {
            const double tj = iv.first + h * j;
            const double gj = gamma_tot(tj);
            if (gj < lo_g) {
                lo_g = gj;
                lo_t = tj;
            }
        }
        const double a = std::max(iv.first, lo_t - h);
        const double b = std::min(iv.second, lo_t + h);
        const double tm = rootfind::golden_min(gamma_tot, a, b, opts.root_tol);
        double gm = gamma_tot(tm);
        if (gm > lo_g) { // golden landed worse than the coarse sample
            gm = lo_g;
        } else {
            lo_t = tm;
        }
        if (first) {
            rep.t_extr_first = lo_t;
            rep.gamma_extr_first = gm;
            first = false;
        }
        if (gm < best_g) {
            best_g = gm;
            best_t = lo_t;
        }
    }
    rep.t_extr = best_t;
    rep.gamma_extr = best_g;
    rep.t_star = (opts.t_star_def == TStarDefinition::crossing)
                     ? rep.intervals.front().second
                     : best_t;
    return rep;
}

} // namespace

double lambda_min(double s, double temperature, const bath::QubitParams& qubit,
                  double omega_c) {
    qubit.validate();
    check_st(s, temperature);
    if (!(omega_c > 0.0))
        throw domain_error("lambda_min: omega_c must be > 0");
    const double b0 = 0.5 * qubit.omega0 / temperature;
    const double sh = std::sinh(b0);
    const double a = temperature / omega_c;
    const double bracket =
        1.0 + 2.0 * std::pow(a, s + 1.0) * specfun::hurwitz_zeta(s + 1.0, 1.0 + a);
    // Gamma(s+1)/Gamma(s)^2 = s / Gamma(s)
    return sh * sh * s / std::tgamma(s) * bracket;
}

double small_t_curvature(const bath::BathParams& bath_params,
                         const bath::QubitParams& qubit) {
    bath_params.validate();
    qubit.validate();
    check_st(bath_params.s, bath_params.temperature);
    const auto m = bath::small_t_moments(bath_params);
    const double sh = std::sinh(0.5 * qubit.omega0 / bath_params.temperature);
    return 0.5 * (m.m_coth - m.m1 * m.m1 / (sh * sh));
}

double lambda_min_bisect(double s, double temperature, const bath::QubitParams& qubit,
                         double omega_c) {
    qubit.validate();
    check_st(s, temperature);
    const auto curvature = [&](double lam) {
        bath::BathParams bp{lam, s, temperature, omega_c};
        return small_t_curvature(bp, qubit);
    };
    double lo = 1e-8, hi = 1e3;
    if (!(curvature(lo) > 0.0 && curvature(hi) < 0.0))
        throw convergence_error("lambda_min_bisect: no curvature sign change in [1e-8, 1e3]");
    while ((hi - lo) > 1e-6 * lo) {
        const double mid = std::sqrt(lo * hi);
        if (curvature(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

RecoherenceReport analyze(const bath::BathParams& bath_params,
                          const bath::QubitParams& qubit, const AnalyzeOptions& opts) {
    check_st(bath_params.s, bath_params.temperature);
    qubit.validate();
    const double sh = std::sinh(0.5 * qubit.omega0 / bath_params.temperature);
    return analyze_impl(bath_params, qubit, {1.0 / (sh * sh), 0.0}, opts);
}

RecoherenceReport analyze(const bath::BathParams& bath_params,
                          const bath::QubitParams& qubit,
                          const measurement::MeasurementScheme& scheme,
                          const AnalyzeOptions& opts) {
    check_st(bath_params.s, bath_params.temperature);
    const auto c = measurement::nnd_coefficients(scheme, qubit, bath_params.temperature);
    CorShape shape{(c.n1 * c.n1 + c.n2 * c.n2) / (c.d * c.d) - 1.0, c.n2 / c.d};
    return analyze_impl(bath_params, qubit, shape, opts);
}

ThresholdGrid lambda_min_grid(const std::vector<double>& s_values,
                              const std::vector<double>& t_values,
                              const bath::QubitParams& qubit, double omega_c) {
    ThresholdGrid g;
    g.s_values = s_values;
    g.t_values = t_values;
    g.lambda_min.reserve(s_values.size() * t_values.size());
    for (double s : s_values)
        for (double T : t_values)
            g.lambda_min.push_back(lambda_min(s, T, qubit, omega_c));
    return g;
}

} // namespace qdeph::recoherence
