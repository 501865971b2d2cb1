#include "qdeph/sweep.hpp"
#include "qdeph/errors.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <thread>

namespace qdeph::sweep {

namespace {

// Index-addressed worker pool; output slots fix the order, so results are
// identical for any thread count.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    const int spawn = std::min<std::size_t>(jobs, n);
    pool.reserve(spawn);
    for (int k = 0; k < spawn; ++k)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
}

const char* axis_name(VaryAxis v) { return v == VaryAxis::ohmicity ? "s" : "T"; }
const char* series_name(VaryAxis v) { return v == VaryAxis::ohmicity ? "T" : "s"; }

std::string opt_field(const std::optional<double>& v) {
    return v ? format_g12(*v) : std::string();
}

nlohmann::json opt_json(const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

} // namespace

std::vector<double> linspace(const GridSpec& g) {
    if (!(g.count >= 2) || !(g.min < g.max))
        throw domain_error("GridSpec: need count >= 2 and min < max");
    std::vector<double> v(g.count);
    for (int i = 0; i < g.count; ++i)
        v[i] = g.min + (g.max - g.min) * i / (g.count - 1);
    return v;
}

void SweepSpec::validate() const {
    qubit.validate();
    if (!(omega_c > 0.0))
        throw domain_error("SweepSpec: omega_c must be > 0");
    if (!(fixed_lambda >= 0.0))
        throw domain_error("SweepSpec: lambda must be >= 0");
    if (series.empty())
        throw domain_error("SweepSpec: series must not be empty");
    if (!(grid.count >= 2) || !(grid.min < grid.max))
        throw domain_error("SweepSpec: need grid count >= 2 and min < max");
    if (!(grid.min > 0.0))
        throw domain_error("SweepSpec: grid values must stay positive (s > 0, T > 0)");
    for (double v : series)
        if (!(v > 0.0))
            throw domain_error("SweepSpec: series values must be positive");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs) {
    spec.validate();
    const std::vector<double> xs = linspace(spec.grid);
    const std::size_t nx = xs.size(), ns = spec.series.size();
    std::vector<SweepRow> rows(nx * ns);

    parallel_for(nx * ns, jobs, [&](std::size_t idx) {
        const std::size_t is = idx / nx, ix = idx % nx;
        SweepRow& row = rows[idx];
        row.x = xs[ix];
        row.series_value = spec.series[is];
        row.lambda = spec.fixed_lambda;
        const double s = (spec.vary == VaryAxis::ohmicity) ? row.x : row.series_value;
        const double T = (spec.vary == VaryAxis::ohmicity) ? row.series_value : row.x;
        try {
            row.lambda_min = recoherence::lambda_min(s, T, spec.qubit, spec.omega_c);
            bath::BathParams bp{spec.fixed_lambda, s, T, spec.omega_c};
            const auto rep = recoherence::analyze(bp, spec.qubit, spec.analyze);
            row.t_star = rep.t_star;
            row.t_extr = rep.t_extr;
            row.gamma_extr = rep.gamma_extr;
            row.t_star_tot = rep.t_star_tot;
            row.rde_count = rep.rde_count;
            row.status = rep.truncated ? "truncated" : "ok";
        } catch (const std::exception& e) {
            row.status = std::string("error: ") + e.what();
        }
    });
    return rows;
}

std::vector<double> run_lambda_min_map_values(const std::vector<double>& s_grid,
                                              const std::vector<double>& t_grid,
                                              const bath::QubitParams& qubit,
                                              double omega_c, int jobs) {
    std::vector<double> vals(s_grid.size() * t_grid.size());
    parallel_for(vals.size(), jobs, [&](std::size_t idx) {
        const std::size_t is = idx / t_grid.size(), it = idx % t_grid.size();
        vals[idx] = recoherence::lambda_min(s_grid[is], t_grid[it], qubit, omega_c);
    });
    return vals;
}

std::string format_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_sweep(std::ostream& os, VaryAxis vary, const std::vector<SweepRow>& rows,
                 OutputFormat fmt) {
    if (fmt == OutputFormat::csv) {
        os << axis_name(vary) << ',' << series_name(vary)
           << ",lambda,lambda_min,t_star,t_extr,gamma_extr,t_star_tot,rde_count,status\n";
        for (const auto& r : rows) {
            os << format_g12(r.x) << ',' << format_g12(r.series_value) << ','
               << format_g12(r.lambda) << ',' << format_g12(r.lambda_min) << ','
               << opt_field(r.t_star) << ',' << opt_field(r.t_extr) << ','
               << opt_field(r.gamma_extr) << ',' << format_g12(r.t_star_tot) << ','
               << r.rde_count << ',' << r.status << '\n';
        }
        return;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{axis_name(vary), r.x},
                       {series_name(vary), r.series_value},
                       {"lambda", r.lambda},
                       {"lambda_min", r.lambda_min},
                       {"t_star", opt_json(r.t_star)},
                       {"t_extr", opt_json(r.t_extr)},
                       {"gamma_extr", opt_json(r.gamma_extr)},
                       {"t_star_tot", r.t_star_tot},
                       {"rde_count", r.rde_count},
                       {"status", r.status}});
    }
    os << arr.dump(2) << '\n';
}

void write_lambda_min_map(std::ostream& os, const recoherence::ThresholdGrid& grid,
                          OutputFormat fmt) {
    if (fmt == OutputFormat::csv) {
        os << "s,T,lambda_min\n";
        for (std::size_t is = 0; is < grid.s_values.size(); ++is)
            for (std::size_t it = 0; it < grid.t_values.size(); ++it)
                os << format_g12(grid.s_values[is]) << ',' << format_g12(grid.t_values[it])
                   << ',' << format_g12(grid.lambda_min[is * grid.t_values.size() + it])
                   << '\n';
        return;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t is = 0; is < grid.s_values.size(); ++is)
        for (std::size_t it = 0; it < grid.t_values.size(); ++it)
            arr.push_back({{"s", grid.s_values[is]},
                           {"T", grid.t_values[it]},
                           {"lambda_min", grid.lambda_min[is * grid.t_values.size() + it]}});
    os << arr.dump(2) << '\n';
}

void write_trajectory(std::ostream& os, const dynamics::Trajectory& tr, OutputFormat fmt) {
    if (fmt == OutputFormat::csv) {
        os << "t,gamma,gamma_cor,gamma_tot,chi,abs_sigma\n";
        for (std::size_t i = 0; i < tr.times.size(); ++i)
            os << format_g12(tr.times[i]) << ',' << format_g12(tr.gamma[i]) << ','
               << format_g12(tr.gamma_cor[i]) << ',' << format_g12(tr.gamma_tot[i]) << ','
               << format_g12(tr.chi[i]) << ',' << format_g12(tr.abs_sigma[i]) << '\n';
        return;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < tr.times.size(); ++i)
        arr.push_back({{"t", tr.times[i]},
                       {"gamma", tr.gamma[i]},
                       {"gamma_cor", tr.gamma_cor[i]},
                       {"gamma_tot", tr.gamma_tot[i]},
                       {"chi", tr.chi[i]},
                       {"abs_sigma", tr.abs_sigma[i]}});
    os << arr.dump(2) << '\n';
}

nlohmann::json report_to_json(const recoherence::RecoherenceReport& rep) {
    nlohmann::json intervals = nlohmann::json::array();
    for (const auto& iv : rep.intervals)
        intervals.push_back({iv.first, iv.second});
    return {{"t_star", opt_json(rep.t_star)},
            {"t_extr", opt_json(rep.t_extr)},
            {"gamma_extr", opt_json(rep.gamma_extr)},
            {"t_extr_first", opt_json(rep.t_extr_first)},
            {"gamma_extr_first", opt_json(rep.gamma_extr_first)},
            {"intervals", intervals},
            {"t_star_tot", rep.t_star_tot},
            {"rde_count", rep.rde_count},
            {"truncated", rep.truncated},
            {"t_horizon", rep.t_horizon}};
}

void write_report(std::ostream& os, const recoherence::RecoherenceReport& rep,
                  OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        os << report_to_json(rep).dump(2) << '\n';
        return;
    }
    os << "t_star,t_extr,gamma_extr,t_star_tot,rde_count,truncated\n";
    os << opt_field(rep.t_star) << ',' << opt_field(rep.t_extr) << ','
       << opt_field(rep.gamma_extr) << ',' << format_g12(rep.t_star_tot) << ','
       << rep.rde_count << ',' << (rep.truncated ? "true" : "false") << '\n';
}

std::vector<SweepSpec> preset_sweep_specs(const std::string& name,
                                          const bath::QubitParams& qubit) {
    std::vector<SweepSpec> specs;
    const std::vector<double> lambdas = {0.1, 1.0, 10.0};
    if (name == "fig4") {
        for (double lam : lambdas) {
            SweepSpec sp;
            sp.vary = VaryAxis::ohmicity;
            sp.grid = {0.05, 7.0, 200};
            sp.fixed_lambda = lam;
            sp.series = {0.1, 0.25, 0.5, 1.0, 2.0, 4.0};
            sp.qubit = qubit;
            specs.push_back(sp);
        }
        return specs;
    }
    if (name == "fig5") {
        for (double lam : lambdas) {
            SweepSpec sp;
            sp.vary = VaryAxis::temperature;
            sp.grid = {0.1, 4.0, 200};
            sp.fixed_lambda = lam;
            sp.series = {0.05, 0.5, 1.0, 1.5, 2.0, 3.0, 7.0};
            sp.qubit = qubit;
            specs.push_back(sp);
        }
        return specs;
    }
    throw domain_error("unknown sweep preset '" + name + "' (expected fig4 or fig5)");
}

std::vector<TrajectoryRun> preset_trajectory_runs(const std::string& name) {
    if (name == "fig2")
        return {{1.0, 1.0, 0.1, 20.0, 2000},
                {1.0, 1.0, 1.0, 20.0, 2000},
                {1.0, 1.0, 10.0, 20.0, 2000}};
    if (name == "fig3")
        return {{1.0, 0.05, 0.1, 8.0, 2000}, {1.0, 7.0, 4.0, 0.05, 2000}};
    throw domain_error("unknown trajectory preset '" + name + "' (expected fig2 or fig3)");
}

void preset_lambda_min_grids(std::vector<double>& s_grid, std::vector<double>& t_grid) {
    s_grid = linspace({0.25, 5.0, 200});
    t_grid = linspace({0.1, 4.0, 200});
}

void run_preset_sweep(const std::vector<SweepSpec>& specs, int jobs, std::ostream& os,
                      OutputFormat fmt) {
    std::vector<SweepRow> all;
    for (const auto& sp : specs) {
        auto rows = run_sweep(sp, jobs);
        all.insert(all.end(), rows.begin(), rows.end());
    }
    write_sweep(os, specs.empty() ? VaryAxis::ohmicity : specs.front().vary, all, fmt);
}

} // namespace qdeph::sweep
