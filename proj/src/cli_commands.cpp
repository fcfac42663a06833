#include "qsl/cli_commands.hpp"

#include "qsl/bounds.hpp"
#include "qsl/propagation.hpp"
#include "qsl/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>

namespace qsl::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kCsvHeader =
    "t,overlap,angle,h_mean,de,sqrt_h2,rhodot_op,rhodot_tr,rhodot_hs";

std::string output_path(const RunConfig& config, const std::string& name, const char* ext) {
    fs::create_directories(config.output.directory);
    return (fs::path(config.output.directory) / (name + ext)).string();
}

void append_row(std::string& csv, std::initializer_list<double> cells) {
    bool first = true;
    for (double c : cells) {
        if (!first) csv += ',';
        csv += to_g17(c);
        first = false;
    }
    csv += '\n';
}

struct SimulationOutput {
    std::string csv;
    std::string json;
};

SimulationOutput simulate_closed(const RunConfig& config, const std::string& name,
                                 const ScheduleDef& def, double tau, int steps) {
    const sched::HamiltonianSchedule h = sched::preset(def.preset_with_tau(tau));
    const ops::PureState psi0 = def.initial_state.realize(h.dim());
    const prop::Trajectory traj = prop::propagate_closed(h, psi0, steps);
    const prop::GeneratorBundle bundle = prop::build_generators(
        h, ops::Operator::unitary(traj.u_final()), ops::LogBranch::nonnegative);

    const bounds::ClosedObservables obs = bounds::closed_observables(h, traj);
    const bounds::NormTrajectory norms =
        bounds::schatten_norm_trajectory(bounds::closed_rho_dots(h, traj));

    SimulationOutput out;
    out.csv = std::string(kCsvHeader) + '\n';
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const double overlap =
            std::min(1.0, std::abs(traj.states.front().dot(traj.states[k])));
        append_row(out.csv, {traj.times[k], overlap, std::acos(overlap), obs.mean_signed[k],
                             obs.variance[k], obs.sqrt_second_moment[k], norms.op[k],
                             norms.tr[k], norms.hs[k]});
    }

    bounds::BoundReport report = bounds::closed_report(h, traj, bundle);
    if (def.family == "constant") {
        // Time-independent case: the static pair applies as well.
        auto static_pair = bounds::static_entries(h.at(0.0), psi0, tau);
        report.entries.insert(report.entries.begin(),
                              std::make_move_iterator(static_pair.begin()),
                              std::make_move_iterator(static_pair.end()));
    }

    const bounds::GeometryResult geom = bounds::geometry_pure(
        psi0, ops::PureState{traj.psi_final()});
    const bounds::EnergyStats stats = bounds::energy_stats(h, traj, &bundle);
    const bounds::NormAverages avg = bounds::average_norms(traj.times, norms);

    io::JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(1);
    w.key("id").value(name);
    w.key("command").value("simulate");
    w.key("kind").value("closed");
    w.key("hbar").value(config.hbar);
    w.key("schedule").value(h.label());
    w.key("tau").value(tau);
    w.key("steps").value(steps);
    w.key("scheme").value("midpoint_exponential");
    w.key("geometry").begin_object();
    w.key("overlap").value(geom.overlap);
    w.key("angle").value(geom.angle);
    w.key("kind").value("pure_overlap");
    w.end_object();
    w.key("energy_stats").begin_object();
    w.key("mean_initial").value(stats.mean_initial);
    w.key("transition").value(stats.transition);
    w.key("mean_instant").value(stats.mean_instant);
    w.key("sqrt_second_moment").value(stats.sqrt_second_moment);
    w.key("variance_avg").value(stats.variance_avg);
    w.key("generator_phase").value(stats.generator_phase);
    w.end_object();
    w.key("generator").begin_object();
    w.key("branch").value("nonnegative");
    w.key("branch_cut_degenerate").value(bundle.branch_cut_degenerate);
    w.end_object();
    w.key("norm_averages").begin_object();
    w.key("op").value(avg.op_avg);
    w.key("tr").value(avg.tr_avg);
    w.key("hs").value(avg.hs_avg);
    w.end_object();
    w.key("bounds").begin_array();
    for (const auto& e : report.entries) io::write_bound_entry(w, e);
    w.end_array();
    w.end_object();
    out.json = w.str() + '\n';
    return out;
}

SimulationOutput simulate_open(const RunConfig& config, const std::string& name,
                               const ScheduleDef& def, double tau, int steps) {
    const sched::HamiltonianSchedule h = sched::preset(def.preset_with_tau(tau));
    const sched::LiouvillianSchedule liouville =
        sched::dephasing_liouvillian(h, def.dephasing->realize());
    const ops::PureState psi0 = def.initial_state.realize(h.dim());
    const prop::Trajectory traj =
        prop::propagate_open(liouville, ops::DensityMatrix::pure(psi0), steps);

    const bounds::NormTrajectory norms = bounds::schatten_norm_trajectory(traj.rho_dots);
    const Matrix& rho0 = traj.rhos.front();

    SimulationOutput out;
    out.csv = std::string(kCsvHeader) + '\n';
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const Matrix hk = h.matrix_at(traj.times[k]);
        const Matrix& rho = traj.rhos[k];
        const double mean = (hk * rho).trace().real();
        const double second = std::max(0.0, (hk * hk * rho).trace().real());
        const double variance = std::sqrt(std::max(0.0, second - mean * mean));
        const double overlap =
            std::min(1.0, std::sqrt(std::max(0.0, (rho0 * rho).trace().real())));
        append_row(out.csv, {traj.times[k], overlap, std::acos(overlap), mean, variance,
                             std::sqrt(second), norms.op[k], norms.tr[k], norms.hs[k]});
    }

    const bounds::BoundReport report = bounds::open_report(traj);
    const bounds::GeometryResult geom = bounds::geometry_mixed(
        ops::DensityMatrix{rho0}, ops::DensityMatrix{traj.rho_final()});
    const bounds::NormAverages avg = bounds::average_norms(traj.times, norms);

    io::JsonWriter w;
    w.begin_object();
    w.key("schema_version").value(1);
    w.key("id").value(name);
    w.key("command").value("simulate");
    w.key("kind").value("open");
    w.key("hbar").value(config.hbar);
    w.key("schedule").value(liouville.label());
    w.key("tau").value(tau);
    w.key("steps").value(steps);
    w.key("scheme").value("rk4");
    w.key("geometry").begin_object();
    w.key("overlap").value(geom.overlap);
    w.key("angle").value(geom.angle);
    w.key("kind").value("mixed_trace");
    w.end_object();
    w.key("norm_averages").begin_object();
    w.key("op").value(avg.op_avg);
    w.key("tr").value(avg.tr_avg);
    w.key("hs").value(avg.hs_avg);
    w.end_object();
    w.key("bounds").begin_array();
    for (const auto& e : report.entries) io::write_bound_entry(w, e);
    w.end_array();
    w.end_object();
    out.json = w.str() + '\n';
    return out;
}

}  // namespace

int cmd_simulate(const RunConfig& config, const std::string& schedule_name, double tau,
                 int steps) {
    const auto it = config.schedules.find(schedule_name);
    if (it == config.schedules.end()) {
        throw ConfigError("simulate: schedule '" + schedule_name + "' not found in config");
    }
    if (!(tau > 0.0) || !std::isfinite(tau)) throw ConfigError("simulate: tau must be > 0");
    if (steps < 1) throw ConfigError("simulate: steps must be >= 1");

    set_hbar(config.hbar);
    const SimulationOutput out =
        it->second.dephasing
            ? simulate_open(config, schedule_name, it->second, tau, steps)
            : simulate_closed(config, schedule_name, it->second, tau, steps);

    if (config.output.csv) {
        io::write_text_file(output_path(config, schedule_name, ".csv"), out.csv);
    }
    if (config.output.json) {
        io::write_text_file(output_path(config, schedule_name, ".json"), out.json);
    }
    return 0;
}

int cmd_verify(const RunConfig& config) {
    set_hbar(config.hbar);

    std::vector<lab::ExperimentSpec> specs;
    if (config.experiments.has_value()) {
        specs = *config.experiments;
        if (specs.empty()) {
            std::cerr << "qsl verify: experiment list is empty; nothing to do\n";
            return 0;
        }
    } else {
        specs = lab::default_suite(config.seed);
    }

    bool all_expected_confirmed = true;
    for (const auto& spec : specs) {
        const lab::Verdict verdict = lab::run_experiment(spec);
        // Flush each verdict before moving on so partial results survive a
        // later failure.
        io::write_text_file(output_path(config, spec.id, ".json"),
                            io::verdict_json(spec, verdict));
        std::cerr << "experiment " << spec.id << ": " << lab::outcome_name(verdict.outcome)
                  << " (" << verdict.runtime_seconds << " s)\n";
        if (lab::expected_confirmed(spec.kind) &&
            verdict.outcome != lab::Outcome::confirmed) {
            all_expected_confirmed = false;
        }
    }
    return all_expected_confirmed ? 0 : 1;
}

int cmd_sweep(const RunConfig& config) {
    set_hbar(config.hbar);
    const SweepConfig sweep = config.sweep.value_or(SweepConfig{});

    sched::ScheduleSample sampler;
    sampler.seed = sweep.seed;
    sampler.family = sched::Family::random_fourier;
    sampler.dim_min = sweep.dim_min;
    sampler.dim_max = sweep.dim_max;
    sampler.tau_min = sweep.tau_min;
    sampler.tau_max = sweep.tau_max;

    const std::size_t n = static_cast<std::size_t>(sweep.samples);
    std::vector<bounds::BoundReport> reports(n);
    std::vector<double> taus(n, 0.0);
    std::vector<double> angles(n, 0.0);
    std::vector<Eigen::Index> dims(n, 0);

    parallel_for(n, [&](std::size_t k) {
        const sched::HamiltonianSchedule h = sampler.draw(k);
        const ops::PureState psi0 = sampler.draw_state(k, h.dim());
        const prop::Trajectory traj = prop::propagate_closed(h, psi0, sweep.steps);
        const prop::GeneratorBundle bundle = prop::build_generators(
            h, ops::Operator::unitary(traj.u_final()), ops::LogBranch::nonnegative);
        reports[k] = bounds::closed_report(h, traj, bundle);
        taus[k] = traj.tau;
        dims[k] = h.dim();
        angles[k] = bounds::geometry_pure(psi0, ops::PureState{traj.psi_final()}).angle;
    });

    std::string csv = "sample,seed,dim,tau,angle";
    if (!reports.empty()) {
        for (const auto& e : reports.front().entries) {
            csv += ',' + e.id + "_value," + e.id + "_ok";
        }
    }
    csv += '\n';
    for (std::size_t k = 0; k < n; ++k) {
        csv += std::to_string(k);
        csv += ',' + std::to_string(rng::mix(sweep.seed, 2 * k));
        csv += ',' + std::to_string(dims[k]);
        csv += ',' + to_g17(taus[k]);
        csv += ',' + to_g17(angles[k]);
        for (const auto& e : reports[k].entries) {
            csv += ',';
            csv += e.infinite ? "inf" : to_g17(e.value);
            csv += ',';
            csv += e.satisfied_by_actual_tau ? "1" : "0";
        }
        csv += '\n';
    }

    io::write_text_file(output_path(config, sweep.id, ".csv"), csv);
    return 0;
}

}  // namespace qsl::cli
