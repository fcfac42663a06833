#include "qsl/verify_lab.hpp"

#include "qsl/propagation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace qsl::lab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// A violation smaller than this is indistinguishable from stacked roundoff;
// outcomes only flip to refuted beyond it.
constexpr double kRefuteFloor = 1e-6;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

sched::ScheduleSample sampler_for(const ExperimentSpec& spec) {
    sched::ScheduleSample s;
    s.seed = spec.seed;
    s.family = spec.family;
    s.dim_min = spec.dim_min;
    s.dim_max = spec.dim_max;
    s.tau_min = spec.tau_min;
    s.tau_max = spec.tau_max;
    return s;
}

std::string sample_note(std::size_t k, Eigen::Index dim, double tau) {
    return "sample=" + std::to_string(k) + " dim=" + std::to_string(dim) +
           " tau=" + to_g17(tau);
}

sched::PresetSpec default_witness() {
    sched::PresetSpec p;
    p.family = "landau_zener";
    p.tau = 1.0;
    p.params = {2.0, 1.0};
    return p;
}

sched::PresetSpec default_control() {
    sched::PresetSpec p;
    p.family = "constant";
    p.tau = 1.0;
    p.h0 = ops::pauli_z();
    return p;
}

}  // namespace

const char* kind_name(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::overlap_identity: return "overlap_identity";
        case ExperimentKind::trace_norm_identity: return "trace_norm_identity";
        case ExperimentKind::looseness_ordering: return "looseness_ordering";
        case ExperimentKind::mt_reduction: return "mt_reduction";
        case ExperimentKind::bound_validity: return "bound_validity";
        case ExperimentKind::ml_empirical: return "ml_empirical";
    }
    return "unknown";
}

ExperimentKind kind_from_name(const std::string& name) {
    for (ExperimentKind k :
         {ExperimentKind::overlap_identity, ExperimentKind::trace_norm_identity,
          ExperimentKind::looseness_ordering, ExperimentKind::mt_reduction,
          ExperimentKind::bound_validity, ExperimentKind::ml_empirical}) {
        if (name == kind_name(k)) return k;
    }
    throw ConfigError("kind_from_name: unknown experiment kind '" + name + "'");
}

bool expected_confirmed(ExperimentKind k) { return k != ExperimentKind::ml_empirical; }

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::confirmed: return "confirmed";
        case Outcome::refuted: return "refuted";
        case Outcome::inconclusive: return "inconclusive";
    }
    return "unknown";
}

ExperimentSpec resolve_defaults(ExperimentSpec spec) {
    if (spec.tolerance < 0) spec.tolerance = spec.default_tolerance();
    if (spec.kind == ExperimentKind::overlap_identity) {
        if (!spec.witness) spec.witness = default_witness();
        if (!spec.control) spec.control = default_control();
    }
    return spec;
}

double ExperimentSpec::default_tolerance() const {
    switch (kind) {
        case ExperimentKind::overlap_identity: return 1e-3;   // witness gap
        case ExperimentKind::trace_norm_identity: return 1e-10;
        case ExperimentKind::looseness_ordering: return 1e-12;
        case ExperimentKind::mt_reduction: return 1e-8;
        case ExperimentKind::bound_validity: return 1e-9;     // absolute slack on value ≤ τ
        case ExperimentKind::ml_empirical: return 1e-9;
    }
    return 1e-9;
}

// ------------------------------ overlap identity -------------------------------

Verdict overlap_identity_experiment(const ExperimentSpec& spec) {
    Timer timer;
    Verdict v;
    v.id = spec.id;
    v.claim =
        "exp(-(i/hbar) integral of H) reproduces the time-ordered survival amplitude "
        "only for commuting drives; a noncommuting witness separates the two";

    const ExperimentSpec resolved = resolve_defaults(spec);
    const double gap_tol = resolved.tolerance;
    constexpr double control_tol = 1e-9;

    const sched::HamiltonianSchedule witness = sched::preset(*resolved.witness);
    const sched::HamiltonianSchedule control = sched::preset(*resolved.control);

    const prop::OverlapComparison wit = prop::overlap_naive_vs_exact(
        witness, ops::ket_basis(witness.dim(), 0), resolved.steps);
    const prop::OverlapComparison ctl = prop::overlap_naive_vs_exact(
        control, ops::ket_basis(control.dim(), 0), resolved.steps);

    const double gap = std::abs(wit.time_ordered - wit.naive_spectral);
    const double control_gap = std::abs(ctl.time_ordered - ctl.naive_spectral);

    v.witness["witness_time_ordered"] = wit.time_ordered;
    v.witness["witness_naive_spectral"] = wit.naive_spectral;
    v.witness["witness_gap"] = gap;
    v.witness["control_gap"] = control_gap;

    if (gap > gap_tol && control_gap <= control_tol) {
        v.outcome = Outcome::confirmed;
    } else {
        v.outcome = Outcome::inconclusive;
        if (gap <= gap_tol) v.notes.push_back("witness gap below tolerance " + to_g17(gap_tol));
        if (control_gap > control_tol) {
            v.notes.push_back("commuting control gap above " + to_g17(control_tol));
        }
    }
    v.runtime_seconds = timer.seconds();
    return v;
}

// ----------------------------- trace-norm identity -----------------------------

Verdict trace_norm_identity_experiment(const ExperimentSpec& spec) {
    Timer timer;
    Verdict v;
    v.id = spec.id;
    v.claim =
        "the trace norm of H|psi><psi| equals sqrt(<H^2>) and differs from <H> whenever "
        "the energy variance is nonzero";

    const double identity_tol = spec.tolerance < 0 ? spec.default_tolerance() : spec.tolerance;
    constexpr double witness_gap_min = 0.1;

    const bounds::TraceNormMoments wit = bounds::trace_norm_pure_product(
        ops::Operator::hermitian(ops::pauli_z()), ops::ket_plus());
    const double witness_gap = std::abs(wit.trace_norm - std::abs(wit.mean));
    const double witness_residual = std::abs(wit.trace_norm - wit.sqrt_second_moment);

    const std::size_t n = static_cast<std::size_t>(spec.samples);
    std::vector<double> residuals(n, 0.0);
    parallel_for(n, [&](std::size_t k) {
        std::mt19937_64 gen(rng::mix(spec.seed, k));
        const int dim = rng::uniform_int(gen, spec.dim_min, spec.dim_max);
        const Matrix h = rng::hermitian_uniform(gen, dim);
        const ops::PureState psi{rng::gaussian_state(gen, dim)};
        const bounds::TraceNormMoments m =
            bounds::trace_norm_pure_product(ops::Operator::hermitian(h), psi);
        residuals[k] = std::abs(m.trace_norm - m.sqrt_second_moment);
    });
    double max_residual = witness_residual;
    std::size_t worst = n;
    for (std::size_t k = 0; k < n; ++k) {
        if (residuals[k] > max_residual) {
            max_residual = residuals[k];
            worst = k;
        }
    }

    v.witness["witness_trace_norm"] = wit.trace_norm;
    v.witness["witness_mean"] = wit.mean;
    v.witness["witness_sqrt_second_moment"] = wit.sqrt_second_moment;
    v.witness["witness_gap"] = witness_gap;
    v.witness["max_identity_residual"] = max_residual;
    v.witness["samples"] = static_cast<double>(n);
    if (worst < n) v.notes.push_back("worst residual at sample=" + std::to_string(worst));

    if (witness_gap > witness_gap_min && max_residual <= identity_tol) {
        v.outcome = Outcome::confirmed;
    } else if (max_residual > kRefuteFloor) {
        v.outcome = Outcome::refuted;  // would mean the corrected identity itself fails
    } else {
        v.outcome = Outcome::inconclusive;
    }
    v.runtime_seconds = timer.seconds();
    return v;
}

// ----------------------------- looseness ordering ------------------------------

Verdict looseness_ordering_experiment(const ExperimentSpec& spec) {
    Timer timer;
    Verdict v;
    v.id = spec.id;
    v.claim = "the second-moment bound never exceeds the variance (MT) bound";

    const double tol = spec.tolerance < 0 ? spec.default_tolerance() : spec.tolerance;
    const sched::ScheduleSample sampler = sampler_for(spec);
    const std::size_t n = static_cast<std::size_t>(spec.samples);

    struct Rec {
        bool skipped = true;
        double margin = kInf;
        double second_moment = 0.0, variance = 0.0, tau = 0.0;
        Eigen::Index dim = 0;
    };
    std::vector<Rec> recs(n);

    parallel_for(n, [&](std::size_t k) {
        const sched::HamiltonianSchedule h = sampler.draw(k);
        const ops::PureState psi0 = sampler.draw_state(k, h.dim());
        const prop::Trajectory traj = prop::propagate_closed(h, psi0, spec.steps);
        const bounds::EnergyStats stats = bounds::energy_stats(h, traj);
        const bounds::GeometryResult geom =
            bounds::geometry_pure(psi0, ops::PureState{traj.psi_final()});
        const bounds::BoundEntry second =
            bounds::ml_second_moment_bound(stats, geom, traj.tau);
        const bounds::BoundEntry variance = bounds::mt_variance_bound(stats, geom, traj.tau);
        Rec& r = recs[k];
        r.tau = traj.tau;
        r.dim = h.dim();
        if (second.infinite || variance.infinite) return;  // degenerate sample
        r.skipped = false;
        r.margin = variance.value - second.value;
        r.second_moment = second.value;
        r.variance = variance.value;
    });

    double min_margin = kInf;
    std::size_t argmin = n;
    int used = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (recs[k].skipped) {
            ++v.skipped_samples;
            continue;
        }
        ++used;
        if (recs[k].margin < min_margin) {
            min_margin = recs[k].margin;
            argmin = k;
        }
    }

    v.witness["samples_used"] = used;
    v.witness["min_margin"] = min_margin;
    if (argmin < n) {
        v.witness["min_margin_second_moment"] = recs[argmin].second_moment;
        v.witness["min_margin_variance"] = recs[argmin].variance;
        v.notes.push_back("min margin at " +
                          sample_note(argmin, recs[argmin].dim, recs[argmin].tau));
    }

    if (used == 0) {
        v.outcome = Outcome::inconclusive;
        v.notes.push_back("all samples degenerate");
    } else if (min_margin >= -tol) {
        v.outcome = Outcome::confirmed;
    } else if (min_margin < -kRefuteFloor) {
        v.outcome = Outcome::refuted;
    } else {
        v.outcome = Outcome::inconclusive;
    }
    v.runtime_seconds = timer.seconds();
    return v;
}

// -------------------------------- MT reduction ---------------------------------

Verdict mt_reduction_experiment(const ExperimentSpec& spec) {
    Timer timer;
    Verdict v;
    v.id = spec.id;
    v.claim =
        "for pure unitary dynamics the hs-norm speed equals sqrt(2)*dE/hbar pointwise, "
        "its time-averaged bound coincides with the MT bound, and sigma(rho_dot) is a "
        "degenerate pair";

    const double tol = spec.tolerance < 0 ? spec.default_tolerance() : spec.tolerance;
    const sched::ScheduleSample sampler = sampler_for(spec);
    const std::size_t n = static_cast<std::size_t>(spec.samples);

    struct Rec {
        bool skipped = true;
        double rel_gap = 0.0;      // |Λ_hs - sqrt(2)ΔE_avg/hbar| / Λ_hs
        double bound_gap = 0.0;    // |hs bound - MT bound| / max(MT bound, 1)
        double sigma_defect = 0.0; // worst node deviation from (ΔE/ħ, ΔE/ħ, 0, ...)
        double tau = 0.0;
        Eigen::Index dim = 0;
    };
    std::vector<Rec> recs(n);

    parallel_for(n, [&](std::size_t k) {
        const sched::HamiltonianSchedule h = sampler.draw(k);
        const ops::PureState psi0 = sampler.draw_state(k, h.dim());
        const prop::Trajectory traj = prop::propagate_closed(h, psi0, spec.steps);
        const bounds::ClosedObservables obs = bounds::closed_observables(h, traj);
        const bounds::NormTrajectory norms =
            bounds::schatten_norm_trajectory(bounds::closed_rho_dots(h, traj));
        const bounds::NormAverages avg = bounds::average_norms(traj.times, norms);
        Rec& r = recs[k];
        r.tau = traj.tau;
        r.dim = h.dim();
        if (!(avg.hs_avg > 0.0)) return;  // stationary sample
        r.skipped = false;

        const double variance_avg = bounds::time_average(traj.times, obs.variance);
        r.rel_gap = std::abs(avg.hs_avg - std::sqrt(2.0) * variance_avg / hbar()) / avg.hs_avg;

        const bounds::GeometryResult geom =
            bounds::geometry_pure(psi0, ops::PureState{traj.psi_final()});
        bounds::EnergyStats stats;
        stats.variance_avg = variance_avg;
        const bounds::BoundEntry mt = bounds::mt_variance_bound(stats, geom, traj.tau);
        const bounds::BoundEntry hs = bounds::schatten_norm_bounds(avg, geom, traj.tau)[2];
        if (!mt.infinite && !hs.infinite) {
            r.bound_gap = std::abs(hs.value - mt.value) / std::max(mt.value, 1.0);
        }

        double defect = 0.0;
        for (std::size_t node = 0; node < norms.sigma.size(); ++node) {
            const double target = obs.variance[node] / hbar();
            const Eigen::VectorXd& sigma = norms.sigma[node];
            defect = std::max(defect, std::abs(sigma(0) - target));
            if (sigma.size() > 1) defect = std::max(defect, std::abs(sigma(1) - target));
            for (Eigen::Index i = 2; i < sigma.size(); ++i) {
                defect = std::max(defect, sigma(i));
            }
        }
        r.sigma_defect = defect;
    });

    double max_rel_gap = 0.0, max_bound_gap = 0.0, max_sigma_defect = 0.0;
    std::size_t worst = n;
    int used = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (recs[k].skipped) {
            ++v.skipped_samples;
            continue;
        }
        ++used;
        if (recs[k].rel_gap > max_rel_gap) {
            max_rel_gap = recs[k].rel_gap;
            worst = k;
        }
        max_bound_gap = std::max(max_bound_gap, recs[k].bound_gap);
        max_sigma_defect = std::max(max_sigma_defect, recs[k].sigma_defect);
    }

    v.witness["samples_used"] = used;
    v.witness["max_rel_gap"] = max_rel_gap;
    v.witness["max_bound_gap"] = max_bound_gap;
    v.witness["max_sigma_defect"] = max_sigma_defect;
    if (worst < n) {
        v.notes.push_back("worst hs gap at " + sample_note(worst, recs[worst].dim, recs[worst].tau));
    }

    const double worst_metric = std::max({max_rel_gap, max_bound_gap, max_sigma_defect});
    if (used == 0) {
        v.outcome = Outcome::inconclusive;
        v.notes.push_back("all samples degenerate");
    } else if (worst_metric < tol) {
        v.outcome = Outcome::confirmed;
    } else if (worst_metric > 1e-3) {
        v.outcome = Outcome::refuted;
    } else {
        v.outcome = Outcome::inconclusive;
    }
    v.runtime_seconds = timer.seconds();
    return v;
}

// -------------------------------- bound validity -------------------------------

Verdict bound_validity_experiment(const ExperimentSpec& spec) {
    Timer timer;
    Verdict v;
    v.id = spec.id;
    v.claim =
        "transition-energy, variance, and Schatten-norm bounds are satisfied along "
        "propagated trajectories; exact-generator violations are logged with branch "
        "diagnostics";

    const double abs_tol = spec.tolerance < 0 ? spec.default_tolerance() : spec.tolerance;
    const sched::ScheduleSample sampler = sampler_for(spec);
    const std::size_t n = static_cast<std::size_t>(spec.samples);

    struct Rec {
        bool degenerate = false;
        double worst_margin = -kInf;        // max over asserted bounds of value - τ
        std::string worst_id;
        double generator_margin = -kInf;    // exact-generator value - τ
        double generator_value = 0.0, generator_phase = 0.0, angle = 0.0;
        bool branch_degenerate = false;
        double tau = 0.0;
        Eigen::Index dim = 0;
    };
    std::vector<Rec> recs(n);

    parallel_for(n, [&](std::size_t k) {
        const sched::HamiltonianSchedule h = sampler.draw(k);
        const ops::PureState psi0 = sampler.draw_state(k, h.dim());
        const prop::Trajectory traj = prop::propagate_closed(h, psi0, spec.steps);
        const prop::GeneratorBundle bundle = prop::build_generators(
            h, ops::Operator::unitary(traj.u_final()), ops::LogBranch::nonnegative);
        const bounds::EnergyStats stats = bounds::energy_stats(h, traj, &bundle);
        const bounds::GeometryResult geom =
            bounds::geometry_pure(psi0, ops::PureState{traj.psi_final()});
        const bounds::NormAverages norms = bounds::norm_averages(h, traj);

        Rec& r = recs[k];
        r.tau = traj.tau;
        r.dim = h.dim();
        r.angle = geom.angle;
        r.branch_degenerate = bundle.branch_cut_degenerate;
        r.generator_phase = stats.generator_phase;

        const double slack = traj.tau * tol::bound_satisfied_rel + abs_tol;

        std::vector<bounds::BoundEntry> asserted;
        asserted.push_back(bounds::ml_transition_energy_bound(stats, geom, traj.tau));
        asserted.push_back(bounds::mt_variance_bound(stats, geom, traj.tau));
        for (auto& e : bounds::schatten_norm_bounds(norms, geom, traj.tau)) {
            asserted.push_back(std::move(e));
        }
        for (const auto& e : asserted) {
            if (e.infinite) {
                r.degenerate = true;
                continue;
            }
            const double margin = e.value - traj.tau - slack;
            if (margin > r.worst_margin) {
                r.worst_margin = margin;
                r.worst_id = e.id;
            }
        }

        const bounds::BoundEntry generator =
            bounds::ml_exact_generator_bound(stats, geom, traj.tau);
        if (!generator.infinite) {
            r.generator_margin = generator.value - traj.tau - slack;
            r.generator_value = generator.value;
        } else {
            r.degenerate = true;
        }
    });

    int used = 0, violations = 0, generator_violations = 0;
    double worst_margin = -kInf, worst_generator_margin = -kInf;
    std::size_t worst_k = n, worst_gen_k = n;
    for (std::size_t k = 0; k < n; ++k) {
        const Rec& r = recs[k];
        if (r.degenerate) ++v.skipped_samples;
        ++used;
        if (r.worst_margin > 0.0) ++violations;
        if (r.worst_margin > worst_margin) {
            worst_margin = r.worst_margin;
            worst_k = k;
        }
        if (r.generator_margin > 0.0) {
            ++generator_violations;
            if (r.generator_margin > worst_generator_margin) {
                worst_generator_margin = r.generator_margin;
                worst_gen_k = k;
            }
            if (generator_violations <= 10) {
                v.notes.push_back(
                    "exact-generator violation at " + sample_note(k, r.dim, r.tau) +
                    " value=" + to_g17(r.generator_value) + " angle=" + to_g17(r.angle) +
                    " phase_rate=" + to_g17(r.generator_phase) +
                    " branch=nonnegative branch_cut_degenerate=" +
                    (r.branch_degenerate ? "true" : "false"));
            }
        }
    }

    v.witness["samples_used"] = used;
    v.witness["violations"] = violations;
    v.witness["worst_margin"] = worst_margin;
    v.witness["generator_violations"] = generator_violations;
    if (worst_k < n) {
        v.notes.push_back("tightest asserted bound (" + recs[worst_k].worst_id + ") at " +
                          sample_note(worst_k, recs[worst_k].dim, recs[worst_k].tau) +
                          " margin=" + to_g17(recs[worst_k].worst_margin));
    }
    if (worst_gen_k < n) {
        v.witness["worst_generator_margin"] = worst_generator_margin;
    }

    if (violations == 0) {
        v.outcome = Outcome::confirmed;
    } else if (worst_margin > kRefuteFloor) {
        v.outcome = Outcome::refuted;
    } else {
        v.outcome = Outcome::inconclusive;
    }
    v.runtime_seconds = timer.seconds();
    return v;
}

// ------------------------------ empirical survey -------------------------------

Verdict ml_empirical_experiment(const ExperimentSpec& spec) {
    Timer timer;
    Verdict v;
    v.id = spec.id;
    v.claim =
        "survey: does the initial-mean-energy bound (whose derivation is broken) fail "
        "numerically on random trajectories?";

    const double abs_tol = spec.tolerance < 0 ? spec.default_tolerance() : spec.tolerance;
    const sched::ScheduleSample sampler = sampler_for(spec);
    const std::size_t n = static_cast<std::size_t>(spec.samples);

    struct Rec {
        bool skipped = true;
        double margin = -kInf;  // value - τ - slack
        double value = 0.0, tau = 0.0;
        Eigen::Index dim = 0;
    };
    std::vector<Rec> recs(n);

    parallel_for(n, [&](std::size_t k) {
        const sched::HamiltonianSchedule h = sampler.draw(k);
        const ops::PureState psi0 = sampler.draw_state(k, h.dim());
        const prop::Trajectory traj = prop::propagate_closed(h, psi0, spec.steps);
        const bounds::EnergyStats stats = bounds::energy_stats(h, traj);
        const bounds::GeometryResult geom =
            bounds::geometry_pure(psi0, ops::PureState{traj.psi_final()});
        const bounds::BoundEntry e = bounds::ml_initial_energy_bound(stats, geom, traj.tau);
        Rec& r = recs[k];
        r.tau = traj.tau;
        r.dim = h.dim();
        if (e.infinite) return;
        r.skipped = false;
        r.value = e.value;
        r.margin = e.value - traj.tau - (traj.tau * tol::bound_satisfied_rel + abs_tol);
    });

    int used = 0, violations = 0;
    double worst_margin = -kInf;
    std::size_t worst = n;
    for (std::size_t k = 0; k < n; ++k) {
        if (recs[k].skipped) {
            ++v.skipped_samples;
            continue;
        }
        ++used;
        if (recs[k].margin > 0.0) {
            ++violations;
            if (violations <= 10) {
                v.notes.push_back("violation at " + sample_note(k, recs[k].dim, recs[k].tau) +
                                  " value=" + to_g17(recs[k].value));
            }
        }
        if (recs[k].margin > worst_margin) {
            worst_margin = recs[k].margin;
            worst = k;
        }
    }

    v.witness["samples_used"] = used;
    v.witness["violations"] = violations;
    v.witness["violation_fraction"] = used ? static_cast<double>(violations) / used : 0.0;
    v.witness["worst_margin"] = worst_margin;
    if (worst < n) {
        v.notes.push_back("worst margin at " + sample_note(worst, recs[worst].dim, recs[worst].tau));
    }

    // A found violation refutes universal validity; absence of one proves
    // nothing, so the outcome stays inconclusive by design.
    if (violations > 0 && worst_margin > kRefuteFloor) {
        v.outcome = Outcome::refuted;
    } else {
        v.outcome = Outcome::inconclusive;
    }
    v.runtime_seconds = timer.seconds();
    return v;
}

Verdict run_experiment(const ExperimentSpec& spec) {
    switch (spec.kind) {
        case ExperimentKind::overlap_identity: return overlap_identity_experiment(spec);
        case ExperimentKind::trace_norm_identity: return trace_norm_identity_experiment(spec);
        case ExperimentKind::looseness_ordering: return looseness_ordering_experiment(spec);
        case ExperimentKind::mt_reduction: return mt_reduction_experiment(spec);
        case ExperimentKind::bound_validity: return bound_validity_experiment(spec);
        case ExperimentKind::ml_empirical: return ml_empirical_experiment(spec);
    }
    throw ConfigError("run_experiment: unknown experiment kind");
}

std::vector<ExperimentSpec> default_suite(std::uint64_t base_seed) {
    std::vector<ExperimentSpec> suite;
    const std::pair<const char*, ExperimentKind> entries[] = {
        {"overlap-identity", ExperimentKind::overlap_identity},
        {"trace-norm-identity", ExperimentKind::trace_norm_identity},
        {"looseness-ordering", ExperimentKind::looseness_ordering},
        {"mt-reduction", ExperimentKind::mt_reduction},
        {"bound-validity", ExperimentKind::bound_validity},
    };
    std::uint64_t idx = 0;
    for (const auto& [id, kind] : entries) {
        ExperimentSpec spec;
        spec.id = id;
        spec.kind = kind;
        spec.seed = rng::mix(base_seed, idx++);
        suite.push_back(std::move(spec));
    }
    return suite;
}

}  // namespace qsl::lab
