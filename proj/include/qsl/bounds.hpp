// bounds.hpp — Speed-limit bound calculators over trajectories and generator
// bundles. Each bound carries a fixed validity classification and a flag
// recording whether the trajectory's actual duration satisfies it.

#pragma once

#include "qsl/common.hpp"
#include "qsl/operator_core.hpp"
#include "qsl/propagation.hpp"
#include "qsl/schedules.hpp"

#include <array>
#include <string>
#include <vector>

namespace qsl::bounds {

// --------------------------------- Geometry -----------------------------------

enum class GeometryKind { pure_overlap, mixed_trace };

struct GeometryResult {
    double overlap = 1.0;  // in [0, 1]
    double angle = 0.0;    // arccos(overlap), in [0, pi/2]
    GeometryKind kind = GeometryKind::pure_overlap;
};

GeometryResult geometry_pure(const ops::PureState& a, const ops::PureState& b);

// Mixed-state angle arccos(sqrt(tr(ρ σ))). Note this is nonzero for identical
// mixed states (e.g. I/2 vs I/2 gives pi/4); that is the definition in use,
// not a defect.
GeometryResult geometry_mixed(const ops::DensityMatrix& a, const ops::DensityMatrix& b);

// ------------------------- Per-node closed observables -------------------------

// Energy functionals evaluated at every grid node of a closed trajectory.
struct ClosedObservables {
    std::vector<double> mean_initial;       // |⟨ψ0|H_t|ψ0⟩|
    std::vector<double> transition;         // |⟨ψ0|H_t|ψ_t⟩|
    std::vector<double> mean_instant;       // |⟨ψ_t|H_t|ψ_t⟩|
    std::vector<double> mean_signed;        // ⟨ψ_t|H_t|ψ_t⟩
    std::vector<double> sqrt_second_moment; // sqrt(⟨ψ_t|H_t²|ψ_t⟩)
    std::vector<double> variance;           // ΔE_t
};

ClosedObservables closed_observables(const sched::HamiltonianSchedule& h,
                                     const prop::Trajectory& traj);

// Composite trapezoid of per-node samples, divided by the grid span.
double time_average(const std::vector<double>& times, const std::vector<double>& values);

// Time averages over [0, τ] (composite trapezoid on the trajectory grid).
struct EnergyStats {
    double mean_initial = 0.0;
    double transition = 0.0;
    double mean_instant = 0.0;
    double sqrt_second_moment = 0.0;
    double variance_avg = 0.0;
    double generator_phase = 0.0;  // |⟨ψ0|Ω_τ|ψ0⟩| / τ, exact-generator branch as built
};

EnergyStats energy_stats(const sched::HamiltonianSchedule& h, const prop::Trajectory& traj,
                         const prop::GeneratorBundle* bundle = nullptr);

// ------------------------------ Norm trajectories ------------------------------

struct NormTrajectory {
    std::vector<double> op, tr, hs;
    std::vector<Eigen::VectorXd> sigma;  // full singular-value vectors per node
};

NormTrajectory schatten_norm_trajectory(const std::vector<Matrix>& rho_dots);

struct NormAverages {
    double op_avg = 0.0, tr_avg = 0.0, hs_avg = 0.0;  // (1/τ)∫ ‖ρ̇‖ dt
};

NormAverages average_norms(const std::vector<double>& times, const NormTrajectory& norms);

// ρ̇ at the grid nodes of a closed trajectory, from the unitary generator
// -(i/hbar)[H(t_k), |ψ_k⟩⟨ψ_k|].
std::vector<Matrix> closed_rho_dots(const sched::HamiltonianSchedule& h,
                                    const prop::Trajectory& traj);

NormAverages norm_averages(const prop::Trajectory& open_traj);
NormAverages norm_averages(const sched::HamiltonianSchedule& h, const prop::Trajectory& closed_traj);

// --------------------------------- Bound report --------------------------------

enum class BoundStatus { valid, invalid_derivation, valid_but_unphysical };

const char* status_name(BoundStatus s);

struct BoundEntry {
    std::string id;
    double value = 0.0;    // time units; +inf when the denominator vanishes
    bool infinite = false;
    BoundStatus status = BoundStatus::valid;
    bool satisfied_by_actual_tau = false;
    // inputs snapshot
    double tau = 0.0;
    double angle = 0.0;
    double denominator = 0.0;
};

struct BoundReport {
    std::vector<BoundEntry> entries;

    const BoundEntry* find(const std::string& id) const;
};

// Static (time-independent) pair: (pi*hbar/(2*dE), pi*hbar/(2*(e - e0))).
// Throws ZeroDenominator unless both arguments are > 0.
std::pair<double, double> static_bounds(double delta_e, double e_minus_e0);

// Static pair as report entries ("mt_static", "ml_static"), with ΔE and E - E0
// taken from psi0 under the fixed Hamiltonian h0.
std::array<BoundEntry, 2> static_entries(const ops::Operator& h0, const ops::PureState& psi0,
                                         double tau);

// hbar * L / avg|⟨ψ0|H_t|ψ0⟩|; classification: invalid_derivation.
BoundEntry ml_initial_energy_bound(const EnergyStats& stats, const GeometryResult& geom, double tau);

// hbar * L * τ / |⟨ψ0|Ω_τ|ψ0⟩| with the exact generator; classification: valid.
BoundEntry ml_exact_generator_bound(const EnergyStats& stats, const GeometryResult& geom, double tau);

// 4 hbar L² / (pi² avg|⟨ψ0|H_t|ψ_t⟩|); classification: valid_but_unphysical.
BoundEntry ml_transition_energy_bound(const EnergyStats& stats, const GeometryResult& geom, double tau);

// hbar sin²L / (2 avg|⟨ψ_t|H_t|ψ_t⟩|); classification: invalid_derivation.
BoundEntry ml_instant_energy_bound(const EnergyStats& stats, const GeometryResult& geom, double tau);

// hbar sin²L / (2 avg sqrt⟨H²⟩); classification: valid_but_unphysical.
BoundEntry ml_second_moment_bound(const EnergyStats& stats, const GeometryResult& geom, double tau);

// hbar sin²L / (sqrt(2) avg ΔE); the MT bound; classification: valid.
BoundEntry mt_variance_bound(const EnergyStats& stats, const GeometryResult& geom, double tau);

// sin²L / Λ for Λ ∈ {op, tr, hs} ("qsl_op_norm", "qsl_tr_norm", "qsl_hs_norm").
// The hs entry is the MT-type one (valid); op and tr carry
// valid_but_unphysical.
std::array<BoundEntry, 3> schatten_norm_bounds(const NormAverages& norms,
                                               const GeometryResult& geom, double tau);

// The op-norm entry: Λ_op is the smallest average, so 1/Λ_op is the largest of
// the three norm bounds.
BoundEntry sharpest_norm_bound(const NormAverages& norms, const GeometryResult& geom, double tau);

// Trace norm of H|ψ⟩⟨ψ| next to the first two moments of H in ψ. The trace
// norm always equals sqrt_second_moment; it equals |mean| only at zero
// variance.
struct TraceNormMoments {
    double trace_norm = 0.0;
    double mean = 0.0;
    double sqrt_second_moment = 0.0;
};

TraceNormMoments trace_norm_pure_product(const ops::Operator& h, const ops::PureState& psi);

// Full report for a closed trajectory: all pure-state bounds plus the norm
// bounds of the induced unitary ρ̇.
BoundReport closed_report(const sched::HamiltonianSchedule& h, const prop::Trajectory& traj,
                          const prop::GeneratorBundle& bundle);

// Report for an open trajectory: mixed geometry plus the norm bounds.
BoundReport open_report(const prop::Trajectory& traj);

}  // namespace qsl::bounds
