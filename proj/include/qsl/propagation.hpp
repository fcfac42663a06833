// propagation.hpp — Numerically exact time-ordered propagation, Magnus-series
// construction, the un-time-ordered generator, and trajectory recording.

#pragma once

#include "qsl/common.hpp"
#include "qsl/operator_core.hpp"
#include "qsl/schedules.hpp"

#include <vector>

namespace qsl::prop {

enum class Scheme { midpoint_exponential, rk4 };

// Uniform time grid 0 = t_0 < ... < t_N = τ with states recorded at every
// node. Closed trajectories carry pure states and accumulated propagators;
// open trajectories carry density matrices and the recorded ρ̇ at each node.
struct Trajectory {
    Scheme scheme = Scheme::midpoint_exponential;
    bool closed = true;
    double tau = 0.0;
    int steps = 0;

    std::vector<double> times;

    std::vector<Vector> states;       // closed
    std::vector<Matrix> propagators;  // closed

    std::vector<Matrix> rhos;      // open
    std::vector<Matrix> rho_dots;  // open

    const Vector& psi_final() const { return states.back(); }
    const Matrix& u_final() const { return propagators.back(); }
    const Matrix& rho_final() const { return rhos.back(); }
};

// Midpoint-exponential scheme: U ← exp(-(i/hbar) H(t + dt/2) dt) U, global
// error O(dt²), unitary to machine precision by construction.
Trajectory propagate_closed(const sched::HamiltonianSchedule& h, const ops::PureState& psi0,
                            int steps);

// Classical RK4 on ρ̇ = L(t, ρ); the trace is renormalized whenever drift
// exceeds tol::trace_drift. ρ̇ is recorded at every grid node.
Trajectory propagate_open(const sched::LiouvillianSchedule& l, const ops::DensityMatrix& rho0,
                          int steps);

// The un-time-ordered generator (plain integral of H), the first two Magnus
// terms, and the exact generator from the unitary log of U_τ.
struct GeneratorBundle {
    ops::Operator j_naive;      // ∫ H dt (energy · time units)
    ops::Operator omega1;       // identical quadrature to j_naive
    ops::Operator omega2;       // -(i/2 hbar) ∫∫_{t2<t1} [H(t1), H(t2)]
    ops::Operator omega_exact;  // hbar · eigenphases of U_τ, requested branch
    ops::LogBranch branch = ops::LogBranch::principal;
    bool branch_cut_degenerate = false;
};

// Simpson node count for the single integrals; also the outer grid size of the
// triangular double integral (inner grids truncate to the outer nodes).
inline constexpr int kQuadratureNodes = 129;

GeneratorBundle build_generators(const sched::HamiltonianSchedule& h, const ops::Operator& u_tau,
                                 ops::LogBranch branch);

// Both sides of the spectral-overlap shortcut that replaces the time-ordered
// propagator with exp of the plain integral of H: the true |⟨ψ0|U_τ|ψ0⟩|
// against |Σ_n |⟨ψ0|n⟩|² e^{-i J_n}| from the eigenpairs of ∫H dt / hbar.
// The two agree only when {H(t)} commute at all times.
struct OverlapComparison {
    double time_ordered = 0.0;    // |⟨ψ0|U_τ|ψ0⟩|
    double naive_spectral = 0.0;  // |Σ_n |⟨ψ0|n⟩|² e^{-i J_n}|
};

OverlapComparison overlap_naive_vs_exact(const sched::HamiltonianSchedule& h,
                                         const ops::PureState& psi0, int steps);

}  // namespace qsl::prop
