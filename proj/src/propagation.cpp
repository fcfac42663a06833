#include "qsl/propagation.hpp"

#include <cmath>

namespace qsl::prop {

namespace {

void require_steps(int steps, const char* where) {
    if (steps < 1) throw InvalidStepCount(std::string(where) + ": steps must be >= 1");
}

// Composite Simpson over [0, tau] with an odd node count.
Matrix simpson_integral(const sched::HamiltonianSchedule& h, int nodes) {
    const double step = h.tau() / static_cast<double>(nodes - 1);
    Matrix acc = h.matrix_at(0.0) + h.matrix_at(h.tau());
    for (int j = 1; j < nodes - 1; ++j) {
        const double w = (j % 2 == 1) ? 4.0 : 2.0;
        acc += w * h.matrix_at(static_cast<double>(j) * step);
    }
    return (step / 3.0) * acc;
}

}  // namespace

Trajectory propagate_closed(const sched::HamiltonianSchedule& h, const ops::PureState& psi0,
                            int steps) {
    require_steps(steps, "propagate_closed");
    if (psi0.dim() != h.dim()) {
        throw DimensionMismatch("propagate_closed: state and schedule dimensions differ");
    }

    const double dt = h.tau() / static_cast<double>(steps);

    Trajectory traj;
    traj.scheme = Scheme::midpoint_exponential;
    traj.closed = true;
    traj.tau = h.tau();
    traj.steps = steps;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    traj.propagators.reserve(steps + 1);

    Matrix u = Matrix::Identity(h.dim(), h.dim());
    traj.times.push_back(0.0);
    traj.states.push_back(psi0.amp);
    traj.propagators.push_back(u);

    for (int k = 0; k < steps; ++k) {
        const double t_mid = (static_cast<double>(k) + 0.5) * dt;
        const ops::Operator u_step = ops::expm_skew_hermitian(h.at(t_mid), dt / hbar());
        u = u_step.mat() * u;
        traj.times.push_back(static_cast<double>(k + 1) * dt);
        traj.states.push_back(u * psi0.amp);
        traj.propagators.push_back(u);
    }
    traj.times.back() = h.tau();
    return traj;
}

Trajectory propagate_open(const sched::LiouvillianSchedule& l, const ops::DensityMatrix& rho0,
                          int steps) {
    require_steps(steps, "propagate_open");
    if (rho0.dim() != l.dim()) {
        throw DimensionMismatch("propagate_open: state and schedule dimensions differ");
    }

    const double dt = l.tau() / static_cast<double>(steps);

    Trajectory traj;
    traj.scheme = Scheme::rk4;
    traj.closed = false;
    traj.tau = l.tau();
    traj.steps = steps;
    traj.times.reserve(steps + 1);
    traj.rhos.reserve(steps + 1);
    traj.rho_dots.reserve(steps + 1);

    Matrix rho = rho0.mat;
    traj.times.push_back(0.0);
    traj.rhos.push_back(rho);
    traj.rho_dots.push_back(l.rho_dot(0.0, rho));

    for (int k = 0; k < steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        const Matrix& k1 = traj.rho_dots.back();  // L at the current node
        const Matrix k2 = l.rho_dot(t + 0.5 * dt, rho + (0.5 * dt) * k1);
        const Matrix k3 = l.rho_dot(t + 0.5 * dt, rho + (0.5 * dt) * k2);
        const Matrix k4 = l.rho_dot(t + dt, rho + dt * k3);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const double tr = rho.trace().real();
        if (std::abs(tr - 1.0) > tol::trace_drift && tr != 0.0) {
            rho /= tr;
        }

        const double t_next = static_cast<double>(k + 1) * dt;
        traj.times.push_back(t_next);
        traj.rhos.push_back(rho);
        traj.rho_dots.push_back(l.rho_dot(t_next, rho));
    }
    traj.times.back() = l.tau();
    return traj;
}

GeneratorBundle build_generators(const sched::HamiltonianSchedule& h, const ops::Operator& u_tau,
                                 ops::LogBranch branch) {
    GeneratorBundle bundle;

    // Single integral: composite Simpson.
    Matrix j_naive = simpson_integral(h, kQuadratureNodes);
    bundle.j_naive = ops::Operator::hermitian(j_naive);
    bundle.omega1 = bundle.j_naive;

    // Triangular double integral -(i/2 hbar) ∫_0^τ dt1 ∫_0^{t1} dt2 [H(t1), H(t2)]
    // by the trapezoid rule on a uniform grid; the inner integral is the
    // running prefix of the same grid.
    const int nodes = kQuadratureNodes;
    const double step = h.tau() / static_cast<double>(nodes - 1);
    std::vector<Matrix> h_at(nodes);
    for (int j = 0; j < nodes; ++j) {
        h_at[j] = h.matrix_at(static_cast<double>(j) * step);
    }
    Matrix prefix = Matrix::Zero(h.dim(), h.dim());  // ∫_0^{t_j} H dt
    Matrix outer = Matrix::Zero(h.dim(), h.dim());
    for (int j = 1; j < nodes; ++j) {
        prefix += (0.5 * step) * (h_at[j - 1] + h_at[j]);
        const Matrix g = ops::commutator(h_at[j], prefix);
        const double w = (j == nodes - 1) ? 0.5 : 1.0;  // g at j=0 vanishes
        outer += (w * step) * g;
    }
    Matrix omega2 = Complex(0.0, -0.5 / hbar()) * outer;
    bundle.omega2 = ops::Operator::hermitian(std::move(omega2));

    const ops::UnitaryLogResult log = ops::unitary_log(u_tau, branch);
    bundle.omega_exact = log.omega;
    bundle.branch = branch;
    bundle.branch_cut_degenerate = log.near_branch_cut;
    return bundle;
}

OverlapComparison overlap_naive_vs_exact(const sched::HamiltonianSchedule& h,
                                         const ops::PureState& psi0, int steps) {
    const Trajectory traj = propagate_closed(h, psi0, steps);

    OverlapComparison cmp;
    cmp.time_ordered = std::abs(psi0.amp.dot(traj.u_final() * psi0.amp));

    const Matrix j_naive = simpson_integral(h, kQuadratureNodes);
    const ops::SpectralDecomposition eig =
        ops::hermitian_eig(ops::Operator::hermitian(j_naive));
    Complex sum(0.0, 0.0);
    for (Eigen::Index n = 0; n < eig.eigenvalues.size(); ++n) {
        const Complex amp = eig.eigenvectors.col(n).dot(psi0.amp);  // ⟨n|ψ0⟩
        const double weight = std::norm(amp);
        const double phase = eig.eigenvalues(n) / hbar();  // dimensionless J_n
        sum += weight * std::exp(Complex(0.0, -phase));
    }
    cmp.naive_spectral = std::abs(sum);
    return cmp;
}

}  // namespace qsl::prop
