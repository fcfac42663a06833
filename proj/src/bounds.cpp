#include "qsl/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qsl::bounds {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

BoundEntry make_entry(std::string id, BoundStatus status, double numerator, double denominator,
                      double tau, double angle) {
    BoundEntry e;
    e.id = std::move(id);
    e.status = status;
    e.tau = tau;
    e.angle = angle;
    e.denominator = denominator;
    const double v = numerator / denominator;
    if (denominator > 0.0 && std::isfinite(v)) {
        e.value = v;
        e.infinite = false;
        e.satisfied_by_actual_tau =
            v <= tau * (1.0 + tol::bound_satisfied_rel) + tol::bound_satisfied_abs;
    } else {
        e.value = std::numeric_limits<double>::infinity();
        e.infinite = true;
        e.satisfied_by_actual_tau = false;
    }
    return e;
}

}  // namespace

// --------------------------------- Geometry -----------------------------------

GeometryResult geometry_pure(const ops::PureState& a, const ops::PureState& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("geometry_pure: dimension mismatch");
    const double overlap = clamp01(std::abs(a.amp.dot(b.amp)));
    return GeometryResult{overlap, std::acos(overlap), GeometryKind::pure_overlap};
}

GeometryResult geometry_mixed(const ops::DensityMatrix& a, const ops::DensityMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("geometry_mixed: dimension mismatch");
    const double t = (a.mat * b.mat).trace().real();
    const double overlap = clamp01(std::sqrt(std::max(0.0, t)));
    return GeometryResult{overlap, std::acos(overlap), GeometryKind::mixed_trace};
}

// ------------------------- Per-node closed observables -------------------------

double time_average(const std::vector<double>& times, const std::vector<double>& values) {
    if (times.size() != values.size() || times.size() < 2) {
        throw InvalidParams("time_average: need matching grids with at least two nodes");
    }
    double acc = 0.0;
    for (std::size_t k = 1; k < times.size(); ++k) {
        acc += 0.5 * (times[k] - times[k - 1]) * (values[k] + values[k - 1]);
    }
    return acc / (times.back() - times.front());
}

ClosedObservables closed_observables(const sched::HamiltonianSchedule& h,
                                     const prop::Trajectory& traj) {
    if (!traj.closed) throw InvalidParams("closed_observables: open trajectory");
    const std::size_t n = traj.times.size();
    ClosedObservables obs;
    obs.mean_initial.resize(n);
    obs.transition.resize(n);
    obs.mean_instant.resize(n);
    obs.mean_signed.resize(n);
    obs.sqrt_second_moment.resize(n);
    obs.variance.resize(n);

    const Vector& psi0 = traj.states.front();
    for (std::size_t k = 0; k < n; ++k) {
        const Matrix hk = h.matrix_at(traj.times[k]);
        const Vector& psi = traj.states[k];
        const Vector h_psi = hk * psi;
        const Vector h_psi0 = (k == 0) ? h_psi : Vector(hk * psi0);

        obs.mean_initial[k] = std::abs(psi0.dot(h_psi0));
        obs.transition[k] = std::abs(psi0.dot(h_psi));
        const double mean = psi.dot(h_psi).real();
        obs.mean_signed[k] = mean;
        obs.mean_instant[k] = std::abs(mean);
        const double second = h_psi.squaredNorm();
        obs.sqrt_second_moment[k] = std::sqrt(std::max(0.0, second));
        obs.variance[k] = std::sqrt(std::max(0.0, second - mean * mean));
    }
    return obs;
}

EnergyStats energy_stats(const sched::HamiltonianSchedule& h, const prop::Trajectory& traj,
                         const prop::GeneratorBundle* bundle) {
    const ClosedObservables obs = closed_observables(h, traj);
    EnergyStats s;
    s.mean_initial = time_average(traj.times, obs.mean_initial);
    s.transition = time_average(traj.times, obs.transition);
    s.mean_instant = time_average(traj.times, obs.mean_instant);
    s.sqrt_second_moment = time_average(traj.times, obs.sqrt_second_moment);
    s.variance_avg = time_average(traj.times, obs.variance);
    if (bundle != nullptr) {
        const Vector& psi0 = traj.states.front();
        s.generator_phase = std::abs(psi0.dot(bundle->omega_exact.mat() * psi0)) / traj.tau;
    }
    return s;
}

// ------------------------------ Norm trajectories ------------------------------

NormTrajectory schatten_norm_trajectory(const std::vector<Matrix>& rho_dots) {
    NormTrajectory nt;
    const std::size_t n = rho_dots.size();
    nt.op.resize(n);
    nt.tr.resize(n);
    nt.hs.resize(n);
    nt.sigma.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        ops::SingularValues sv = ops::svd_values(rho_dots[k]);
        nt.op[k] = sv.op_norm();
        nt.tr[k] = sv.trace_norm();
        nt.hs[k] = sv.hs_norm();
        nt.sigma[k] = std::move(sv.values);
    }
    return nt;
}

NormAverages average_norms(const std::vector<double>& times, const NormTrajectory& norms) {
    NormAverages avg;
    avg.op_avg = time_average(times, norms.op);
    avg.tr_avg = time_average(times, norms.tr);
    avg.hs_avg = time_average(times, norms.hs);
    return avg;
}

std::vector<Matrix> closed_rho_dots(const sched::HamiltonianSchedule& h,
                                    const prop::Trajectory& traj) {
    if (!traj.closed) throw InvalidParams("closed_rho_dots: open trajectory");
    std::vector<Matrix> out;
    out.reserve(traj.times.size());
    const Complex factor(0.0, -1.0 / hbar());
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const Matrix rho = traj.states[k] * traj.states[k].adjoint();
        out.push_back(factor * ops::commutator(h.matrix_at(traj.times[k]), rho));
    }
    return out;
}

NormAverages norm_averages(const prop::Trajectory& open_traj) {
    if (open_traj.closed) throw InvalidParams("norm_averages: expected an open trajectory");
    return average_norms(open_traj.times, schatten_norm_trajectory(open_traj.rho_dots));
}

NormAverages norm_averages(const sched::HamiltonianSchedule& h,
                           const prop::Trajectory& closed_traj) {
    return average_norms(closed_traj.times,
                         schatten_norm_trajectory(closed_rho_dots(h, closed_traj)));
}

// --------------------------------- Bound report --------------------------------

const char* status_name(BoundStatus s) {
    switch (s) {
        case BoundStatus::valid: return "valid";
        case BoundStatus::invalid_derivation: return "invalid_derivation";
        case BoundStatus::valid_but_unphysical: return "valid_but_unphysical";
    }
    return "unknown";
}

const BoundEntry* BoundReport::find(const std::string& id) const {
    for (const auto& e : entries) {
        if (e.id == id) return &e;
    }
    return nullptr;
}

std::pair<double, double> static_bounds(double delta_e, double e_minus_e0) {
    if (!(delta_e > 0.0)) throw ZeroDenominator("static_bounds: delta_e must be > 0");
    if (!(e_minus_e0 > 0.0)) throw ZeroDenominator("static_bounds: e - e0 must be > 0");
    const double mt = M_PI * hbar() / (2.0 * delta_e);
    const double ml = M_PI * hbar() / (2.0 * e_minus_e0);
    return {mt, ml};
}

std::array<BoundEntry, 2> static_entries(const ops::Operator& h0, const ops::PureState& psi0,
                                         double tau) {
    const Vector h_psi = h0.mat() * psi0.amp;
    const double mean = psi0.amp.dot(h_psi).real();
    const double second = h_psi.squaredNorm();
    const double delta_e = std::sqrt(std::max(0.0, second - mean * mean));
    const ops::SpectralDecomposition eig = ops::hermitian_eig(h0);
    const double e_minus_e0 = mean - eig.eigenvalues(0);

    // Angle snapshot is not meaningful here; the static pair depends on the
    // initial state and spectrum only.
    BoundEntry mt = make_entry("mt_static", BoundStatus::valid, M_PI * hbar() / 2.0, delta_e,
                               tau, 0.0);
    BoundEntry ml = make_entry("ml_static", BoundStatus::valid, M_PI * hbar() / 2.0, e_minus_e0,
                               tau, 0.0);
    return {std::move(mt), std::move(ml)};
}

BoundEntry ml_initial_energy_bound(const EnergyStats& stats, const GeometryResult& geom,
                                   double tau) {
    return make_entry("ml_initial_energy", BoundStatus::invalid_derivation,
                      hbar() * geom.angle, stats.mean_initial, tau, geom.angle);
}

BoundEntry ml_exact_generator_bound(const EnergyStats& stats, const GeometryResult& geom,
                                    double tau) {
    return make_entry("ml_exact_generator", BoundStatus::valid, hbar() * geom.angle,
                      stats.generator_phase, tau, geom.angle);
}

BoundEntry ml_transition_energy_bound(const EnergyStats& stats, const GeometryResult& geom,
                                      double tau) {
    return make_entry("ml_transition_energy", BoundStatus::valid_but_unphysical,
                      4.0 * hbar() * geom.angle * geom.angle, M_PI * M_PI * stats.transition,
                      tau, geom.angle);
}

BoundEntry ml_instant_energy_bound(const EnergyStats& stats, const GeometryResult& geom,
                                   double tau) {
    const double s = std::sin(geom.angle);
    return make_entry("ml_instant_energy", BoundStatus::invalid_derivation, hbar() * s * s,
                      2.0 * stats.mean_instant, tau, geom.angle);
}

BoundEntry ml_second_moment_bound(const EnergyStats& stats, const GeometryResult& geom,
                                  double tau) {
    const double s = std::sin(geom.angle);
    return make_entry("ml_second_moment", BoundStatus::valid_but_unphysical, hbar() * s * s,
                      2.0 * stats.sqrt_second_moment, tau, geom.angle);
}

BoundEntry mt_variance_bound(const EnergyStats& stats, const GeometryResult& geom, double tau) {
    const double s = std::sin(geom.angle);
    return make_entry("mt_variance", BoundStatus::valid, hbar() * s * s,
                      std::sqrt(2.0) * stats.variance_avg, tau, geom.angle);
}

std::array<BoundEntry, 3> schatten_norm_bounds(const NormAverages& norms,
                                               const GeometryResult& geom, double tau) {
    const double s = std::sin(geom.angle);
    const double num = s * s;
    BoundEntry op = make_entry("qsl_op_norm", BoundStatus::valid_but_unphysical, num,
                               norms.op_avg, tau, geom.angle);
    BoundEntry tr = make_entry("qsl_tr_norm", BoundStatus::valid_but_unphysical, num,
                               norms.tr_avg, tau, geom.angle);
    BoundEntry hs = make_entry("qsl_hs_norm", BoundStatus::valid, num, norms.hs_avg, tau,
                               geom.angle);
    return {std::move(op), std::move(tr), std::move(hs)};
}

BoundEntry sharpest_norm_bound(const NormAverages& norms, const GeometryResult& geom,
                               double tau) {
    return schatten_norm_bounds(norms, geom, tau)[0];
}

TraceNormMoments trace_norm_pure_product(const ops::Operator& h, const ops::PureState& psi) {
    if (h.dim() != psi.dim()) {
        throw DimensionMismatch("trace_norm_pure_product: dimension mismatch");
    }
    const Vector h_psi = h.mat() * psi.amp;
    TraceNormMoments m;
    m.mean = psi.amp.dot(h_psi).real();
    m.sqrt_second_moment = h_psi.norm();
    const Matrix product = h.mat() * psi.density();
    m.trace_norm = ops::svd_values(product).trace_norm();
    return m;
}

BoundReport closed_report(const sched::HamiltonianSchedule& h, const prop::Trajectory& traj,
                          const prop::GeneratorBundle& bundle) {
    if (!traj.closed) throw InvalidParams("closed_report: open trajectory");
    const ops::PureState psi0{traj.states.front()};
    const ops::PureState psi_tau{traj.psi_final()};
    const GeometryResult geom = geometry_pure(psi0, psi_tau);
    const EnergyStats stats = energy_stats(h, traj, &bundle);
    const NormAverages norms = norm_averages(h, traj);

    BoundReport report;
    report.entries.push_back(ml_initial_energy_bound(stats, geom, traj.tau));
    report.entries.push_back(ml_exact_generator_bound(stats, geom, traj.tau));
    report.entries.push_back(ml_transition_energy_bound(stats, geom, traj.tau));
    report.entries.push_back(ml_instant_energy_bound(stats, geom, traj.tau));
    report.entries.push_back(ml_second_moment_bound(stats, geom, traj.tau));
    report.entries.push_back(mt_variance_bound(stats, geom, traj.tau));
    for (auto& e : schatten_norm_bounds(norms, geom, traj.tau)) {
        report.entries.push_back(std::move(e));
    }
    return report;
}

BoundReport open_report(const prop::Trajectory& traj) {
    if (traj.closed) throw InvalidParams("open_report: closed trajectory");
    const ops::DensityMatrix rho0{traj.rhos.front()};
    const ops::DensityMatrix rho_tau{traj.rho_final()};
    const GeometryResult geom = geometry_mixed(rho0, rho_tau);
    const NormAverages norms = norm_averages(traj);

    BoundReport report;
    for (auto& e : schatten_norm_bounds(norms, geom, traj.tau)) {
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace qsl::bounds
