// schedules.hpp — Time-dependent generators on [0, τ]: Hamiltonian schedules
// for closed systems, Liouvillian schedules for open systems, named presets,
// and seeded random-instance sampling.

#pragma once

#include "qsl/common.hpp"
#include "qsl/operator_core.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qsl::sched {

class HamiltonianSchedule {
public:
    using Evaluator = std::function<Matrix(double)>;

    HamiltonianSchedule(Eigen::Index dim, double tau, Evaluator evaluator, std::string label);

    Eigen::Index dim() const { return dim_; }
    double tau() const { return tau_; }
    const std::string& label() const { return label_; }

    // Validated Hermitian operator at time t.
    ops::Operator at(double t) const;
    // Raw matrix; presets produce exactly Hermitian entries.
    Matrix matrix_at(double t) const { return evaluator_(t); }

private:
    Eigen::Index dim_;
    double tau_;
    Evaluator evaluator_;
    std::string label_;
};

// Generator of density-matrix dynamics: evaluator(t, ρ) returns ρ̇ (traceless
// Hermitian for any trace-preserving Hermitian dynamics).
class LiouvillianSchedule {
public:
    using Evaluator = std::function<Matrix(double, const Matrix&)>;

    LiouvillianSchedule(Eigen::Index dim, double tau, Evaluator evaluator, std::string label);

    Eigen::Index dim() const { return dim_; }
    double tau() const { return tau_; }
    const std::string& label() const { return label_; }

    Matrix rho_dot(double t, const Matrix& rho) const;

private:
    Eigen::Index dim_;
    double tau_;
    Evaluator evaluator_;
    std::string label_;
};

// ---------------------------------- Presets -----------------------------------

HamiltonianSchedule constant(Matrix h0, double tau, std::string label = "constant");

// delta * sigma_z + eps * cos(omega * t) * sigma_x
HamiltonianSchedule driven_qubit(double delta, double eps, double omega, double tau);

// v * t * sigma_z + g * sigma_x
HamiltonianSchedule landau_zener(double v, double g, double tau);

// Hermitian Fourier series with `modes` harmonics of unit fundamental
// frequency: H(t) = A_0 + sum_k (A_k cos(k t) + B_k sin(k t)), coefficient
// matrices drawn uniform in [-1, 1] then symmetrized. Same seed, same series.
HamiltonianSchedule random_fourier(Eigen::Index dim, int modes, std::uint64_t seed, double tau);

// String-keyed preset construction for the config surface.
// Families and their positional params:
//   "constant"       h0 required (explicit matrix)
//   "driven_qubit"   params = {delta, eps, omega}
//   "landau_zener"   params = {v, g}
//   "random_fourier" dim, modes (params = {modes}), seed
struct PresetSpec {
    std::string family;
    double tau = 0.0;
    Eigen::Index dim = 2;
    std::vector<double> params;
    std::uint64_t seed = 0;
    std::optional<Matrix> h0;
};

HamiltonianSchedule preset(const PresetSpec& spec);  // UnknownPreset / InvalidParams

// -------------------------------- Liouvillians --------------------------------

// Unitary dynamics ρ̇ = -(i/hbar)[H(t), ρ]; the -i factor is what keeps ρ̇
// Hermitian and traceless.
LiouvillianSchedule unitary_liouvillian(const HamiltonianSchedule& h);

using RateFn = std::function<double(double)>;

// Qubit dephasing on top of the unitary part:
//   ρ̇ = -(i/hbar)[H(t), ρ] + rate(t) * (σ_z ρ σ_z - ρ).
// rate(t) may go negative (memory backflow); only Hermiticity and trace
// preservation are required of the generator.
LiouvillianSchedule dephasing_liouvillian(const HamiltonianSchedule& h, RateFn rate);

// ------------------------------ Random sampling -------------------------------

enum class Family { constant, driven_qubit, landau_zener, random_fourier };

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // UnknownPreset

// Deterministic sampler: draw(k) yields the k-th schedule instance of the
// stream defined by (seed, family, ranges). Same seed, same instances.
struct ScheduleSample {
    std::uint64_t seed = 0;
    Family family = Family::random_fourier;
    int dim_min = 2, dim_max = 6;      // random_fourier / constant
    double tau_min = 0.5, tau_max = 2.5;
    int modes = 3;                     // random_fourier
    double coupling_min = 0.2, coupling_max = 2.0;  // qubit-family parameters

    HamiltonianSchedule draw(std::uint64_t k) const;
    // Initial state drawn from the same per-instance stream (normalized
    // complex Gaussian components).
    ops::PureState draw_state(std::uint64_t k, Eigen::Index dim) const;
};

}  // namespace qsl::sched
