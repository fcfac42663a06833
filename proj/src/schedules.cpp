#include "qsl/schedules.hpp"

#include <cmath>
#include <utility>

namespace qsl::sched {

HamiltonianSchedule::HamiltonianSchedule(Eigen::Index dim, double tau, Evaluator evaluator,
                                         std::string label)
    : dim_(dim), tau_(tau), evaluator_(std::move(evaluator)), label_(std::move(label)) {
    if (dim_ <= 0) throw InvalidParams("HamiltonianSchedule: dim must be positive");
    if (!(tau_ > 0.0) || !std::isfinite(tau_)) {
        throw InvalidParams("HamiltonianSchedule: tau must be finite and > 0");
    }
    if (!evaluator_) throw InvalidParams("HamiltonianSchedule: missing evaluator");
}

ops::Operator HamiltonianSchedule::at(double t) const {
    Matrix m = evaluator_(t);
    if (m.rows() != dim_ || m.cols() != dim_) {
        throw DimensionMismatch("HamiltonianSchedule::at: evaluator dimension mismatch");
    }
    return ops::Operator::hermitian(std::move(m));
}

LiouvillianSchedule::LiouvillianSchedule(Eigen::Index dim, double tau, Evaluator evaluator,
                                         std::string label)
    : dim_(dim), tau_(tau), evaluator_(std::move(evaluator)), label_(std::move(label)) {
    if (dim_ <= 0) throw InvalidParams("LiouvillianSchedule: dim must be positive");
    if (!(tau_ > 0.0) || !std::isfinite(tau_)) {
        throw InvalidParams("LiouvillianSchedule: tau must be finite and > 0");
    }
    if (!evaluator_) throw InvalidParams("LiouvillianSchedule: missing evaluator");
}

Matrix LiouvillianSchedule::rho_dot(double t, const Matrix& rho) const {
    if (rho.rows() != dim_ || rho.cols() != dim_) {
        throw DimensionMismatch("LiouvillianSchedule::rho_dot: rho dimension mismatch");
    }
    return evaluator_(t, rho);
}

// ---------------------------------- Presets -----------------------------------

HamiltonianSchedule constant(Matrix h0, double tau, std::string label) {
    // Validate once; capture the symmetrized matrix.
    ops::Operator h = ops::Operator::hermitian(std::move(h0));
    const Eigen::Index dim = h.dim();
    Matrix m = h.mat();
    return HamiltonianSchedule(
        dim, tau, [m](double) { return m; }, std::move(label));
}

HamiltonianSchedule driven_qubit(double delta, double eps, double omega, double tau) {
    const Matrix sz = ops::pauli_z();
    const Matrix sx = ops::pauli_x();
    return HamiltonianSchedule(
        2, tau,
        [=](double t) {
            Matrix h = delta * sz + eps * std::cos(omega * t) * sx;
            return h;
        },
        "driven_qubit");
}

HamiltonianSchedule landau_zener(double v, double g, double tau) {
    const Matrix sz = ops::pauli_z();
    const Matrix sx = ops::pauli_x();
    return HamiltonianSchedule(
        2, tau,
        [=](double t) {
            Matrix h = v * t * sz + g * sx;
            return h;
        },
        "landau_zener");
}

HamiltonianSchedule random_fourier(Eigen::Index dim, int modes, std::uint64_t seed, double tau) {
    if (dim <= 0) throw InvalidParams("random_fourier: dim must be positive");
    if (modes < 0) throw InvalidParams("random_fourier: modes must be >= 0");
    std::mt19937_64 gen(seed);
    auto coeffs = std::make_shared<std::vector<std::pair<Matrix, Matrix>>>();
    const Matrix a0 = rng::hermitian_uniform(gen, dim);
    coeffs->reserve(static_cast<std::size_t>(modes));
    for (int k = 1; k <= modes; ++k) {
        Matrix ak = rng::hermitian_uniform(gen, dim);
        Matrix bk = rng::hermitian_uniform(gen, dim);
        coeffs->emplace_back(std::move(ak), std::move(bk));
    }
    auto eval = [a0, coeffs](double t) {
        Matrix h = a0;
        for (std::size_t k = 0; k < coeffs->size(); ++k) {
            const double w = static_cast<double>(k + 1) * t;
            h += std::cos(w) * (*coeffs)[k].first + std::sin(w) * (*coeffs)[k].second;
        }
        return h;
    };
    return HamiltonianSchedule(dim, tau, std::move(eval),
                               "random_fourier[seed=" + std::to_string(seed) + "]");
}

HamiltonianSchedule preset(const PresetSpec& spec) {
    if (!(spec.tau > 0.0) || !std::isfinite(spec.tau)) {
        throw InvalidParams("preset: tau must be finite and > 0");
    }
    if (spec.family == "constant") {
        if (!spec.h0) throw InvalidParams("preset: constant family requires a matrix");
        return constant(*spec.h0, spec.tau);
    }
    if (spec.family == "driven_qubit") {
        if (spec.params.size() != 3) {
            throw InvalidParams("preset: driven_qubit expects params {delta, eps, omega}");
        }
        return driven_qubit(spec.params[0], spec.params[1], spec.params[2], spec.tau);
    }
    if (spec.family == "landau_zener") {
        if (spec.params.size() != 2) {
            throw InvalidParams("preset: landau_zener expects params {v, g}");
        }
        return landau_zener(spec.params[0], spec.params[1], spec.tau);
    }
    if (spec.family == "random_fourier") {
        const int modes = spec.params.empty() ? 3 : static_cast<int>(spec.params[0]);
        return random_fourier(spec.dim, modes, spec.seed, spec.tau);
    }
    throw UnknownPreset("preset: unknown family '" + spec.family + "'");
}

// -------------------------------- Liouvillians --------------------------------

LiouvillianSchedule unitary_liouvillian(const HamiltonianSchedule& h) {
    const Eigen::Index dim = h.dim();
    auto eval = [h](double t, const Matrix& rho) {
        const Complex factor(0.0, -1.0 / hbar());
        Matrix d = factor * ops::commutator(h.matrix_at(t), rho);
        return d;
    };
    return LiouvillianSchedule(dim, h.tau(), std::move(eval), "unitary[" + h.label() + "]");
}

LiouvillianSchedule dephasing_liouvillian(const HamiltonianSchedule& h, RateFn rate) {
    if (h.dim() != 2) {
        throw UnsupportedDimension("dephasing_liouvillian: preset is restricted to qubits");
    }
    if (!rate) throw InvalidParams("dephasing_liouvillian: missing rate function");
    const Matrix sz = ops::pauli_z();
    auto eval = [h, rate, sz](double t, const Matrix& rho) {
        const Complex factor(0.0, -1.0 / hbar());
        Matrix d = factor * ops::commutator(h.matrix_at(t), rho);
        d += rate(t) * (sz * rho * sz - rho);
        return d;
    };
    return LiouvillianSchedule(2, h.tau(), std::move(eval), "dephasing[" + h.label() + "]");
}

// ------------------------------ Random sampling -------------------------------

const char* family_name(Family f) {
    switch (f) {
        case Family::constant: return "constant";
        case Family::driven_qubit: return "driven_qubit";
        case Family::landau_zener: return "landau_zener";
        case Family::random_fourier: return "random_fourier";
    }
    return "unknown";
}

Family family_from_name(const std::string& name) {
    if (name == "constant") return Family::constant;
    if (name == "driven_qubit") return Family::driven_qubit;
    if (name == "landau_zener") return Family::landau_zener;
    if (name == "random_fourier") return Family::random_fourier;
    throw UnknownPreset("family_from_name: unknown family '" + name + "'");
}

HamiltonianSchedule ScheduleSample::draw(std::uint64_t k) const {
    std::mt19937_64 gen(rng::mix(seed, 2 * k));
    const double tau = rng::uniform(gen, tau_min, tau_max);
    switch (family) {
        case Family::constant: {
            const int dim = rng::uniform_int(gen, dim_min, dim_max);
            Matrix h0 = rng::hermitian_uniform(gen, dim);
            return constant(std::move(h0), tau, "sampled_constant");
        }
        case Family::driven_qubit: {
            const double delta = rng::uniform(gen, coupling_min, coupling_max);
            const double eps = rng::uniform(gen, coupling_min, coupling_max);
            const double omega = rng::uniform(gen, coupling_min, 2.0 * coupling_max);
            return driven_qubit(delta, eps, omega, tau);
        }
        case Family::landau_zener: {
            const double v = rng::uniform(gen, coupling_min, coupling_max);
            const double g = rng::uniform(gen, coupling_min, coupling_max);
            return landau_zener(v, g, tau);
        }
        case Family::random_fourier:
        default: {
            const int dim = rng::uniform_int(gen, dim_min, dim_max);
            const std::uint64_t sub_seed = gen();
            return random_fourier(dim, modes, sub_seed, tau);
        }
    }
}

ops::PureState ScheduleSample::draw_state(std::uint64_t k, Eigen::Index dim) const {
    std::mt19937_64 gen(rng::mix(seed, 2 * k + 1));
    return ops::PureState{rng::gaussian_state(gen, dim)};
}

}  // namespace qsl::sched
