// common.hpp — Shared aliases, global hbar, tolerances, error types, RNG helpers

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace qsl {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// --------------------------- Global configuration ---------------------------

// Reduced Planck constant carried symbolically through every formula.
// Defaults to 1.0 (natural units); set once at startup for SI-flavored runs.
double hbar() noexcept;
void set_hbar(double value);

// Parallelism cap: QSL_THREADS environment variable, else hardware threads.
int thread_budget();

// Runs fn(0..n-1) across the thread budget. Work is assigned by index stride,
// so results written to caller-indexed storage are independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// 17 significant digits: round-trips any IEEE double, byte-stable across runs.
std::string to_g17(double value);

// ------------------------------- Tolerances ----------------------------------

namespace tol {
inline constexpr double hermitian_rel = 1e-12;     // max|A - A†| vs ‖A‖_op
inline constexpr double unitary_abs = 1e-10;       // ‖A†A - I‖_op
inline constexpr double branch_cut = 1e-9;         // eigenphase distance to log branch cut
inline constexpr double reconstruction = 1e-10;    // ‖V diag(λ) V† - A‖_op
inline constexpr double trace_drift = 1e-12;       // renormalize tr(ρ) past this
inline constexpr double bound_satisfied_abs = 1e-9;  // bound ≤ τ check, absolute part
inline constexpr double bound_satisfied_rel = 1e-7;  // bound ≤ τ check, relative part
}

// -------------------------------- Error types --------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonHermitianInput : Error { using Error::Error; };
struct NonUnitaryInput : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct InvalidStepCount : Error { using Error::Error; };
struct UnknownPreset : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct UnsupportedDimension : Error { using Error::Error; };
struct ZeroDenominator : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct NumericFailure : Error { using Error::Error; };

// ----------------------------------- RNG -------------------------------------
// Draws go through the raw mt19937_64 output so that identical seeds produce
// bitwise-identical values on every platform (std:: distributions do not
// guarantee that).

namespace rng {

// splitmix64 step; used to derive independent per-sample streams from a base seed.
std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * uniform01(g);
}

// Inclusive integer range; hi - lo must be tiny compared to 2^64, so the
// modulo bias is irrelevant here.
inline int uniform_int(std::mt19937_64& g, int lo, int hi) {
    return lo + static_cast<int>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::pair<double, double> gaussian_pair(std::mt19937_64& g);  // Box–Muller

// Normalized complex Gaussian vector (Haar-like pure state).
Vector gaussian_state(std::mt19937_64& g, Eigen::Index dim);

// Hermitian matrix with entries uniform in [-1, 1] (real and imaginary), then
// symmetrized A ← (A + A†)/2.
Matrix hermitian_uniform(std::mt19937_64& g, Eigen::Index dim);

}  // namespace rng

}  // namespace qsl
