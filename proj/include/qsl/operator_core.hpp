// operator_core.hpp — Dense complex operators with structure flags, Hermitian
// eigendecomposition, singular values and Schatten norms, the skew-Hermitian
// matrix exponential, and the unitary matrix logarithm.

#pragma once

#include "qsl/common.hpp"

#include <string>

namespace qsl::ops {

enum class Structure { general, hermitian, unitary };

// Dense square complex matrix tagged with the structure the caller asserts.
// The tagged factories validate (and for Hermitian inputs symmetrize) before
// storing, so a tag can be trusted downstream.
class Operator {
public:
    Operator() = default;

    static Operator general(Matrix m);
    static Operator hermitian(Matrix m);  // throws NonHermitianInput
    static Operator unitary(Matrix m);    // throws NonUnitaryInput
    static Operator zero(Eigen::Index dim);
    static Operator identity(Eigen::Index dim);

    Eigen::Index dim() const { return mat_.rows(); }
    const Matrix& mat() const { return mat_; }
    Structure structure() const { return structure_; }
    bool is(Structure s) const { return structure_ == s; }

    Complex operator()(Eigen::Index i, Eigen::Index j) const { return mat_(i, j); }

private:
    friend Operator trusted(Matrix m, Structure s);
    Matrix mat_;
    Structure structure_ = Structure::general;
};

// Internal fast path for matrices that are structured by construction
// (eigenvector-basis rebuilds, products of unitaries). Skips validation.
Operator trusted(Matrix m, Structure s);

// Eigenpairs of a Hermitian operator: real eigenvalues ascending, orthonormal
// eigenvector columns.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    Matrix eigenvectors;

    Matrix reconstruct() const {
        return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
    }
};

// Singular values sorted descending; rank-deficient inputs keep explicit zeros.
struct SingularValues {
    Eigen::VectorXd values;

    double op_norm() const { return values.size() ? values(0) : 0.0; }
    double trace_norm() const { return values.sum(); }
    double hs_norm() const { return values.norm(); }
};

// --------------------------------- Operations --------------------------------

SpectralDecomposition hermitian_eig(const Operator& a);

SingularValues svd_values(const Operator& a);
SingularValues svd_values(const Matrix& a);

double op_norm(const Matrix& a);
double trace_norm(const Matrix& a);
double hs_norm(const Matrix& a);

// exp(-i * scale * H) for Hermitian H, built from the eigendecomposition so the
// result is unitary to machine precision.
Operator expm_skew_hermitian(const Operator& h, double scale);

enum class LogBranch { principal, nonnegative };

// Hermitian generator of a unitary: U = exp(-(i/hbar) * Omega).  Eigenphases of
// U land in [-pi, pi) for the principal branch, [0, 2*pi) for the nonnegative
// branch; Omega's eigenvalues are hbar times those phases.  A phase within
// tol::branch_cut of the cut flags the result instead of rejecting it.
struct UnitaryLogResult {
    Operator omega;
    LogBranch branch = LogBranch::principal;
    bool near_branch_cut = false;
};

UnitaryLogResult unitary_log(const Operator& u, LogBranch branch);

Operator commutator(const Operator& a, const Operator& b);
Matrix commutator(const Matrix& a, const Matrix& b);

// ----------------------------------- States ----------------------------------

struct PureState {
    Vector amp;

    static PureState normalized(Vector v);  // throws InvalidParams on zero vector
    Eigen::Index dim() const { return amp.size(); }
    Matrix density() const { return amp * amp.adjoint(); }
};

struct DensityMatrix {
    Matrix mat;

    // Validates Hermiticity, unit trace, and positive semidefiniteness.
    static DensityMatrix validated(Matrix m, double tolerance = 1e-9);
    static DensityMatrix pure(const PureState& psi);
    static DensityMatrix maximally_mixed(Eigen::Index dim);
    Eigen::Index dim() const { return mat.rows(); }
};

// ------------------------------ Small constructors ---------------------------

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
PureState ket_basis(Eigen::Index dim, Eigen::Index k);
PureState ket_plus();
PureState ket_minus();

}  // namespace qsl::ops
