#include "qsl/operator_core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace qsl::ops {

namespace {

void require_square(const Matrix& m, const char* where) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw InvalidParams(std::string(where) + ": matrix must be square and nonempty");
    }
}

// Largest |eigenvalue| of a Hermitian matrix; cheap operator-norm proxy for
// validation checks.
double herm_op_norm(const Matrix& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> es;
    es.compute(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericFailure("herm_op_norm: eigensolver failed");
    const auto& ev = es.eigenvalues();
    return std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
}

double hermiticity_defect(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

Operator trusted(Matrix m, Structure s) {
    Operator a;
    a.mat_ = std::move(m);
    a.structure_ = s;
    return a;
}

Operator Operator::general(Matrix m) {
    require_square(m, "Operator::general");
    return trusted(std::move(m), Structure::general);
}

Operator Operator::hermitian(Matrix m) {
    require_square(m, "Operator::hermitian");
    const double defect = hermiticity_defect(m);
    if (defect > 0.0) {
        const double scale = op_norm(m);
        if (defect > tol::hermitian_rel * std::max(scale, 1e-300)) {
            throw NonHermitianInput("Operator::hermitian: max|A - A†| = " + std::to_string(defect) +
                                    " exceeds tolerance");
        }
    }
    // Symmetrize within tolerance so downstream eigensolves see an exactly
    // Hermitian matrix even after quadrature roundoff.
    Matrix sym = 0.5 * (m + m.adjoint());
    return trusted(std::move(sym), Structure::hermitian);
}

Operator Operator::unitary(Matrix m) {
    require_square(m, "Operator::unitary");
    const Eigen::Index n = m.rows();
    const Matrix defect = m.adjoint() * m - Matrix::Identity(n, n);
    if (herm_op_norm(defect) > tol::unitary_abs) {
        throw NonUnitaryInput("Operator::unitary: ‖A†A - I‖_op exceeds tolerance");
    }
    return trusted(std::move(m), Structure::unitary);
}

Operator Operator::zero(Eigen::Index dim) {
    return trusted(Matrix::Zero(dim, dim), Structure::hermitian);
}

Operator Operator::identity(Eigen::Index dim) {
    return trusted(Matrix::Identity(dim, dim), Structure::unitary);
}

// --------------------------------- Operations --------------------------------

SpectralDecomposition hermitian_eig(const Operator& a) {
    const Matrix& m = a.mat();
    require_square(m, "hermitian_eig");
    Matrix h;
    if (a.is(Structure::hermitian)) {
        h = m;  // already validated and symmetrized
    } else {
        const double defect = hermiticity_defect(m);
        if (defect > tol::hermitian_rel * std::max(op_norm(m), 1e-300)) {
            throw NonHermitianInput("hermitian_eig: input is not Hermitian within tolerance");
        }
        h = 0.5 * (m + m.adjoint());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    if (es.info() != Eigen::Success) throw NumericFailure("hermitian_eig: eigensolver failed");
    return SpectralDecomposition{es.eigenvalues(), es.eigenvectors()};
}

SingularValues svd_values(const Matrix& a) {
    require_square(a, "svd_values");
    // Hermitian fast path: singular values are |eigenvalues|.
    if (hermiticity_defect(a) <= tol::hermitian_rel * std::max(a.cwiseAbs().maxCoeff(), 1e-300)) {
        Eigen::SelfAdjointEigenSolver<Matrix> es;
        es.compute(0.5 * (a + a.adjoint()), Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) throw NumericFailure("svd_values: eigensolver failed");
        Eigen::VectorXd v = es.eigenvalues().cwiseAbs();
        std::sort(v.data(), v.data() + v.size(), std::greater<double>());
        return SingularValues{std::move(v)};
    }
    Eigen::JacobiSVD<Matrix> svd(a);
    return SingularValues{svd.singularValues()};
}

SingularValues svd_values(const Operator& a) { return svd_values(a.mat()); }

double op_norm(const Matrix& a) { return svd_values(a).op_norm(); }
double trace_norm(const Matrix& a) { return svd_values(a).trace_norm(); }
double hs_norm(const Matrix& a) { return a.norm(); }

Operator expm_skew_hermitian(const Operator& h, double scale) {
    const SpectralDecomposition eig = hermitian_eig(h);
    const Eigen::Index n = eig.eigenvalues.size();
    Vector phases(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        phases(k) = std::exp(Complex(0.0, -scale * eig.eigenvalues(k)));
    }
    Matrix u = eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
    return trusted(std::move(u), Structure::unitary);
}

UnitaryLogResult unitary_log(const Operator& u, LogBranch branch) {
    const Matrix& m = u.mat();
    require_square(m, "unitary_log");
    const Eigen::Index n = m.rows();
    if (!u.is(Structure::unitary)) {
        const Matrix defect = m.adjoint() * m - Matrix::Identity(n, n);
        if (herm_op_norm(defect) > tol::unitary_abs) {
            throw NonUnitaryInput("unitary_log: input is not unitary within tolerance");
        }
    }

    // A unitary matrix is normal, so its Schur form is diagonal up to roundoff:
    // U = Q T Q† with T = diag(λ) and Q unitary.
    Eigen::ComplexSchur<Matrix> schur(m);
    if (schur.info() != Eigen::Success) throw NumericFailure("unitary_log: Schur decomposition failed");
    const Matrix& q = schur.matrixU();

    Eigen::VectorXd theta(n);
    bool near_cut = false;
    for (Eigen::Index k = 0; k < n; ++k) {
        Complex lambda = schur.matrixT()(k, k);
        const double mag = std::abs(lambda);
        if (mag > 0.0) lambda /= mag;
        // U eigenvalue e^{-i θ}; arg ∈ (-π, π] gives θ ∈ [-π, π).
        double t = -std::arg(lambda);
        if (branch == LogBranch::nonnegative) {
            if (t < 0.0) t += 2.0 * M_PI;
            if (t < tol::branch_cut || 2.0 * M_PI - t < tol::branch_cut) near_cut = true;
        } else {
            if (M_PI - std::abs(t) < tol::branch_cut) near_cut = true;
        }
        theta(k) = t;
    }

    Matrix omega = q * (hbar() * theta).cast<Complex>().asDiagonal() * q.adjoint();
    omega = 0.5 * (omega + omega.adjoint());
    return UnitaryLogResult{trusted(std::move(omega), Structure::hermitian), branch, near_cut};
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("commutator: operands must share dimensions");
    }
    return a * b - b * a;
}

Operator commutator(const Operator& a, const Operator& b) {
    Matrix c = commutator(a.mat(), b.mat());
    if (a.is(Structure::hermitian) && b.is(Structure::hermitian)) {
        // [A, B] of Hermitian A, B is anti-Hermitian.
        const double defect = (c + c.adjoint()).cwiseAbs().maxCoeff();
        const double scale = std::max(c.cwiseAbs().maxCoeff(), 1e-300);
        if (defect > 1e-10 * std::max(scale, 1.0)) {
            throw NumericFailure("commutator: Hermitian inputs produced a non-anti-Hermitian result");
        }
    }
    return Operator::general(std::move(c));
}

// ----------------------------------- States ----------------------------------

PureState PureState::normalized(Vector v) {
    const double nrm = v.norm();
    if (!(nrm > 0.0) || !std::isfinite(nrm)) {
        throw InvalidParams("PureState::normalized: vector has zero or non-finite norm");
    }
    return PureState{v / nrm};
}

DensityMatrix DensityMatrix::validated(Matrix m, double tolerance) {
    require_square(m, "DensityMatrix::validated");
    if (hermiticity_defect(m) > tolerance) {
        throw NonHermitianInput("DensityMatrix::validated: not Hermitian within tolerance");
    }
    Matrix h = 0.5 * (m + m.adjoint());
    if (std::abs(h.trace().real() - 1.0) > tolerance) {
        throw InvalidParams("DensityMatrix::validated: trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es;
    es.compute(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericFailure("DensityMatrix::validated: eigensolver failed");
    if (es.eigenvalues().minCoeff() < -tolerance) {
        throw InvalidParams("DensityMatrix::validated: negative eigenvalue beyond tolerance");
    }
    return DensityMatrix{std::move(h)};
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
    return DensityMatrix{psi.density()};
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
    return DensityMatrix{Matrix::Identity(dim, dim) / static_cast<double>(dim)};
}

// ------------------------------ Small constructors ---------------------------

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

PureState ket_basis(Eigen::Index dim, Eigen::Index k) {
    if (k < 0 || k >= dim) throw InvalidParams("ket_basis: index out of range");
    Vector v = Vector::Zero(dim);
    v(k) = 1.0;
    return PureState{std::move(v)};
}

PureState ket_plus() {
    Vector v(2);
    v << 1.0, 1.0;
    return PureState{v / std::sqrt(2.0)};
}

PureState ket_minus() {
    Vector v(2);
    v << 1.0, -1.0;
    return PureState{v / std::sqrt(2.0)};
}

}  // namespace qsl::ops
