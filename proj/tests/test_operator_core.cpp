#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsl/operator_core.hpp"

#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace qsl;
using ops::Operator;

namespace {

Matrix random_general(std::mt19937_64& gen, Eigen::Index dim) {
    Matrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            m(i, j) = Complex(rng::uniform(gen, -1.0, 1.0), rng::uniform(gen, -1.0, 1.0));
        }
    }
    return m;
}

}  // namespace

TEST_CASE("operator factories validate structure") {
    CHECK_NOTHROW(Operator::hermitian(ops::pauli_z()));
    CHECK_NOTHROW(Operator::unitary(ops::pauli_x()));

    Matrix raising(2, 2);
    raising << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(Operator::hermitian(raising), NonHermitianInput);
    CHECK_THROWS_AS(Operator::unitary(2.0 * Matrix::Identity(2, 2)), NonUnitaryInput);

    SUBCASE("hermitian inputs are symmetrized within tolerance") {
        Matrix near = ops::pauli_z();
        near(0, 1) = Complex(1e-14, 1e-14);
        near(1, 0) = Complex(0.0, 0.0);
        const Operator h = Operator::hermitian(near);
        CHECK((h.mat() - h.mat().adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("zero and identity carry their structure") {
        CHECK(Operator::zero(3).is(ops::Structure::hermitian));
        CHECK(Operator::identity(3).is(ops::Structure::unitary));
    }
}

TEST_CASE("hermitian_eig") {
    SUBCASE("identity spectrum") {
        const auto eig = ops::hermitian_eig(Operator::identity(2));
        CHECK(eig.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(eig.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));
    }

    SUBCASE("pauli_z spectrum ascending") {
        const auto eig = ops::hermitian_eig(Operator::hermitian(ops::pauli_z()));
        CHECK(eig.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(eig.eigenvalues(1) == doctest::Approx(+1.0).epsilon(1e-14));
    }

    SUBCASE("random 4x4 matches characteristic-polynomial roots") {
        std::mt19937_64 gen(71);
        const Matrix h = rng::hermitian_uniform(gen, 4);
        const auto eig = ops::hermitian_eig(Operator::hermitian(h));
        const std::vector<double> roots = oracle::char_poly_hermitian_eigenvalues(h);
        const std::vector<double> jacobi = oracle::jacobi_hermitian_eigenvalues(h);
        REQUIRE(roots.size() == 4);
        for (Eigen::Index i = 0; i < 4; ++i) {
            CHECK(eig.eigenvalues(i) == doctest::Approx(roots[i]).epsilon(1e-10));
            CHECK(eig.eigenvalues(i) == doctest::Approx(jacobi[i]).epsilon(1e-10));
        }
    }

    SUBCASE("reconstruction and orthonormality invariants") {
        std::mt19937_64 gen(1234);
        for (int trial = 0; trial < 50; ++trial) {
            const Eigen::Index dim = 2 + static_cast<Eigen::Index>(gen() % 5);
            const Matrix h = rng::hermitian_uniform(gen, dim);
            const auto eig = ops::hermitian_eig(Operator::hermitian(h));
            const double scale = std::max(1.0, ops::op_norm(h));
            CHECK(ops::op_norm(eig.reconstruct() - h) <= 1e-10 * scale);
            const Matrix gram =
                eig.eigenvectors.adjoint() * eig.eigenvectors - Matrix::Identity(dim, dim);
            CHECK(gram.cwiseAbs().maxCoeff() <= 1e-12);
        }
    }

    SUBCASE("rejects non-hermitian input") {
        Matrix m(2, 2);
        m << 0.0, 1.0, 0.5, 0.0;
        CHECK_THROWS_AS(ops::hermitian_eig(Operator::general(m)), NonHermitianInput);
    }
}

TEST_CASE("svd_values") {
    SUBCASE("zero matrix") {
        const auto sv = ops::svd_values(Matrix::Zero(3, 3));
        CHECK(sv.values.size() == 3);
        CHECK(sv.values.maxCoeff() == 0.0);
    }

    SUBCASE("unitary has unit singular values") {
        const auto sv = ops::svd_values(ops::pauli_x());
        CHECK(sv.values(0) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(sv.values(1) == doctest::Approx(1.0).epsilon(1e-14));
    }

    SUBCASE("unitary generator of a plus state is doubly degenerate") {
        // rho_dot = -(i/hbar)[sigma_z, |+><+|] has singular values (dE, dE) = (1, 1).
        const Matrix rho = ops::ket_plus().density();
        const Matrix rho_dot = Complex(0.0, -1.0) * ops::commutator(ops::pauli_z(), rho);
        const auto sv = ops::svd_values(rho_dot);
        const std::vector<double> brute = oracle::brute_svd_values(rho_dot);
        CHECK(sv.values(0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(sv.values(1) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(sv.values(0) == doctest::Approx(brute[0]).epsilon(1e-12));
        CHECK(sv.values(1) == doctest::Approx(brute[1]).epsilon(1e-12));
    }

    SUBCASE("matches brute-force values on general and hermitian inputs") {
        std::mt19937_64 gen(5150);
        for (int trial = 0; trial < 40; ++trial) {
            const Eigen::Index dim = 2 + static_cast<Eigen::Index>(gen() % 5);
            const Matrix m =
                (trial % 2 == 0) ? random_general(gen, dim) : Matrix(rng::hermitian_uniform(gen, dim));
            const auto sv = ops::svd_values(m);
            const std::vector<double> brute = oracle::brute_svd_values(m);
            REQUIRE(sv.values.size() == dim);
            for (Eigen::Index i = 0; i < dim; ++i) {
                CHECK(sv.values(i) == doctest::Approx(brute[i]).epsilon(5e-11));
                if (i > 0) CHECK(sv.values(i) <= sv.values(i - 1) + 1e-14);
            }
        }
    }

    SUBCASE("norm ordering op <= hs <= tr holds on 1000 random matrices") {
        std::mt19937_64 gen(99);
        for (int trial = 0; trial < 1000; ++trial) {
            const Eigen::Index dim = 2 + static_cast<Eigen::Index>(gen() % 5);
            const Matrix m = (trial % 3 == 0) ? Matrix(rng::hermitian_uniform(gen, dim))
                                              : random_general(gen, dim);
            const auto sv = ops::svd_values(m);
            CHECK(sv.op_norm() <= sv.hs_norm() * (1.0 + 1e-12) + 1e-14);
            CHECK(sv.hs_norm() <= sv.trace_norm() * (1.0 + 1e-12) + 1e-14);
            CHECK(ops::hs_norm(m) == doctest::Approx(sv.hs_norm()).epsilon(1e-10));
        }
    }
}

TEST_CASE("expm_skew_hermitian") {
    SUBCASE("diagonal exponential") {
        const Operator u =
            ops::expm_skew_hermitian(Operator::hermitian(ops::pauli_z()), M_PI);
        CHECK(std::abs(u(0, 0) - std::exp(Complex(0.0, -M_PI))) < 1e-14);
        CHECK(std::abs(u(1, 1) - std::exp(Complex(0.0, +M_PI))) < 1e-14);
        CHECK(std::abs(u(0, 1)) < 1e-14);
    }

    SUBCASE("scale zero gives identity") {
        const Operator u = ops::expm_skew_hermitian(Operator::hermitian(ops::pauli_x()), 0.0);
        CHECK(oracle::max_abs_diff(u.mat(), Matrix::Identity(2, 2)) < 1e-15);
    }

    SUBCASE("matches 20-term Taylor series") {
        std::mt19937_64 gen(7);
        const Matrix h = rng::hermitian_uniform(gen, 3);
        const Operator u = ops::expm_skew_hermitian(Operator::hermitian(h), 0.1);
        const Matrix ref = oracle::taylor_expm(Complex(0.0, -0.1) * h, 20);
        CHECK(oracle::max_abs_diff(u.mat(), ref) < 1e-12);
    }

    SUBCASE("one-parameter group property") {
        std::mt19937_64 gen(21);
        for (int trial = 0; trial < 20; ++trial) {
            const Matrix h = rng::hermitian_uniform(gen, 4);
            const double s = rng::uniform(gen, -2.0, 2.0);
            const double t = rng::uniform(gen, -2.0, 2.0);
            const Operator hs = Operator::hermitian(h);
            const Matrix lhs = ops::expm_skew_hermitian(hs, s).mat() *
                               ops::expm_skew_hermitian(hs, t).mat();
            const Matrix rhs = ops::expm_skew_hermitian(hs, s + t).mat();
            CHECK(ops::op_norm(lhs - rhs) < 1e-10);
        }
    }

    SUBCASE("result passes the unitarity invariant") {
        std::mt19937_64 gen(33);
        const Matrix h = rng::hermitian_uniform(gen, 5);
        const Operator u = ops::expm_skew_hermitian(Operator::hermitian(h), 1.7);
        CHECK_NOTHROW(Operator::unitary(u.mat()));
    }
}

TEST_CASE("unitary_log") {
    SUBCASE("identity maps to zero on both branches") {
        const Operator eye = Operator::identity(3);
        const auto principal = ops::unitary_log(eye, ops::LogBranch::principal);
        const auto nonneg = ops::unitary_log(eye, ops::LogBranch::nonnegative);
        CHECK(ops::op_norm(principal.omega.mat()) < 1e-12);
        CHECK(ops::op_norm(nonneg.omega.mat()) < 1e-12);
        CHECK_FALSE(principal.near_branch_cut);
        // Phase 0 sits exactly on the nonnegative-branch cut.
        CHECK(nonneg.near_branch_cut);
    }

    SUBCASE("diagonal phases on the principal branch") {
        Matrix u = Matrix::Zero(2, 2);
        u(0, 0) = std::exp(Complex(0.0, -0.3));
        u(1, 1) = std::exp(Complex(0.0, -1.1));
        const auto log = ops::unitary_log(Operator::unitary(u), ops::LogBranch::principal);
        const auto eig = ops::hermitian_eig(log.omega);
        CHECK(eig.eigenvalues(0) == doctest::Approx(0.3).epsilon(1e-12));
        CHECK(eig.eigenvalues(1) == doctest::Approx(1.1).epsilon(1e-12));
        CHECK_FALSE(log.near_branch_cut);
    }

    SUBCASE("nonnegative branch wraps negative phases") {
        Matrix u = Matrix::Zero(2, 2);
        u(0, 0) = std::exp(Complex(0.0, +0.4));  // phase -0.4 -> 2*pi - 0.4
        u(1, 1) = std::exp(Complex(0.0, -1.0));
        const auto log = ops::unitary_log(Operator::unitary(u), ops::LogBranch::nonnegative);
        const auto eig = ops::hermitian_eig(log.omega);
        CHECK(eig.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(eig.eigenvalues(1) == doctest::Approx(2.0 * M_PI - 0.4).epsilon(1e-12));
    }

    SUBCASE("round trip through the exponential") {
        std::mt19937_64 gen(404);
        for (int trial = 0; trial < 25; ++trial) {
            const Matrix h = rng::hermitian_uniform(gen, 2 + static_cast<Eigen::Index>(gen() % 3));
            const Operator u = ops::expm_skew_hermitian(Operator::hermitian(h), 0.7);
            for (auto branch : {ops::LogBranch::principal, ops::LogBranch::nonnegative}) {
                const auto log = ops::unitary_log(u, branch);
                const Operator back = ops::expm_skew_hermitian(log.omega, 1.0 / hbar());
                CHECK(ops::op_norm(back.mat() - u.mat()) < 1e-10);
            }
        }
    }

    SUBCASE("flags eigenphases near the branch cut") {
        Matrix u = Matrix::Zero(2, 2);
        u(0, 0) = std::exp(Complex(0.0, M_PI - 1e-11));
        u(1, 1) = std::exp(Complex(0.0, -0.2));
        const auto log = ops::unitary_log(Operator::unitary(u), ops::LogBranch::principal);
        CHECK(log.near_branch_cut);
    }

    SUBCASE("hbar scales the generator") {
        set_hbar(2.0);
        Matrix u = Matrix::Zero(2, 2);
        u(0, 0) = std::exp(Complex(0.0, -0.5));
        u(1, 1) = 1.0;
        const auto log = ops::unitary_log(Operator::unitary(u), ops::LogBranch::principal);
        const auto eig = ops::hermitian_eig(log.omega);
        CHECK(eig.eigenvalues.maxCoeff() == doctest::Approx(1.0).epsilon(1e-12));
        set_hbar(1.0);
    }

    SUBCASE("rejects non-unitary input") {
        CHECK_THROWS_AS(ops::unitary_log(Operator::general(2.0 * Matrix::Identity(2, 2)),
                                         ops::LogBranch::principal),
                        NonUnitaryInput);
    }
}

TEST_CASE("commutator") {
    SUBCASE("self-commutator vanishes") {
        const auto c = ops::commutator(Operator::hermitian(ops::pauli_z()),
                                       Operator::hermitian(ops::pauli_z()));
        CHECK(ops::op_norm(c.mat()) == 0.0);
    }

    SUBCASE("pauli algebra") {
        const Matrix c = ops::commutator(ops::pauli_x(), ops::pauli_y());
        CHECK(oracle::max_abs_diff(c, Complex(0.0, 2.0) * ops::pauli_z()) < 1e-15);
    }

    SUBCASE("matches the elementwise definition") {
        std::mt19937_64 gen(15);
        const Matrix a = random_general(gen, 4);
        const Matrix b = random_general(gen, 4);
        Matrix ref = Matrix::Zero(4, 4);
        for (Eigen::Index i = 0; i < 4; ++i) {
            for (Eigen::Index j = 0; j < 4; ++j) {
                for (Eigen::Index k = 0; k < 4; ++k) {
                    ref(i, j) += a(i, k) * b(k, j) - b(i, k) * a(k, j);
                }
            }
        }
        CHECK(oracle::max_abs_diff(ops::commutator(a, b), ref) < 1e-13);
    }

    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(ops::commutator(Matrix::Identity(2, 2), Matrix::Identity(3, 3)),
                        DimensionMismatch);
    }
}

TEST_CASE("states") {
    SUBCASE("normalization") {
        Vector v(2);
        v << 3.0, 4.0;
        const auto psi = ops::PureState::normalized(v);
        CHECK(psi.amp.norm() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK_THROWS_AS(ops::PureState::normalized(Vector::Zero(2)), InvalidParams);
    }

    SUBCASE("density matrix validation") {
        CHECK_NOTHROW(ops::DensityMatrix::validated(ops::ket_plus().density()));
        CHECK_NOTHROW(ops::DensityMatrix::maximally_mixed(4));
        Matrix bad = 0.5 * ops::pauli_z() + 0.5 * Matrix::Identity(2, 2);
        bad(1, 1) = -0.1;  // negative eigenvalue, trace off
        CHECK_THROWS_AS(ops::DensityMatrix::validated(bad), Error);
    }
}

TEST_CASE("global hbar configuration") {
    CHECK(hbar() == 1.0);
    CHECK_THROWS_AS(set_hbar(0.0), InvalidParams);
    CHECK_THROWS_AS(set_hbar(-1.0), InvalidParams);
    set_hbar(3.5);
    CHECK(hbar() == 3.5);
    set_hbar(1.0);
}
