// oracles.hpp — Test-only reference implementations, deliberately independent
// of the library's numerical paths: a cyclic complex Jacobi eigensolver, a
// characteristic-polynomial root finder (Faddeev–LeVerrier coefficients plus
// Durand–Kerner iteration), a Taylor-series matrix exponential, brute-force
// singular values, and dense scalar quadrature.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Hermitian eigenvalues (ascending) by cyclic Jacobi rotations. The (p, q)
// off-diagonal entry is phased to a real value, then killed with a real
// rotation: G(p,p)=c, G(p,q)=-s, G(q,p)=s e^{-i phi}, G(q,q)=c e^{-i phi}.
inline std::vector<double> jacobi_hermitian_eigenvalues(Matrix h) {
    const Eigen::Index n = h.rows();
    if (n != h.cols()) throw std::invalid_argument("jacobi: square input required");
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) off = std::max(off, std::abs(h(p, q)));
        }
        const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
        if (off <= 1e-15 * scale) break;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const Complex w = h(p, q);
                if (std::abs(w) <= 1e-18 * scale) continue;
                const double phi = std::arg(w);
                const double a = h(p, p).real();
                const double b = h(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * std::abs(w), a - b);
                const double c = std::cos(theta), s = std::sin(theta);
                Matrix g = Matrix::Identity(n, n);
                g(p, p) = c;
                g(p, q) = -s;
                g(q, p) = s * std::exp(Complex(0.0, -phi));
                g(q, q) = c * std::exp(Complex(0.0, -phi));
                h = (g.adjoint() * h * g).eval();
            }
        }
    }
    std::vector<double> ev(n);
    for (Eigen::Index i = 0; i < n; ++i) ev[i] = h(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

// Characteristic polynomial coefficients by Faddeev–LeVerrier:
// p(x) = x^n + c[1] x^{n-1} + ... + c[n].
inline std::vector<Complex> char_poly_coeffs(const Matrix& a) {
    const Eigen::Index n = a.rows();
    std::vector<Complex> c(n + 1);
    c[0] = 1.0;
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        m = a * m + c[k - 1] * Matrix::Identity(n, n);
        c[k] = -(a * m).trace() / static_cast<double>(k);
    }
    return c;
}

// All roots of a monic polynomial by Durand–Kerner iteration.
inline std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs) {
    const std::size_t degree = coeffs.size() - 1;
    auto eval = [&](Complex x) {
        Complex acc = coeffs[0];
        for (std::size_t i = 1; i < coeffs.size(); ++i) acc = acc * x + coeffs[i];
        return acc;
    };
    std::vector<Complex> roots(degree);
    const Complex base(0.4, 0.9);
    Complex pw(1.0, 0.0);
    for (std::size_t i = 0; i < degree; ++i) {
        pw *= base;
        roots[i] = pw;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (std::size_t i = 0; i < degree; ++i) {
            Complex denom(1.0, 0.0);
            for (std::size_t j = 0; j < degree; ++j) {
                if (j != i) denom *= roots[i] - roots[j];
            }
            const Complex delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return roots;
}

// Eigenvalues of a Hermitian matrix via its characteristic polynomial,
// returned ascending (imaginary parts of the roots must be negligible).
inline std::vector<double> char_poly_hermitian_eigenvalues(const Matrix& a) {
    const std::vector<Complex> roots = poly_roots(char_poly_coeffs(a));
    std::vector<double> ev;
    ev.reserve(roots.size());
    for (const Complex& r : roots) ev.push_back(r.real());
    std::sort(ev.begin(), ev.end());
    return ev;
}

// Plain Taylor series for exp(M).
inline Matrix taylor_expm(const Matrix& m, int terms) {
    const Eigen::Index n = m.rows();
    Matrix acc = Matrix::Identity(n, n);
    Matrix term = Matrix::Identity(n, n);
    for (int k = 1; k <= terms; ++k) {
        term = (term * m / static_cast<double>(k)).eval();
        acc += term;
    }
    return acc;
}

// Singular values (descending) as sqrt of the Jacobi eigenvalues of A†A.
inline std::vector<double> brute_svd_values(const Matrix& a) {
    std::vector<double> ev = jacobi_hermitian_eigenvalues(a.adjoint() * a);
    std::vector<double> sv;
    sv.reserve(ev.size());
    for (auto it = ev.rbegin(); it != ev.rend(); ++it) sv.push_back(std::sqrt(std::max(0.0, *it)));
    return sv;
}

// Dense composite Simpson for scalar integrands.
inline double simpson(const std::function<double(double)>& f, double lo, double hi, int nodes) {
    if (nodes < 3 || nodes % 2 == 0) throw std::invalid_argument("simpson: odd nodes >= 3");
    const double h = (hi - lo) / static_cast<double>(nodes - 1);
    double acc = f(lo) + f(hi);
    for (int j = 1; j < nodes - 1; ++j) {
        acc += ((j % 2 == 1) ? 4.0 : 2.0) * f(lo + static_cast<double>(j) * h);
    }
    return acc * h / 3.0;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace oracle
