#include "qsl/common.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace qsl {

namespace {
std::atomic<double> g_hbar{1.0};
}

double hbar() noexcept { return g_hbar.load(std::memory_order_relaxed); }

void set_hbar(double value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw InvalidParams("set_hbar: value must be finite and > 0");
    }
    g_hbar.store(value, std::memory_order_relaxed);
}

std::string to_g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

int thread_budget() {
    if (const char* env = std::getenv("QSL_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t threads =
        std::min<std::size_t>(static_cast<std::size_t>(thread_budget()), std::max<std::size_t>(n, 1));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += threads) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

namespace rng {

std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::pair<double, double> gaussian_pair(std::mt19937_64& g) {
    double u1 = uniform01(g);
    while (u1 <= 0.0) u1 = uniform01(g);
    const double u2 = uniform01(g);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

Vector gaussian_state(std::mt19937_64& g, Eigen::Index dim) {
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const auto [re, im] = gaussian_pair(g);
        v(i) = Complex(re, im);
    }
    const double nrm = v.norm();
    if (nrm == 0.0) {
        v.setZero();
        v(0) = 1.0;
        return v;
    }
    return v / nrm;
}

Matrix hermitian_uniform(std::mt19937_64& g, Eigen::Index dim) {
    Matrix a(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            const double re = uniform(g, -1.0, 1.0);
            const double im = uniform(g, -1.0, 1.0);
            a(i, j) = Complex(re, im);
        }
    }
    return 0.5 * (a + a.adjoint());
}

}  // namespace rng

}  // namespace qsl
