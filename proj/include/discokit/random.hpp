#pragma once

#include "core.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <cstdlib>
#include <random>
#include <thread>
#include <vector>

namespace discokit {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent generator for sample `index` under `seed`; results do not depend on
/// evaluation order, so per-point work can be split across threads freely.
inline std::mt19937_64 point_stream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

inline VectorXd gaussian_vector(std::mt19937_64& gen, Index n) {
    std::normal_distribution<double> normal(0.0, 1.0);
    VectorXd v(n);
    for (Index i = 0; i < n; ++i) v(i) = normal(gen);
    return v;
}

/// Uniform point on the unit sphere S^{n-1} (n = 1 gives +-1).
inline VectorXd random_unit_vector(std::mt19937_64& gen, Index n) {
    for (;;) {
        VectorXd v = gaussian_vector(gen, n);
        const double norm = v.norm();
        if (norm > 1e-12) return v / norm;
    }
}

/// Thread count from DISCOKIT_THREADS (0 or unset = hardware concurrency).
inline unsigned thread_count() {
    unsigned n = 0;
    if (const char* env = std::getenv("DISCOKIT_THREADS")) n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

/// Runs fn(i) for i in [0, n) over contiguous chunks. fn must only write to slot i.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                const std::size_t lo = n * t / threads;
                const std::size_t hi = n * (t + 1) / threads;
                try {
                    for (std::size_t i = lo; i < hi; ++i) fn(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace discokit
