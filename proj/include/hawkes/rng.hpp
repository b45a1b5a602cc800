#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace hawkes {

/// Name of the generator algorithm, recorded in output metadata so that
/// runs can be reproduced by any implementation of the same generator.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64";

/// Deterministic RNG. Wraps std::mt19937_64 (whose output sequence is pinned
/// by the C++ standard) and derives variates from raw 64-bit draws only, so
/// results are identical across standard libraries and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Log-uniform draw over [lo, hi], lo > 0.
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    /// Exponential variate with the given rate (mean 1/rate).
    double exponential(double rate) {
        // -log1p(-u) maps u in [0,1) to [0,inf) without hitting log(0).
        return -std::log1p(-uniform01()) / rate;
    }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace detail

/// Derives a child seed from a master seed and a task label. A single --seed
/// fans out to independent sub-streams via seed XOR hash(label), mixed
/// through splitmix64.
inline std::uint64_t split_seed(std::uint64_t seed, std::string_view task_label) {
    return detail::splitmix64(seed ^ detail::fnv1a64(task_label));
}

/// Indexed variant for per-cell seeds in grids: label plus a cell index.
inline std::uint64_t split_seed(std::uint64_t seed, std::string_view task_label,
                                std::uint64_t index) {
    return detail::splitmix64(split_seed(seed, task_label) + index);
}

} // namespace hawkes
