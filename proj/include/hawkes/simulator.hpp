#pragma once

#include "hawkes/baseline.hpp"
#include "hawkes/events.hpp"
#include "hawkes/kernels.hpp"

#include <cstdint>
#include <stdexcept>

namespace hawkes {

struct SimConfig {
    Kernel kernel;
    Baseline baseline;
    double horizon = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t max_events = 10'000'000; // explosion guard
};

/// Raised when an explosive parameterization exceeds the event cap.
struct ExplosionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact simulation by thinning. The candidate-rate bound is the sum of the
/// positive exponential components (non-increasing between events) plus the
/// baseline maximum over the bracketing segment. Identical seeds give
/// identical output. Warns on stderr when total_mass >= 1 (non-stationary
/// regime) but still simulates, subject to the event cap.
EventSeries simulate(const SimConfig& config);

} // namespace hawkes
