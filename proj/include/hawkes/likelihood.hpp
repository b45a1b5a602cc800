#pragma once

#include "hawkes/baseline.hpp"
#include "hawkes/events.hpp"
#include "hawkes/kernels.hpp"

#include <Eigen/Core>

namespace hawkes {

/// Log-likelihood sum_i log lambda(t_i) - integral(0,T) lambda, computed with
/// the per-component O(N) recursion A_j(i) = exp(-dt_i/tau_j) (1 + A_j(i-1))
/// and the closed-form compensator. The kernel acts on the strict past only.
/// Returns -infinity when lambda(t_i) <= 0 at some event (possible for the
/// cutoff family combined with a tiny baseline); optimizers treat that as a
/// rejected point.
double log_likelihood(const EventSeries& events, const Kernel& kernel, const Baseline& baseline);

/// Independent O(N^2) oracle: sums phi(t_i - t_k) explicitly through the
/// family formula, no recursion shared with log_likelihood.
double log_likelihood_direct(const EventSeries& events, const Kernel& kernel,
                             const Baseline& baseline);

/// Time-rescaled durations theta_i = integral(t_{i-1}, t_i) lambda-hat dt for
/// i = 2..N (N-1 values; no duration precedes the first event).
/// Throws std::invalid_argument when N < 2.
Eigen::ArrayXd rescaled_durations(const EventSeries& events, const Kernel& kernel,
                                  const Baseline& baseline);

/// Log-likelihood with analytic gradient for a free exponential sum and a
/// constant baseline. Parameter order: [mu, w_1, tau_1, ..., w_M, tau_M].
struct LogLikWithGrad {
    double value;
    Eigen::VectorXd gradient;
};
LogLikWithGrad exp_sum_log_likelihood_grad(const EventSeries& events,
                                           const Eigen::ArrayXd& weights,
                                           const Eigen::ArrayXd& timescales, double mu);

} // namespace hawkes
