#include "hawkes/likelihood.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hawkes {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct ComponentArrays {
    Eigen::ArrayXd weights;
    Eigen::ArrayXd timescales;
};

ComponentArrays component_arrays(const Kernel& kernel) {
    const auto& comps = to_exp_components(kernel);
    ComponentArrays a;
    a.weights.resize(static_cast<Eigen::Index>(comps.size()));
    a.timescales.resize(static_cast<Eigen::Index>(comps.size()));
    for (std::size_t j = 0; j < comps.size(); ++j) {
        a.weights[static_cast<Eigen::Index>(j)] = comps[j].weight;
        a.timescales[static_cast<Eigen::Index>(j)] = comps[j].timescale;
    }
    return a;
}

// Family-formula integral of phi over [0, s]; avoids the component cache so
// the direct oracle stays an independent route.
double integral_family(const Kernel& kernel, double s) {
    switch (kernel.family()) {
        case KernelFamily::ExpSum: {
            double acc = 0.0;
            for (const auto& c : kernel.components())
                acc += c.weight * c.timescale * -std::expm1(-s / c.timescale);
            return acc;
        }
        case KernelFamily::PowerLaw:
        case KernelFamily::PowerLawCutoff:
        case KernelFamily::PowerLawExtra: {
            const double eps = kernel.epsilon();
            double acc = 0.0;
            double ai = kernel.tau0();
            for (int i = 0; i < kernel.num_terms(); ++i, ai *= kernel.spacing())
                acc += std::pow(ai, -eps) * -std::expm1(-s / ai);
            if (kernel.family() == KernelFamily::PowerLawCutoff) {
                const double a_minus1 = kernel.tau0() / kernel.spacing();
                acc -= kernel.cutoff_s() * a_minus1 * -std::expm1(-s / a_minus1);
            } else if (kernel.family() == KernelFamily::PowerLawExtra) {
                acc += kernel.extra_weight() * kernel.extra_timescale() *
                       -std::expm1(-s / kernel.extra_timescale());
            }
            return kernel.mass_n() / kernel.norm_z() * acc;
        }
    }
    throw std::logic_error("unknown kernel family");
}

} // namespace

double log_likelihood(const EventSeries& events, const Kernel& kernel, const Baseline& baseline) {
    const auto [weights, timescales] = component_arrays(kernel);
    const Eigen::Index n = events.size();
    const double T = events.horizon;

    Eigen::ArrayXd state = Eigen::ArrayXd::Zero(weights.size()); // A_j
    Eigen::ArrayXd tail = Eigen::ArrayXd::Zero(weights.size());  // sum_i 1 - exp(-(T-t_i)/tau_j)
    double sum_log = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double t = events.times[i];
        if (i > 0) {
            const double dt = t - events.times[i - 1];
            state = (-dt / timescales).exp() * (state + 1.0);
        }
        const double lambda = eval_baseline(baseline, t) + (weights * state).sum();
        if (!(lambda > 0.0) || !std::isfinite(lambda)) return kNegInf;
        sum_log += std::log(lambda);
        tail += -((-(T - t) / timescales).exp() - 1.0);
    }
    const double compensator =
        integrate_baseline(baseline, 0.0, T) + (weights * timescales * tail).sum();
    return sum_log - compensator;
}

double log_likelihood_direct(const EventSeries& events, const Kernel& kernel,
                             const Baseline& baseline) {
    const Eigen::Index n = events.size();
    const double T = events.horizon;
    double sum_log = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        double lambda = eval_baseline(baseline, events.times[i]);
        for (Eigen::Index k = 0; k < i; ++k)
            lambda += evaluate(kernel, events.times[i] - events.times[k]);
        if (!(lambda > 0.0) || !std::isfinite(lambda)) return kNegInf;
        sum_log += std::log(lambda);
    }
    double compensator = integrate_baseline(baseline, 0.0, T);
    for (Eigen::Index i = 0; i < n; ++i)
        compensator += integral_family(kernel, T - events.times[i]);
    return sum_log - compensator;
}

Eigen::ArrayXd rescaled_durations(const EventSeries& events, const Kernel& kernel,
                                  const Baseline& baseline) {
    const Eigen::Index n = events.size();
    if (n < 2) throw std::invalid_argument("rescaled durations need at least two events");
    const auto [weights, timescales] = component_arrays(kernel);

    // B_j(i) = sum_{t_k <= t_i} exp(-(t_i - t_k)/tau_j); the increment over
    // (t_{i-1}, t_i] is integral mu + sum_j w_j tau_j B_j(i-1) (1 - exp(-dt/tau_j)).
    Eigen::ArrayXd state = Eigen::ArrayXd::Ones(weights.size()); // B at t_1 (first event)
    Eigen::ArrayXd thetas(n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
        const double dt = events.times[i] - events.times[i - 1];
        const Eigen::ArrayXd decay = (-dt / timescales).exp();
        const double kernel_part = (weights * timescales * state * (1.0 - decay)).sum();
        thetas[i - 1] =
            integrate_baseline(baseline, events.times[i - 1], events.times[i]) + kernel_part;
        state = decay * state + 1.0;
    }
    return thetas;
}

LogLikWithGrad exp_sum_log_likelihood_grad(const EventSeries& events,
                                           const Eigen::ArrayXd& weights,
                                           const Eigen::ArrayXd& timescales, double mu) {
    const Eigen::Index n = events.size();
    const Eigen::Index m = weights.size();
    const double T = events.horizon;

    Eigen::ArrayXd state = Eigen::ArrayXd::Zero(m);     // A_j(i)
    Eigen::ArrayXd state_dt = Eigen::ArrayXd::Zero(m);  // C_j(i) = sum (t_i-t_k) exp(-(t_i-t_k)/tau_j)
    Eigen::ArrayXd d_weight = Eigen::ArrayXd::Zero(m);
    Eigen::ArrayXd d_tau = Eigen::ArrayXd::Zero(m);
    double sum_log = 0.0;
    double d_mu = 0.0;
    Eigen::ArrayXd tail = Eigen::ArrayXd::Zero(m);      // sum_i 1 - exp(-s_i/tau_j), s_i = T - t_i
    Eigen::ArrayXd tail_s = Eigen::ArrayXd::Zero(m);    // sum_i s_i exp(-s_i/tau_j)

    for (Eigen::Index i = 0; i < n; ++i) {
        const double t = events.times[i];
        if (i > 0) {
            const double dt = t - events.times[i - 1];
            const Eigen::ArrayXd decay = (-dt / timescales).exp();
            state_dt = decay * (dt * (state + 1.0) + state_dt);
            state = decay * (state + 1.0);
        }
        const double lambda = mu + (weights * state).sum();
        if (!(lambda > 0.0) || !std::isfinite(lambda))
            return {kNegInf, Eigen::VectorXd::Zero(1 + 2 * m)};
        sum_log += std::log(lambda);
        const double inv_lambda = 1.0 / lambda;
        d_mu += inv_lambda;
        d_weight += state * inv_lambda;
        d_tau += weights * state_dt / timescales.square() * inv_lambda;

        const double s = T - t;
        const Eigen::ArrayXd decay_tail = (-s / timescales).exp();
        tail += 1.0 - decay_tail;
        tail_s += s * decay_tail;
    }

    d_mu -= T;
    d_weight -= timescales * tail;
    d_tau -= weights * (tail - tail_s / timescales);

    const double value = sum_log - mu * T - (weights * timescales * tail).sum();
    Eigen::VectorXd grad(1 + 2 * m);
    grad[0] = d_mu;
    for (Eigen::Index j = 0; j < m; ++j) {
        grad[1 + 2 * j] = d_weight[j];
        grad[2 + 2 * j] = d_tau[j];
    }
    return {value, std::move(grad)};
}

} // namespace hawkes
