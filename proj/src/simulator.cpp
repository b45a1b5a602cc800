#include "hawkes/simulator.hpp"

#include "hawkes/rng.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <vector>

namespace hawkes {

namespace {

// End of the baseline segment containing t (horizon for constant baselines):
// within one segment the linear baseline's max sits at an endpoint.
double segment_end(const Baseline& baseline, double t, double horizon) {
    if (baseline.kind() == BaselineKind::Constant) return horizon;
    const auto& kt = baseline.knot_times();
    for (Eigen::Index i = 1; i < kt.size(); ++i)
        if (kt[i] > t) return std::min(kt[i], horizon);
    return horizon;
}

} // namespace

EventSeries simulate(const SimConfig& config) {
    if (!(config.horizon > 0.0)) throw std::invalid_argument("simulation horizon must be positive");
    const double mass = total_mass(config.kernel);
    if (mass >= 1.0)
        std::cerr << "hawkes: warning: kernel mass " << mass
                  << " >= 1 (non-stationary regime); simulation may hit the event cap\n";

    const auto& comps = to_exp_components(config.kernel);
    const Eigen::Index m = static_cast<Eigen::Index>(comps.size());
    Eigen::ArrayXd weights(m), timescales(m);
    for (Eigen::Index j = 0; j < m; ++j) {
        weights[j] = comps[static_cast<std::size_t>(j)].weight;
        timescales[j] = comps[static_cast<std::size_t>(j)].timescale;
    }
    const Eigen::ArrayXd pos_weights = weights.max(0.0);

    Rng rng(config.seed);
    std::vector<double> accepted;
    Eigen::ArrayXd state = Eigen::ArrayXd::Zero(m); // sum over past events of exp(-(t-t_k)/tau_j)
    double t = 0.0;
    const double T = config.horizon;

    while (t < T) {
        const double seg_end = segment_end(config.baseline, t, T);
        const double mu_bound =
            std::max(eval_baseline(config.baseline, t), eval_baseline(config.baseline, seg_end));
        const double bound = mu_bound + (pos_weights * state).sum();
        if (!(bound > 0.0)) { // dead process: nothing can arrive before the next knot
            if (seg_end >= T) break;
            state *= (-(seg_end - t) / timescales).exp();
            t = seg_end;
            continue;
        }
        const double step = rng.exponential(bound);
        if (t + step > seg_end) {
            // Bound only valid within the segment; advance without a trial.
            state *= (-(seg_end - t) / timescales).exp();
            t = seg_end;
            if (t >= T) break;
            continue;
        }
        t += step;
        state *= (-step / timescales).exp();
        const double lambda = eval_baseline(config.baseline, t) + (weights * state).sum();
        if (rng.uniform01() * bound <= lambda) {
            accepted.push_back(t);
            state += 1.0;
            if (accepted.size() > config.max_events)
                throw ExplosionError("simulation exceeded the event cap of " +
                                     std::to_string(config.max_events));
        }
    }

    Eigen::ArrayXd times =
        Eigen::Map<Eigen::ArrayXd>(accepted.data(), static_cast<Eigen::Index>(accepted.size()));
    return make_event_series(std::move(times), T);
}

} // namespace hawkes
