#include "hawkes/baseline.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hawkes {

Baseline Baseline::constant(double mu) {
    if (!std::isfinite(mu) || mu < 0.0)
        throw std::invalid_argument("constant baseline mu must be finite and >= 0");
    Baseline b;
    b.kind_ = BaselineKind::Constant;
    b.mu_ = mu;
    return b;
}

Baseline Baseline::piecewise_linear(Eigen::ArrayXd knot_times, Eigen::ArrayXd knot_values) {
    if (knot_times.size() < 2)
        throw std::invalid_argument("piecewise-linear baseline needs at least two knots");
    if (knot_times.size() != knot_values.size())
        throw std::invalid_argument("knot_times and knot_values must have equal length");
    if (knot_times[0] != 0.0)
        throw std::invalid_argument("first knot must sit at t = 0");
    for (Eigen::Index i = 0; i < knot_times.size(); ++i) {
        if (!std::isfinite(knot_times[i]) || !std::isfinite(knot_values[i]))
            throw std::invalid_argument("knots must be finite");
        if (knot_values[i] < 0.0)
            throw std::invalid_argument("knot values must be >= 0");
        if (i > 0 && !(knot_times[i] > knot_times[i - 1]))
            throw std::invalid_argument("knot times must be strictly increasing");
    }
    Baseline b;
    b.kind_ = BaselineKind::PiecewiseLinear;
    b.knot_times_ = std::move(knot_times);
    b.knot_values_ = std::move(knot_values);
    return b;
}

int Baseline::num_params() const {
    return kind_ == BaselineKind::Constant ? 1 : static_cast<int>(knot_times_.size());
}

double Baseline::mean_level() const {
    if (kind_ == BaselineKind::Constant) return mu_;
    const double span = knot_times_[knot_times_.size() - 1] - knot_times_[0];
    return integrate_baseline(*this, knot_times_[0], knot_times_[knot_times_.size() - 1]) / span;
}

namespace {

// Index of the segment [knot_i, knot_{i+1}] containing t.
Eigen::Index segment_index(const Eigen::ArrayXd& knots, double t) {
    Eigen::Index lo = 0, hi = knots.size() - 1;
    while (hi - lo > 1) {
        const Eigen::Index mid = (lo + hi) / 2;
        if (knots[mid] <= t)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

} // namespace

double eval_baseline(const Baseline& baseline, double t) {
    if (!std::isfinite(t) || t < 0.0)
        throw std::domain_error("baseline argument t must be finite and >= 0");
    if (baseline.kind() == BaselineKind::Constant) return baseline.constant_mu();
    const auto& kt = baseline.knot_times();
    const auto& kv = baseline.knot_values();
    if (t < kt[0] || t > kt[kt.size() - 1])
        throw std::domain_error("baseline argument t outside the knot span");
    const Eigen::Index i = segment_index(kt, t);
    const double w = (t - kt[i]) / (kt[i + 1] - kt[i]);
    return kv[i] + w * (kv[i + 1] - kv[i]);
}

double integrate_baseline(const Baseline& baseline, double a, double b) {
    if (!(a <= b)) throw std::domain_error("baseline integral needs a <= b");
    if (a < 0.0) throw std::domain_error("baseline integral bounds must be >= 0");
    if (baseline.kind() == BaselineKind::Constant) return baseline.constant_mu() * (b - a);
    const auto& kt = baseline.knot_times();
    if (a < kt[0] || b > kt[kt.size() - 1])
        throw std::domain_error("baseline integral bounds outside the knot span");
    if (a == b) return 0.0;
    const Eigen::Index first = segment_index(kt, a);
    double acc = 0.0;
    for (Eigen::Index i = first; i < kt.size() - 1 && kt[i] < b; ++i) {
        const double lo = std::max(a, kt[i]);
        const double hi = std::min(b, kt[i + 1]);
        if (hi <= lo) continue;
        acc += 0.5 * (eval_baseline(baseline, lo) + eval_baseline(baseline, hi)) * (hi - lo);
    }
    return acc;
}

Eigen::ArrayXd daily_knot_times(double horizon) {
    if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
    constexpr double kDay = 86400.0;
    const double day_pattern[] = {0.0, 5.0 * 3600.0, 9.0 * 3600.0, 12.0 * 3600.0, 16.0 * 3600.0};
    std::vector<double> knots;
    for (double day_start = 0.0; day_start < horizon; day_start += kDay)
        for (double offset : day_pattern) {
            const double t = day_start + offset;
            if (t < horizon) knots.push_back(t);
        }
    knots.push_back(horizon);
    Eigen::ArrayXd out(static_cast<Eigen::Index>(knots.size()));
    for (std::size_t i = 0; i < knots.size(); ++i) out[static_cast<Eigen::Index>(i)] = knots[i];
    return out;
}

nlohmann::json to_json(const Baseline& baseline) {
    if (baseline.kind() == BaselineKind::Constant)
        return {{"type", "constant"}, {"mu", baseline.constant_mu()}};
    return {{"type", "pwl"},
            {"knot_times", std::vector<double>(baseline.knot_times().begin(), baseline.knot_times().end())},
            {"knot_values", std::vector<double>(baseline.knot_values().begin(), baseline.knot_values().end())}};
}

Baseline baseline_from_json(const nlohmann::json& j) {
    const auto type = j.at("type").get<std::string>();
    if (type == "constant") return Baseline::constant(j.at("mu").get<double>());
    if (type == "pwl") {
        const auto kt = j.at("knot_times").get<std::vector<double>>();
        const auto kv = j.at("knot_values").get<std::vector<double>>();
        Eigen::ArrayXd t = Eigen::Map<const Eigen::ArrayXd>(kt.data(), static_cast<Eigen::Index>(kt.size()));
        Eigen::ArrayXd v = Eigen::Map<const Eigen::ArrayXd>(kv.data(), static_cast<Eigen::Index>(kv.size()));
        return Baseline::piecewise_linear(std::move(t), std::move(v));
    }
    throw std::invalid_argument("unknown baseline type: " + type);
}

} // namespace hawkes
