#pragma once

#include <Eigen/Core>
#include <nlohmann/json_fwd.hpp>

namespace hawkes {

enum class BaselineKind { Constant, PiecewiseLinear };

/// Exogenous intensity mu_t: either constant or piecewise linear between
/// fixed knots. Immutable after construction; freely shareable.
class Baseline {
public:
    static Baseline constant(double mu);

    /// knot_times strictly increasing, first knot at 0; knot_values >= 0,
    /// one per knot. Evaluation outside [first, last] knot is a domain error.
    static Baseline piecewise_linear(Eigen::ArrayXd knot_times, Eigen::ArrayXd knot_values);

    BaselineKind kind() const { return kind_; }
    double constant_mu() const { return mu_; }
    const Eigen::ArrayXd& knot_times() const { return knot_times_; }
    const Eigen::ArrayXd& knot_values() const { return knot_values_; }

    /// Number of free values (1 for constant, knot count for pwl).
    int num_params() const;

    /// Mean level: mu for constant, time-average over the knot span for pwl.
    double mean_level() const;

private:
    Baseline() = default;
    BaselineKind kind_ = BaselineKind::Constant;
    double mu_ = 0.0;
    Eigen::ArrayXd knot_times_;
    Eigen::ArrayXd knot_values_;
};

/// mu(t). Constant baselines accept any t >= 0; piecewise-linear ones
/// require t within the knot span. Throws std::domain_error otherwise.
double eval_baseline(const Baseline& baseline, double t);

/// Exact integral of mu over [a, b] (trapezoid per segment is exact).
/// Throws std::domain_error if a > b or [a, b] leaves the domain.
double integrate_baseline(const Baseline& baseline, double a, double b);

/// Default daily knot times {0h, 5h, 9h, 12h, 16h, end} in seconds, clipped
/// to the window horizon; for multi-day windows the daily pattern repeats.
Eigen::ArrayXd daily_knot_times(double horizon);

/// JSON wire format: {"type":"constant","mu":x} or
/// {"type":"pwl","knot_times":[...],"knot_values":[...]}.
nlohmann::json to_json(const Baseline& baseline);
Baseline baseline_from_json(const nlohmann::json& j);

} // namespace hawkes
