#pragma once

#include <Eigen/Core>

#include <functional>

namespace hawkes {

/// Objective callback: returns f(x) and fills grad (same size as x).
/// May return +infinity (or NaN) for infeasible points; the line search
/// backs off. grad need only be valid when f is finite.
using ObjectiveFn = std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)>;

struct LbfgsOptions {
    int memory = 8;
    int max_evaluations = 2000;
    double f_tol = 1e-9;   // relative objective change
    double g_tol = 1e-6;   // gradient max-norm
    double wolfe_c1 = 1e-4;
    double wolfe_c2 = 0.9;
};

struct LbfgsResult {
    Eigen::VectorXd x;
    double f = 0.0;
    int n_evaluations = 0;
    bool converged = false;
};

/// Limited-memory BFGS (two-loop recursion) with a strong-Wolfe line search.
/// Minimizes f; stops when the relative change in f drops below f_tol, the
/// gradient max-norm drops below g_tol, or the evaluation budget is spent.
LbfgsResult minimize(const ObjectiveFn& objective, const Eigen::VectorXd& x0,
                     const LbfgsOptions& options = {});

/// Smooth bijection between a box [lo, hi]^d and R^d, used to run the
/// unconstrained optimizer under per-parameter bounds:
/// x = lo + (hi - lo) * sigmoid(y). Gradients chain through dx/dy.
class BoxTransform {
public:
    BoxTransform(Eigen::VectorXd lower, Eigen::VectorXd upper);

    Eigen::Index size() const { return lower_.size(); }
    const Eigen::VectorXd& lower() const { return lower_; }
    const Eigen::VectorXd& upper() const { return upper_; }

    Eigen::VectorXd to_natural(const Eigen::VectorXd& y) const;
    Eigen::VectorXd to_unconstrained(const Eigen::VectorXd& x) const;
    /// dx_i/dy_i at the unconstrained point y.
    Eigen::VectorXd jacobian_diag(const Eigen::VectorXd& y) const;
    /// Pulls x strictly inside the box before inverting (guards endpoints).
    Eigen::VectorXd clamp_interior(const Eigen::VectorXd& x) const;

private:
    Eigen::VectorXd lower_;
    Eigen::VectorXd upper_;
};

} // namespace hawkes
