#pragma once

#include <Eigen/Core>
#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace hawkes {

/// One exponential term w * exp(-t / timescale) of a kernel decomposition.
/// The weight is an intensity rate (1/s) and may be negative (the short-lag
/// cutoff family carries one negative term); the timescale is in seconds.
struct ExpComponent {
    double weight = 0.0;
    double timescale = 1.0;

    /// Mass contributed by this component: weight * timescale.
    double mass() const { return weight * timescale; }
};

enum class KernelFamily { ExpSum, PowerLaw, PowerLawCutoff, PowerLawExtra };

/// Wire names fixed by the JSON interface: exp | pl | hbb | plx.
std::string family_name(KernelFamily family);
KernelFamily family_from_name(const std::string& name);

/// A parametric excitation kernel phi(t), reducible to a signed sum of
/// exponential components. Four families:
///
///   exp  phi(t) = sum_i alpha_i exp(-t/tau_i), alpha_i >= 0
///   pl   phi(t) = (n/Z) sum_{i=0}^{M-1} a_i^-(1+eps) exp(-t/a_i),  a_i = tau0 m^i
///   hbb  pl with an extra short-lag drop -S exp(-t/a_{-1}), a_{-1} = tau0/m,
///        S chosen so phi(0) = 0
///   plx  pl plus one free exponential b exp(-t/tau_x)
///
/// Z normalizes the pl-family total mass to exactly n. All normalizers are
/// closed-form: Z_pl = sum a_i^-eps, S = sum a_i^-(1+eps),
/// Z_hbb = Z_pl - S a_{-1}, Z_plx = Z_pl + b tau_x.
///
/// Immutable after construction; safe to share and evaluate concurrently.
class Kernel {
public:
    /// Free exponential sum. Weights must be >= 0; components are put in
    /// canonical order (increasing timescale).
    static Kernel exp_sum(std::vector<ExpComponent> components);

    static Kernel power_law(double mass, double epsilon, double tau0,
                            int num_terms = 15, double spacing = 2.0);
    static Kernel power_law_cutoff(double mass, double epsilon, double tau0,
                                   int num_terms = 15, double spacing = 2.0);
    static Kernel power_law_extra(double mass, double epsilon, double tau0,
                                  double extra_weight, double extra_timescale,
                                  int num_terms = 15, double spacing = 2.0);

    KernelFamily family() const { return family_; }

    /// Canonical exponential decomposition, sorted by increasing timescale.
    const std::vector<ExpComponent>& components() const { return components_; }

    // Power-law family parameters (meaningless for exp sums).
    double mass_n() const { return mass_n_; }
    double epsilon() const { return epsilon_; }
    double tau0() const { return tau0_; }
    int num_terms() const { return num_terms_; }
    double spacing() const { return spacing_; }
    double extra_weight() const { return extra_weight_; }
    double extra_timescale() const { return extra_timescale_; }
    double norm_z() const { return norm_z_; }
    double cutoff_s() const { return cutoff_s_; }

private:
    Kernel() = default;

    KernelFamily family_ = KernelFamily::ExpSum;
    std::vector<ExpComponent> components_;
    double mass_n_ = 0.0;
    double epsilon_ = 0.0;
    double tau0_ = 0.0;
    int num_terms_ = 0;
    double spacing_ = 0.0;
    double extra_weight_ = 0.0;
    double extra_timescale_ = 0.0;
    double norm_z_ = 0.0;
    double cutoff_s_ = 0.0;
};

/// phi(t) from the family formula. Throws std::domain_error for t < 0.
double evaluate(const Kernel& kernel, double t);

/// Exact total mass integral(0,inf) phi = branching ratio. Closed form:
/// sum alpha_i tau_i for exponential sums, n for the power-law families.
double total_mass(const Kernel& kernel);

/// integral(0,t) phi(s) ds = sum_j w_j tau_j (1 - exp(-t/tau_j)).
/// Throws std::domain_error for t < 0.
double integral_to(const Kernel& kernel, double t);

/// The canonical decomposition as an operation (same list components() holds).
const std::vector<ExpComponent>& to_exp_components(const Kernel& kernel);

/// JSON wire format: {"family": "exp|pl|hbb|plx", "params": {...},
/// "M": int, "m": float}. Field names fixed.
nlohmann::json to_json(const Kernel& kernel);
Kernel kernel_from_json(const nlohmann::json& j);

} // namespace hawkes
