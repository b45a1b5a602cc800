#include "hawkes/kernels.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hawkes {

namespace {

void check_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + " must be finite");
}

void check_positive(double x, const char* what) {
    check_finite(x, what);
    if (!(x > 0.0)) throw std::invalid_argument(std::string(what) + " must be > 0");
}

void sort_canonical(std::vector<ExpComponent>& comps) {
    std::stable_sort(comps.begin(), comps.end(),
                     [](const ExpComponent& a, const ExpComponent& b) {
                         return a.timescale < b.timescale;
                     });
}

void check_pl_params(double mass, double epsilon, double tau0, int num_terms, double spacing) {
    check_finite(mass, "mass n");
    if (!(mass > 0.0) || !(mass < 1.0))
        throw std::invalid_argument("power-law mass n must lie in (0, 1)");
    check_finite(epsilon, "epsilon");
    if (epsilon < 0.0 || epsilon > 5.0)
        throw std::invalid_argument("epsilon must lie in [0, 5]");
    check_positive(tau0, "tau0");
    if (num_terms < 1) throw std::invalid_argument("number of terms M must be >= 1");
    if (!(spacing > 1.0)) throw std::invalid_argument("spacing m must be > 1");
}

// a_i = tau0 * m^i for i = 0..M-1.
std::vector<double> pl_timescales(double tau0, int num_terms, double spacing) {
    std::vector<double> a(static_cast<std::size_t>(num_terms));
    double cur = tau0;
    for (int i = 0; i < num_terms; ++i, cur *= spacing) a[static_cast<std::size_t>(i)] = cur;
    return a;
}

} // namespace

std::string family_name(KernelFamily family) {
    switch (family) {
        case KernelFamily::ExpSum: return "exp";
        case KernelFamily::PowerLaw: return "pl";
        case KernelFamily::PowerLawCutoff: return "hbb";
        case KernelFamily::PowerLawExtra: return "plx";
    }
    throw std::logic_error("unknown kernel family");
}

KernelFamily family_from_name(const std::string& name) {
    if (name == "exp") return KernelFamily::ExpSum;
    if (name == "pl") return KernelFamily::PowerLaw;
    if (name == "hbb") return KernelFamily::PowerLawCutoff;
    if (name == "plx") return KernelFamily::PowerLawExtra;
    throw std::invalid_argument("unknown kernel family name: " + name);
}

Kernel Kernel::exp_sum(std::vector<ExpComponent> components) {
    if (components.empty()) throw std::invalid_argument("exponential sum needs at least one component");
    for (const auto& c : components) {
        check_finite(c.weight, "component weight");
        if (c.weight < 0.0)
            throw std::invalid_argument("exponential-sum weights must be >= 0");
        check_positive(c.timescale, "component timescale");
    }
    sort_canonical(components);
    Kernel k;
    k.family_ = KernelFamily::ExpSum;
    k.components_ = std::move(components);
    return k;
}

Kernel Kernel::power_law(double mass, double epsilon, double tau0, int num_terms, double spacing) {
    check_pl_params(mass, epsilon, tau0, num_terms, spacing);
    Kernel k;
    k.family_ = KernelFamily::PowerLaw;
    k.mass_n_ = mass;
    k.epsilon_ = epsilon;
    k.tau0_ = tau0;
    k.num_terms_ = num_terms;
    k.spacing_ = spacing;
    const auto a = pl_timescales(tau0, num_terms, spacing);
    double z = 0.0;
    for (double ai : a) z += std::pow(ai, -epsilon);
    k.norm_z_ = z;
    k.components_.reserve(a.size());
    for (double ai : a)
        k.components_.push_back({mass / z * std::pow(ai, -(1.0 + epsilon)), ai});
    sort_canonical(k.components_);
    return k;
}

Kernel Kernel::power_law_cutoff(double mass, double epsilon, double tau0, int num_terms,
                                double spacing) {
    check_pl_params(mass, epsilon, tau0, num_terms, spacing);
    Kernel k;
    k.family_ = KernelFamily::PowerLawCutoff;
    k.mass_n_ = mass;
    k.epsilon_ = epsilon;
    k.tau0_ = tau0;
    k.num_terms_ = num_terms;
    k.spacing_ = spacing;
    const auto a = pl_timescales(tau0, num_terms, spacing);
    const double a_minus1 = tau0 / spacing;
    double s = 0.0, z = 0.0;
    for (double ai : a) {
        s += std::pow(ai, -(1.0 + epsilon));
        z += std::pow(ai, -epsilon);
    }
    z -= s * a_minus1; // Z > 0 always: sum a_i^-eps (1 - m^-(i+1)) with m > 1
    k.cutoff_s_ = s;
    k.norm_z_ = z;
    k.components_.reserve(a.size() + 1);
    for (double ai : a)
        k.components_.push_back({mass / z * std::pow(ai, -(1.0 + epsilon)), ai});
    k.components_.push_back({-mass / z * s, a_minus1});
    sort_canonical(k.components_);
    return k;
}

Kernel Kernel::power_law_extra(double mass, double epsilon, double tau0, double extra_weight,
                               double extra_timescale, int num_terms, double spacing) {
    check_pl_params(mass, epsilon, tau0, num_terms, spacing);
    check_finite(extra_weight, "extra-exponential weight b");
    if (extra_weight < 0.0) throw std::invalid_argument("extra-exponential weight b must be >= 0");
    check_positive(extra_timescale, "extra-exponential timescale");
    Kernel k;
    k.family_ = KernelFamily::PowerLawExtra;
    k.mass_n_ = mass;
    k.epsilon_ = epsilon;
    k.tau0_ = tau0;
    k.num_terms_ = num_terms;
    k.spacing_ = spacing;
    k.extra_weight_ = extra_weight;
    k.extra_timescale_ = extra_timescale;
    const auto a = pl_timescales(tau0, num_terms, spacing);
    double z = 0.0;
    for (double ai : a) z += std::pow(ai, -epsilon);
    z += extra_weight * extra_timescale;
    k.norm_z_ = z;
    k.components_.reserve(a.size() + 1);
    for (double ai : a)
        k.components_.push_back({mass / z * std::pow(ai, -(1.0 + epsilon)), ai});
    k.components_.push_back({mass / z * extra_weight, extra_timescale});
    sort_canonical(k.components_);
    return k;
}

double evaluate(const Kernel& kernel, double t) {
    if (t < 0.0) throw std::domain_error("kernel argument t must be >= 0");
    switch (kernel.family()) {
        case KernelFamily::ExpSum: {
            double v = 0.0;
            for (const auto& c : kernel.components()) v += c.weight * std::exp(-t / c.timescale);
            return v;
        }
        case KernelFamily::PowerLaw:
        case KernelFamily::PowerLawCutoff:
        case KernelFamily::PowerLawExtra: {
            const double eps = kernel.epsilon();
            double acc = 0.0;
            double ai = kernel.tau0();
            for (int i = 0; i < kernel.num_terms(); ++i, ai *= kernel.spacing())
                acc += std::pow(ai, -(1.0 + eps)) * std::exp(-t / ai);
            if (kernel.family() == KernelFamily::PowerLawCutoff)
                acc -= kernel.cutoff_s() * std::exp(-t * kernel.spacing() / kernel.tau0());
            else if (kernel.family() == KernelFamily::PowerLawExtra)
                acc += kernel.extra_weight() * std::exp(-t / kernel.extra_timescale());
            return kernel.mass_n() / kernel.norm_z() * acc;
        }
    }
    throw std::logic_error("unknown kernel family");
}

double total_mass(const Kernel& kernel) {
    if (kernel.family() == KernelFamily::ExpSum) {
        double n = 0.0;
        for (const auto& c : kernel.components()) n += c.mass();
        return n;
    }
    return kernel.mass_n(); // exact by construction of Z
}

double integral_to(const Kernel& kernel, double t) {
    if (t < 0.0) throw std::domain_error("kernel integral bound t must be >= 0");
    double acc = 0.0;
    for (const auto& c : kernel.components())
        acc += c.mass() * -std::expm1(-t / c.timescale);
    return acc;
}

const std::vector<ExpComponent>& to_exp_components(const Kernel& kernel) {
    return kernel.components();
}

nlohmann::json to_json(const Kernel& kernel) {
    nlohmann::json params;
    switch (kernel.family()) {
        case KernelFamily::ExpSum: {
            auto weights = nlohmann::json::array();
            auto timescales = nlohmann::json::array();
            for (const auto& c : kernel.components()) {
                weights.push_back(c.weight);
                timescales.push_back(c.timescale);
            }
            params = {{"weights", weights}, {"timescales", timescales}};
            return {{"family", "exp"},
                    {"params", params},
                    {"M", static_cast<int>(kernel.components().size())},
                    {"m", 0.0}};
        }
        case KernelFamily::PowerLaw:
            params = {{"n", kernel.mass_n()}, {"epsilon", kernel.epsilon()}, {"tau0", kernel.tau0()}};
            break;
        case KernelFamily::PowerLawCutoff:
            params = {{"n", kernel.mass_n()}, {"epsilon", kernel.epsilon()}, {"tau0", kernel.tau0()}};
            break;
        case KernelFamily::PowerLawExtra:
            params = {{"n", kernel.mass_n()},
                      {"epsilon", kernel.epsilon()},
                      {"tau0", kernel.tau0()},
                      {"b", kernel.extra_weight()},
                      {"tau_x", kernel.extra_timescale()}};
            break;
    }
    return {{"family", family_name(kernel.family())},
            {"params", params},
            {"M", kernel.num_terms()},
            {"m", kernel.spacing()}};
}

Kernel kernel_from_json(const nlohmann::json& j) {
    const auto family = family_from_name(j.at("family").get<std::string>());
    const auto& params = j.at("params");
    switch (family) {
        case KernelFamily::ExpSum: {
            const auto weights = params.at("weights").get<std::vector<double>>();
            const auto timescales = params.at("timescales").get<std::vector<double>>();
            if (weights.size() != timescales.size())
                throw std::invalid_argument("exp kernel JSON: weights/timescales size mismatch");
            std::vector<ExpComponent> comps;
            comps.reserve(weights.size());
            for (std::size_t i = 0; i < weights.size(); ++i)
                comps.push_back({weights[i], timescales[i]});
            return Kernel::exp_sum(std::move(comps));
        }
        case KernelFamily::PowerLaw:
            return Kernel::power_law(params.at("n").get<double>(), params.at("epsilon").get<double>(),
                                     params.at("tau0").get<double>(), j.at("M").get<int>(),
                                     j.at("m").get<double>());
        case KernelFamily::PowerLawCutoff:
            return Kernel::power_law_cutoff(params.at("n").get<double>(),
                                            params.at("epsilon").get<double>(),
                                            params.at("tau0").get<double>(), j.at("M").get<int>(),
                                            j.at("m").get<double>());
        case KernelFamily::PowerLawExtra:
            return Kernel::power_law_extra(params.at("n").get<double>(),
                                           params.at("epsilon").get<double>(),
                                           params.at("tau0").get<double>(),
                                           params.at("b").get<double>(),
                                           params.at("tau_x").get<double>(), j.at("M").get<int>(),
                                           j.at("m").get<double>());
    }
    throw std::logic_error("unknown kernel family");
}

} // namespace hawkes
