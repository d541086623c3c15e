#include "cqnc/validation.hpp"

#include "cqnc/langevin_oracle.hpp"
#include "cqnc/optimum.hpp"
#include "cqnc/response.hpp"
#include "cqnc/spectra.hpp"
#include "cqnc/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace cqnc {

double field_x_contribution(double omega, const SystemParams& params, Scheme scheme)
{
    return langevin::oracle_spectrum(omega, params, scheme).field_x * params.gamma_m;
}

double cancellation_decades(double omega, SystemParams params, double gamma_high, Scheme scheme)
{
    params.gamma_m = params.Gamma = gamma_high;
    const double high = field_x_contribution(omega, params, scheme);
    params.gamma_m = params.Gamma = 0.1 * gamma_high;
    const double low = field_x_contribution(omega, params, scheme);
    return std::log10(high / low);
}

double standard_backaction_slope(double omega, SystemParams params, double g_low, double g_high)
{
    params.g = g_low;
    const double low = field_x_contribution(omega, params, Scheme::Standard);
    params.g = g_high;
    const double high = field_x_contribution(omega, params, Scheme::Standard);
    return std::log(high / low) / std::log(g_high / g_low);
}

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double rel(complex a, complex b) { return std::abs(a - b) / std::abs(b); }

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    double log_uniform(double lo, double hi)
    {
        return std::pow(10.0, uniform(std::log10(lo), std::log10(hi)));
    }

    /// Random validated parameters; couplings around the standard optimum.
    SystemParams params()
    {
        SystemParams p;
        p.omega_m = constants::two_pi * log_uniform(1e3, 1e7);
        p.gamma_m = p.omega_m * log_uniform(1e-8, 1e-1);
        p.Gamma = p.omega_m * log_uniform(1e-8, 1e-1);
        p.kappa = p.omega_m * log_uniform(1e-1, 1e2);
        p.J = p.kappa * uniform(0.0, 1.0);
        p.g = 0.5 * std::sqrt(p.kappa * p.gamma_m) * log_uniform(1e-2, 1e2);
        p.G = p.g * uniform(0.0, 1.5);
        p.T = uniform(0.0, 300.0);
        return validate(p);
    }

private:
    std::mt19937_64 rng_;
};

SystemParams preset_params(const char* name, const ValidationOptions& options)
{
    SystemParams p = preset(name).params;
    if (options.injected_mismatch)
        p.G = *options.injected_mismatch * p.g;
    return p;
}

CheckResult conjugate_symmetry(const ValidationOptions& options)
{
    Sampler sample(options.seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < options.draws; ++i) {
        const SystemParams p = sample.params();
        const double w = p.omega_m * sample.uniform(-3.0, 3.0);
        worst = std::max({worst,
                          rel(chi_c(-w, p.kappa), std::conj(chi_c(w, p.kappa))),
                          rel(chi_m(-w, p.omega_m, p.gamma_m),
                              std::conj(chi_m(w, p.omega_m, p.gamma_m))),
                          rel(chi_sigma(-w, p.omega_m, p.Gamma),
                              std::conj(chi_sigma(w, p.omega_m, p.Gamma)))});
    }
    return {"conjugate_symmetry", worst <= 1e-14, worst, 1e-14,
            "max relative |chi(-w) - conj chi(w)| over chi_c, chi_m, chi_sigma"};
}

CheckResult spectrum_positivity(const ValidationOptions& options)
{
    Sampler sample(options.seed + 1);
    double worst = 0.0;
    bool negative = false;
    for (std::size_t i = 0; i < options.draws; ++i) {
        const SystemParams p = sample.params();
        const double w = p.omega_m * sample.uniform(0.0, 3.0);
        const auto oracle = langevin::oracle_spectrum(w, p, Scheme::HeterodyneCQNC);
        const auto general = f_add_components(w, p);
        worst = std::max(worst, oracle.imag_residue);
        for (double v : {oracle.thermal, oracle.field_x, oracle.field_p, oracle.atom_x,
                         oracle.atom_p, general.thermal, general.shot, general.backaction,
                         general.atomic}) {
            if (!(v >= 0.0) || !std::isfinite(v)) negative = true;
        }
        const double sum = general.thermal + general.shot + general.backaction + general.atomic;
        if (rel(sum, general.total) > 1e-12) negative = true;
    }
    return {"spectrum_positivity", worst <= 1e-12 && !negative, worst, 1e-12,
            negative ? "negative, non-finite or non-additive component found"
                     : "max imaginary residue of symmetrized oracle spectra"};
}

CheckResult oracle_equivalence_cqnc(const ValidationOptions& options)
{
    const SystemParams p = preset_params("fig2", options);
    double worst = 0.0;
    const int n = 101;
    for (int i = 0; i < n; ++i) {
        const double w = 0.05 * p.kappa * i / (n - 1);
        const double oracle = langevin::oracle_spectrum(w, p, Scheme::ResonantCQNC).total;
        worst = std::max(worst, rel(s_add_cqnc(w, p, Scheme::ResonantCQNC).total, oracle));
    }
    return {"oracle_equivalence_cqnc", worst <= 0.02, worst, 0.02,
            "fig2 matched couplings, T = 0, omega in [0, 0.05 kappa]: closed form vs oracle"};
}

CheckResult oracle_equivalence_general(const ValidationOptions& options)
{
    Sampler sample(options.seed + 2);
    double worst = 0.0;
    SystemParams base = preset_params("fig3", options);
    for (std::size_t i = 0; i < options.draws; ++i) {
        SystemParams p = base;
        p.g = base.g * sample.log_uniform(1e-2, 1e2);
        p.G = p.g * sample.uniform(0.0, 1.5);
        p.J = p.kappa * sample.uniform(0.0, 1.0);
        p.gamma_m = p.omega_m * sample.log_uniform(1e-8, 1e-2);
        p.Gamma = p.omega_m * sample.log_uniform(1e-8, 1e-2);
        p.T = sample.uniform(0.0, 300.0);
        const double w = 0.05 * p.kappa * sample.uniform(0.0, 1.0);
        const double oracle = langevin::oracle_spectrum(w, p, Scheme::HeterodyneCQNC).total;
        worst = std::max(worst, rel(f_add_components(w, p).total, oracle));
    }
    return {"oracle_equivalence_general", worst <= 0.02, worst, 0.02,
            "f_add_components vs oracle, random (mismatched) couplings, omega <= 0.05 kappa"};
}

CheckResult oracle_equivalence_standard(const ValidationOptions& options)
{
    double worst = 0.0;
    auto probe = [&](SystemParams p, double w) {
        p.g = *optimal_g_standard(w, p).g_opt;
        const double oracle = langevin::oracle_spectrum(w, p, Scheme::Standard).total;
        worst = std::max(worst, rel(s_add_standard(w, p).total, oracle));
    };
    const SystemParams fig2 = preset_params("fig2", options);
    probe(fig2, fig2.omega_m);

    // omega << kappa: same mechanics, broad cavity.
    SystemParams broad = fig2;
    broad.kappa = 1e3 * fig2.omega_m;
    for (int i = 0; i <= 40; ++i)
        probe(broad, broad.omega_m * (0.8 + 0.4 * i / 40.0));
    return {"oracle_equivalence_standard", worst <= 0.05, worst, 0.05,
            "standard scheme at g_opt: fig2 at omega_m, broad cavity within 0.2 omega_m"};
}

CheckResult sql_optimality(const ValidationOptions& options)
{
    SystemParams p = preset_params("fig2", options);
    p.T = 0.0;
    double worst = 0.0;
    for (int i = 0; i <= 60; ++i) {
        const double w = p.omega_m * (0.5 + 1.5 * i / 60.0);
        const double closed = optimal_g_standard(w, p).s_min;
        worst = std::max(worst, rel(minimize_standard_numeric(w, p).s, closed));
    }
    bool below = false;
    Sampler sample(options.seed + 3);
    for (std::size_t i = 0; i < options.draws; ++i) {
        SystemParams q = p;
        q.g = p.g * sample.log_uniform(1e-3, 1e3);
        const double w = p.omega_m * sample.uniform(0.0, 3.0);
        if (s_add_standard(w, q).total < s_sql(w, q) * (1.0 - 1e-12)) below = true;
    }
    return {"sql_optimality", worst <= 1e-9 && !below, worst, 1e-9,
            below ? "standard spectrum fell below the SQL"
                  : "numerical vs closed-form standard optimum over [0.5, 2] omega_m"};
}

CheckResult cqnc_monotonicity(const ValidationOptions& options)
{
    const SystemParams p = preset_params("fig3", options);
    double worst = 0.0;
    bool below_limit = false;
    for (double x : {0.5, 0.9, 1.0, 1.0 + 4.0 * p.gamma_m / p.omega_m, 1.5, 2.0}) {
        const double w = x * p.omega_m;
        const auto grid = default_power_grid(w, p, 201);
        for (Scheme s : {Scheme::ResonantCQNC, Scheme::HeterodyneCQNC}) {
            const auto sweep = power_sweep(w, p, s, grid);
            for (std::size_t i = 1; i < sweep.size(); ++i) {
                const double prev = sweep[i - 1].budget.total;
                worst = std::max(worst, (sweep[i].budget.total - prev) / prev);
            }
            for (const auto& pt : sweep)
                if (pt.budget.total < s_cqnc_limit(w, p)) below_limit = true;
        }
    }
    return {"cqnc_monotonicity", worst <= 0.0 && !below_limit, worst, 0.0,
            below_limit ? "CQNC spectrum fell below its limit"
                        : "max relative increase along CQNC power sweeps"};
}

CheckResult cancellation_scaling(const ValidationOptions& options)
{
    SystemParams p = preset_params("fig2", options);
    p.T = 0.0;
    const double decades = cancellation_decades(0.5 * p.omega_m, p, 1e-2 * p.omega_m);
    return {"cancellation_scaling", decades >= 4.0 - 0.01, decades, 4.0 - 0.01,
            "decades dropped by the x_c_in contribution for a 10x reduction of Gamma = gamma_m"};
}

CheckResult backaction_scaling(const ValidationOptions& options)
{
    SystemParams p = preset_params("fig2", options);
    p.T = 0.0;
    const double slope = standard_backaction_slope(p.omega_m, p, 0.1 * p.g, 10.0 * p.g);
    return {"backaction_scaling_standard", std::abs(slope - 2.0) <= 0.01, slope, 2.0,
            "log-log slope of the standard x_c_in contribution in g (2.00 +- 0.01)"};
}

} // namespace

std::vector<CheckResult> run_validation(const ValidationOptions& options)
{
    return {conjugate_symmetry(options),      spectrum_positivity(options),
            oracle_equivalence_cqnc(options), oracle_equivalence_general(options),
            oracle_equivalence_standard(options), sql_optimality(options),
            cqnc_monotonicity(options),       cancellation_scaling(options),
            backaction_scaling(options)};
}

nlohmann::json report_json(const std::vector<CheckResult>& results,
                           const ValidationOptions& options)
{
    nlohmann::json checks = nlohmann::json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        checks.push_back({{"check", r.check},
                          {"status", r.pass ? "pass" : "fail"},
                          {"worst_case", r.worst_case},
                          {"threshold", r.threshold},
                          {"detail", r.detail}});
    }
    nlohmann::json report{{"schema_version", kSchemaVersion},
                          {"seed", options.seed},
                          {"draws", options.draws},
                          {"checks", checks},
                          {"status", all ? "pass" : "fail"}};
    report["injected_mismatch"] =
        options.injected_mismatch ? nlohmann::json(*options.injected_mismatch) : nlohmann::json();
    return report;
}

} // namespace cqnc
