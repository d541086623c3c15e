#ifndef CQNC_OPTIMUM_HPP
#define CQNC_OPTIMUM_HPP

#include "cqnc/params.hpp"
#include "cqnc/spectra.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cqnc {

/// Minimum added noise over the measurement strength g at one frequency.
struct OptimumResult {
    double omega = 0.0;
    Scheme scheme = Scheme::Standard;
    /// Empty when the noise decreases monotonically in g (CQNC): there is no
    /// finite minimizer and s_min is the g -> infinity asymptote.
    std::optional<double> g_opt;
    double s_min = 0.0;      ///< includes the thermal floor
    double thermal = 0.0;
    /// Asymptotic case: smallest g whose shot term is `tolerance` of s_min.
    std::optional<double> g_99;
    /// Power at g_opt (or g_99); empty if g0 or omega_L is not set.
    std::optional<double> power_opt;

    bool asymptotic() const { return !g_opt.has_value(); }
};

/// Closed form g_opt^2 = kappa / (4 |chi_m|), s_min = thermal + 1/(gamma_m |chi_m|).
OptimumResult optimal_g_standard(double omega, const SystemParams& params);

struct NumericMinimum {
    double g;
    double s;
};

/// Brent minimization of the T = 0 standard spectrum over log g in
/// [1e-6, 1e6] * sqrt(kappa gamma_m).
NumericMinimum minimize_standard_numeric(double omega, const SystemParams& params);

/// tolerance in (0, 0.5].
OptimumResult optimal_g_cqnc(double omega, const SystemParams& params, double tolerance,
                             Scheme scheme = Scheme::HeterodyneCQNC);

struct SweepPoint {
    double power;
    double g;
    NoiseBudget budget;
};

/// Closed-form spectrum of `scheme` at T = 0 for each power (W), ascending.
std::vector<SweepPoint> power_sweep(double omega, const SystemParams& params, Scheme scheme,
                                    std::span<const double> powers);

/// Log-spaced grid over 8 decades centred on the standard-scheme optimum power.
std::vector<double> default_power_grid(double omega, const SystemParams& params,
                                       std::size_t points);

/// Power at which the `cqnc` scheme's T = 0 spectrum drops below the standard
/// one, by bisection in log P on [p_lo, p_hi]. Empty without a sign change.
std::optional<double> crossing_power(double omega, const SystemParams& params, Scheme cqnc,
                                     double p_lo, double p_hi);

} // namespace cqnc

#endif
