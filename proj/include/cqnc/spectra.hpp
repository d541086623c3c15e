#ifndef CQNC_SPECTRA_HPP
#define CQNC_SPECTRA_HPP

#include "cqnc/params.hpp"

#include <optional>

namespace cqnc {

/**
 * Added force noise spectral density at one frequency, split by source.
 *
 * Values are dimensionless (force normalized to sqrt(hbar m omega_m gamma_m))
 * unless `normalization` is set, in which case every field has been
 * multiplied by it and is in N^2/Hz.
 */
struct NoiseBudget {
    double omega = 0.0;
    double thermal = 0.0;
    double shot = 0.0;
    double backaction = 0.0;
    double atomic = 0.0;
    double total = 0.0;
    std::optional<double> normalization;
    /// Set by the omega << kappa closed forms when omega > 0.1 kappa.
    bool outside_validity = false;
};

/// (1/2 - 8J^2/kappa^2)^2 + 16 J^2/kappa^2: the CQNC shot-noise bracket.
double shot_bracket(double J, double kappa);

/// k_B T / (hbar omega_m), the g-independent thermal floor of both closed forms.
double thermal_floor(const SystemParams& params);

/**
 * CQNC added noise under exact backaction cancellation, omega << kappa:
 *   k_B T/hbar omega_m + 1/2 { kappa/gamma_m / (g^2 |chi_m|^2) * bracket
 *                             + 1 + (omega^2 + Gamma^2/4)/omega_m^2 }.
 * ResonantCQNC evaluates the bracket with J = 0. Throws ZeroCoupling for g = 0
 * and InvalidArgument for Scheme::Standard.
 */
NoiseBudget s_add_cqnc(double omega, const SystemParams& params,
                       Scheme scheme = Scheme::HeterodyneCQNC);

/// Standard optomechanical added noise: shot ~ 1/g^2, backaction ~ g^2.
NoiseBudget s_add_standard(double omega, const SystemParams& params);

/// Dispatches to s_add_standard or s_add_cqnc.
NoiseBudget closed_form(double omega, const SystemParams& params, Scheme scheme);

/// Standard quantum limit 1/(gamma_m |chi_m(omega)|).
double s_sql(double omega, const SystemParams& params);

/// CQNC limit (omega^2 + omega_m^2 + Gamma^2/4) / (2 omega_m^2).
double s_cqnc_limit(double omega, const SystemParams& params);

/**
 * General added force noise with no cancellation assumed: arbitrary g, G,
 * Gamma, gamma_m and the full omega dependence of chi_c and chi_c'.
 *
 * shot collects the p_c_in term and the 2J chi_c x_c_in term, backaction the
 * residual (g^2 chi_m + G^2 chi_sigma) x_c_in term with prefactor
 * sqrt(kappa/gamma_m). Both x_c_in terms drive the same input, so their
 * interference is shared between shot and backaction in proportion to their
 * separate powers; each component stays nonnegative and the total is exact.
 */
NoiseBudget f_add_components(double omega, const SystemParams& params,
                             Scheme scheme = Scheme::HeterodyneCQNC,
                             ThermalModel thermal = ThermalModel::Classical);

/// Multiplies every component by hbar m omega_m gamma_m. Throws MassMissing.
NoiseBudget to_si(NoiseBudget budget, const SystemParams& params);

} // namespace cqnc

#endif
