#ifndef CQNC_VALIDATION_HPP
#define CQNC_VALIDATION_HPP

#include "cqnc/params.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cqnc {

struct CheckResult {
    std::string check;
    bool pass = false;
    double worst_case = 0.0;  ///< worst observed value of the check's metric
    double threshold = 0.0;   ///< bound the metric is compared against
    std::string detail;
};

struct ValidationOptions {
    std::uint64_t seed = 42;
    std::size_t draws = 1000;
    /// Replaces G by ratio * g in every preset-based check (negative control).
    std::optional<double> injected_mismatch;
};

/// Runs the invariant suite. Deterministic for fixed options.
std::vector<CheckResult> run_validation(const ValidationOptions& options = {});

nlohmann::json report_json(const std::vector<CheckResult>& results,
                           const ValidationOptions& options);

// Scaling probes shared with the acceptance suite.

/// x_c_in contribution to the oracle added-noise spectrum in units of
/// hbar m omega_m (the dimensionless density times gamma_m, so values at
/// different gamma_m are comparable).
double field_x_contribution(double omega, const SystemParams& params, Scheme scheme);

/**
 * Orders of magnitude by which the x_c_in contribution drops when
 * Gamma = gamma_m is reduced from gamma_high to gamma_high / 10 at fixed g, G,
 * i.e. the log-log slope in Gamma.
 */
double cancellation_decades(double omega, SystemParams params, double gamma_high,
                            Scheme scheme = Scheme::ResonantCQNC);

/// Log-log slope of the Standard-scheme x_c_in contribution between g_low and g_high.
double standard_backaction_slope(double omega, SystemParams params, double g_low,
                                 double g_high);

} // namespace cqnc

#endif
