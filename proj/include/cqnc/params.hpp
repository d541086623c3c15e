#ifndef CQNC_PARAMS_HPP
#define CQNC_PARAMS_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cqnc {

namespace constants {
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double k_B = 1.380649e-23;      // J/K
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;
} // namespace constants

/**
 * Physical parameters of the dual-cavity sensing system.
 *
 * All frequencies and rates are angular (rad/s). The mechanical damping can
 * be supplied either directly as gamma_m or through the quality factor; after
 * validate() gamma_m is always set and `quality` is cleared.
 */
struct SystemParams {
    double omega_m = 0.0;  ///< mechanical resonance
    double gamma_m = 0.0;  ///< mechanical damping
    std::optional<double> quality;  ///< Q = omega_m / gamma_m, input only
    double Gamma = 0.0;    ///< atomic coherence decay
    double kappa = 0.0;    ///< cavity decay (both cavities)
    double J = 0.0;        ///< inter-cavity tunneling
    double g = 0.0;        ///< drive-enhanced field-mechanics coupling (magnitude)
    double G = 0.0;        ///< collective field-atom coupling
    double g0 = 0.0;       ///< single-photon optomechanical coupling
    double omega_L = 0.0;  ///< pump laser frequency
    double T = 0.0;        ///< bath temperature, K
    std::optional<double> m;  ///< effective mass, kg; only for SI output

    double Q() const { return omega_m / gamma_m; }

    bool operator==(const SystemParams&) const = default;
};

/// Mode frequencies of the coupled cavities and the control field.
struct FrequencyLayout {
    double omega_cav = 0.0;
    double omega_c = 0.0;      ///< symmetric mode, omega_cav + J
    double omega_d = 0.0;      ///< antisymmetric mode, omega_cav - J
    double omega_Omega = 0.0;  ///< control field

    bool operator==(const FrequencyLayout&) const = default;
};

enum class Scheme { Standard, ResonantCQNC, HeterodyneCQNC };

const char* to_string(Scheme scheme) noexcept;

/// Accepts "standard", "resonant", "resonant-cqnc", "heterodyne",
/// "heterodyne-cqnc" and "cqnc" (alias for heterodyne).
Scheme parse_scheme(std::string_view name);

inline const std::vector<Scheme>& all_schemes()
{
    static const std::vector<Scheme> schemes{
        Scheme::Standard, Scheme::ResonantCQNC, Scheme::HeterodyneCQNC};
    return schemes;
}

/// Couplings that are switched off in a scheme: Standard has no atoms and no
/// tunneling, ResonantCQNC has no tunneling.
SystemParams apply_scheme(SystemParams params, Scheme scheme);

SystemParams validate(SystemParams raw);

struct Preset {
    SystemParams params;
    FrequencyLayout layout;
};

/// Named parameter sets: "fig2", "fig3", "appendix".
Preset preset(std::string_view name);
const std::vector<std::string>& preset_names();

/// Sensing configuration: pump on the antisymmetric mode (omega_d = omega_L),
/// control field resonant with the symmetric mode.
FrequencyLayout sensing_layout(const SystemParams& params);

/// Precooling configuration: pump red-detuned by pump_detuning below
/// omega_d, control field at omega_d + omega_m.
FrequencyLayout precool_layout(const SystemParams& params, double pump_detuning);

/// P = 2 hbar omega_L kappa (g/g0)^2.
double g_to_power(double g, const SystemParams& params);
double power_to_g(double power, const SystemParams& params);
/// Intracavity photon number (g/g0)^2.
double photon_number(double g, const SystemParams& params);

struct Occupancy {
    double classical;      ///< k_B T / (hbar omega)
    double bose_einstein;  ///< 1 / (exp(hbar omega / k_B T) - 1)
};

Occupancy thermal_occupancy(double temperature, double omega);

enum class ThermalModel {
    Classical,    ///< S_f = k_B T / (hbar omega_m), zero at T = 0
    Symmetrized,  ///< S_f = n_BE + 1/2
};

const char* to_string(ThermalModel model) noexcept;
ThermalModel parse_thermal_model(std::string_view name);

/// Spectral density of the dimensionless thermal force f.
double thermal_force_density(const SystemParams& params,
                             ThermalModel model = ThermalModel::Classical);

/// hbar m omega_m gamma_m: converts a dimensionless force density to N^2/Hz.
/// Throws MassMissing when m is not set.
double si_force_density_factor(const SystemParams& params);

/**
 * Parse a flat `key = value` parameter file.
 *
 * Keys are the SystemParams field names (plus `Q`). A key with an `_hz`
 * suffix is given in Hz and multiplied by 2 pi. Blank lines and `#` comments
 * are ignored; unknown or repeated keys are errors. The result is validated.
 */
SystemParams parse_config(std::string_view text);
SystemParams load_config(const std::filesystem::path& path);

} // namespace cqnc

#endif
