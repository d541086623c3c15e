#ifndef CQNC_PRECOOL_HPP
#define CQNC_PRECOOL_HPP

#include "cqnc/params.hpp"
#include "cqnc/response.hpp"

#include <string_view>

namespace cqnc {

/// Which coupling multiplies |<d>| in the optical damping prefactor
/// (4 c |<d>| / sqrt 2)^2.
enum class CouplingMode {
    Optomechanical,  ///< c = g0
    AsWritten,       ///< c = G0 = sqrt(N) E Omega / Delta
};

const char* to_string(CouplingMode mode) noexcept;
CouplingMode parse_coupling_mode(std::string_view name);

/// EIT precooling configuration. All rates angular; P in W.
struct PrecoolParams {
    double N = 1.0;        ///< atom number
    double E_rabi = 0.0;   ///< cavity-mode Rabi frequency
    double Omega = 0.0;    ///< control Rabi frequency
    double Delta = 0.0;    ///< single-photon detuning omega_L - omega_em
    double delta = 0.0;    ///< Raman detuning omega_L - omega_d (= -Delta_d)
    double gamma_e = 0.0;  ///< excited-state linewidth
    double Delta_d = 0.0;  ///< pump detuning omega_d - omega_L
    double P = 0.0;        ///< input power
    double Gamma = 0.0;    ///< ground-state coherence decay
    CouplingMode coupling_mode = CouplingMode::Optomechanical;
};

inline constexpr double kDefaultExcitedLinewidth = constants::two_pi * 6e6;

/// Precooling numbers quoted with the hybrid device: N = 1e8, E = 2pi 100 kHz,
/// Omega = Delta = 50 gamma_e, Delta_d = omega_m, P = 24 uW, Gamma = gamma_m.
PrecoolParams appendix_precool(const SystemParams& device,
                               double gamma_e = kDefaultExcitedLinewidth);

/// Throws on N < 1, gamma_e <= 0, Gamma < 0, P < 0 or delta != -Delta_d.
void validate(const PrecoolParams& p);

/// Collective Raman coupling G0 = sqrt(N) E Omega / Delta.
double collective_raman_coupling(const PrecoolParams& p);

enum class Sideband { Center, Plus, Minus };

/// chi_EIT = -E^2 N / [Delta + i gamma_e/2 - Omega^2 / (delta + i Gamma/2)]
/// with delta shifted by +omega_m (Plus) or -omega_m (Minus).
complex chi_eit(Sideband at, const PrecoolParams& p, double omega_m);

/// eta_d = sqrt(P kappa / (2 hbar omega_L)).
double pump_amplitude(double power, double kappa, double omega_L);

/// <d> = -i eta_d / (i Delta_d + kappa/2 - i chi_EIT(center)).
complex steady_state_d(const PrecoolParams& p, double kappa, double omega_L);

struct CoolingResult {
    complex d_ss;
    complex chi_eit_center;
    complex chi_eit_plus;
    complex chi_eit_minus;
    double coupling = 0.0;  ///< g0 or G0 depending on the mode
    double A_minus = 0.0;   ///< cooling rate
    double A_plus = 0.0;    ///< heating rate
    double Gamma_opt = 0.0; ///< A_minus - A_plus
};

/// Optical damping from the EIT-filtered cavity response. Uses kappa,
/// omega_m, omega_L and g0 from `device`.
CoolingResult optical_damping(const PrecoolParams& p, const SystemParams& device);

struct PhononOccupancy {
    double n_min = 0.0;
    bool negative_damping = false;  ///< Gamma_opt < 0: heating regime
};

/// n_min = (gamma_m n_th + Gamma_h) / (gamma_m + Gamma_opt) with Gamma_h = A_plus.
/// Throws DivisionSingularity when gamma_m + Gamma_opt <= 0.
PhononOccupancy n_min(const CoolingResult& cooling, double gamma_m, double n_th);

} // namespace cqnc

#endif
