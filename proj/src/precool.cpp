#include "cqnc/precool.hpp"

#include "cqnc/error.hpp"

#include <cmath>

namespace cqnc {

const char* to_string(CouplingMode mode) noexcept
{
    return mode == CouplingMode::Optomechanical ? "optomechanical" : "as-written";
}

CouplingMode parse_coupling_mode(std::string_view name)
{
    if (name == "optomechanical") return CouplingMode::Optomechanical;
    if (name == "as-written") return CouplingMode::AsWritten;
    throw Error(ErrorCode::InvalidArgument, "unknown coupling mode '" + std::string(name) + "'");
}

PrecoolParams appendix_precool(const SystemParams& device, double gamma_e)
{
    PrecoolParams p;
    p.N = 1e8;
    p.E_rabi = constants::two_pi * 100e3;
    p.gamma_e = gamma_e;
    p.Omega = 50.0 * gamma_e;
    p.Delta = 50.0 * gamma_e;
    p.Delta_d = device.omega_m;
    p.delta = -p.Delta_d;
    p.P = 24e-6;
    p.Gamma = device.gamma_m;
    return p;
}

void validate(const PrecoolParams& p)
{
    if (!(p.N >= 1.0))
        throw Error(ErrorCode::InvalidArgument, "N must be >= 1");
    if (!(p.gamma_e > 0.0))
        throw Error(ErrorCode::NonPositiveRate, "gamma_e must be > 0");
    if (!(p.Gamma >= 0.0))
        throw Error(ErrorCode::NonPositiveRate, "Gamma must be >= 0");
    if (!(p.P >= 0.0))
        throw Error(ErrorCode::InvalidArgument, "P must be >= 0");
    const double scale = std::max(std::abs(p.Delta_d), 1.0);
    if (std::abs(p.delta + p.Delta_d) > 1e-9 * scale)
        throw Error(ErrorCode::InvalidArgument, "delta must equal -Delta_d");
}

double collective_raman_coupling(const PrecoolParams& p)
{
    if (p.Delta == 0.0)
        throw Error(ErrorCode::DivisionSingularity, "Delta = 0");
    return std::sqrt(p.N) * p.E_rabi * p.Omega / p.Delta;
}

complex chi_eit(Sideband at, const PrecoolParams& p, double omega_m)
{
    double raman = p.delta;
    if (at == Sideband::Plus) raman += omega_m;
    if (at == Sideband::Minus) raman -= omega_m;

    complex denom(p.Delta, 0.5 * p.gamma_e);
    if (p.Omega != 0.0) {
        const complex two_photon(raman, 0.5 * p.Gamma);
        if (two_photon == 0.0)
            throw Error(ErrorCode::DivisionSingularity, "undamped Raman resonance");
        denom -= p.Omega * p.Omega / two_photon;
    }
    return -p.E_rabi * p.E_rabi * p.N / denom;
}

double pump_amplitude(double power, double kappa, double omega_L)
{
    if (!(omega_L > 0.0))
        throw Error(ErrorCode::MissingParameter, "omega_L must be > 0");
    return std::sqrt(power * kappa / (2.0 * constants::hbar * omega_L));
}

complex steady_state_d(const PrecoolParams& p, double kappa, double omega_L)
{
    const double eta = pump_amplitude(p.P, kappa, omega_L);
    // omega_m does not enter the centre evaluation.
    const complex chi = chi_eit(Sideband::Center, p, 0.0);
    const complex i(0.0, 1.0);
    return -i * eta / (i * p.Delta_d + 0.5 * kappa - i * chi);
}

CoolingResult optical_damping(const PrecoolParams& p, const SystemParams& device)
{
    validate(p);
    const complex i(0.0, 1.0);
    const double wm = device.omega_m;
    const double half_kappa = 0.5 * device.kappa;

    CoolingResult r;
    r.d_ss = steady_state_d(p, device.kappa, device.omega_L);
    r.chi_eit_center = chi_eit(Sideband::Center, p, wm);
    r.chi_eit_plus = chi_eit(Sideband::Plus, p, wm);
    r.chi_eit_minus = chi_eit(Sideband::Minus, p, wm);
    r.coupling = p.coupling_mode == CouplingMode::Optomechanical ? device.g0
                                                                 : collective_raman_coupling(p);

    const double amplitude = 4.0 * r.coupling * std::abs(r.d_ss) / std::sqrt(2.0);
    const double prefactor = amplitude * amplitude;
    const complex cooling = 1.0 / (i * (p.Delta_d - wm - r.chi_eit_plus) + half_kappa);
    const complex heating =
        1.0 / (-i * (p.Delta_d + wm - std::conj(r.chi_eit_minus)) + half_kappa);

    r.A_minus = prefactor * cooling.real();
    r.A_plus = prefactor * heating.real();
    r.Gamma_opt = r.A_minus - r.A_plus;
    return r;
}

PhononOccupancy n_min(const CoolingResult& cooling, double gamma_m, double n_th)
{
    const double damping = gamma_m + cooling.Gamma_opt;
    if (!(damping > 0.0))
        throw Error(ErrorCode::DivisionSingularity, "gamma_m + Gamma_opt must be > 0");
    return {(gamma_m * n_th + cooling.A_plus) / damping, cooling.Gamma_opt < 0.0};
}

} // namespace cqnc
