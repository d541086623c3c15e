#include "cqnc/response.hpp"

#include "cqnc/error.hpp"

namespace cqnc {

complex chi_c(double omega, double kappa)
{
    return 1.0 / complex(0.5 * kappa, omega);
}

complex chi_m(double omega, double omega_m, double gamma_m)
{
    const complex denom(omega_m * omega_m - omega * omega, omega * gamma_m);
    if (denom == 0.0)
        throw Error(ErrorCode::DivisionSingularity, "chi_m evaluated on an undamped resonance");
    return omega_m / denom;
}

complex chi_sigma(double omega, double omega_m, double Gamma)
{
    const complex denom(omega_m * omega_m - omega * omega + 0.25 * Gamma * Gamma,
                        omega * Gamma);
    if (denom == 0.0)
        throw Error(ErrorCode::DivisionSingularity, "chi_sigma evaluated on an undamped resonance");
    return -omega_m / denom;
}

complex backaction_coupling(double omega, const SystemParams& params)
{
    const double g2 = params.g * params.g;
    if (params.G == 0.0)
        return g2 * chi_m(omega, params.omega_m, params.gamma_m);

    // Combined over the common denominator so the matched-coupling residual
    // g^2 Gamma^2/4 is not lost to cancellation.
    const double G2 = params.G * params.G;
    const double detuning = params.omega_m * params.omega_m - omega * omega;
    const complex mech_denom(detuning, omega * params.gamma_m);
    const complex atom_denom(detuning + 0.25 * params.Gamma * params.Gamma, omega * params.Gamma);
    if (mech_denom == 0.0 || atom_denom == 0.0)
        throw Error(ErrorCode::DivisionSingularity, "undamped resonance in backaction coupling");
    const complex numerator((g2 - G2) * detuning + 0.25 * g2 * params.Gamma * params.Gamma,
                            omega * (g2 * params.Gamma - G2 * params.gamma_m));
    return params.omega_m * numerator / (mech_denom * atom_denom);
}

complex chi_c_prime(double omega, const SystemParams& params)
{
    const complex cavity = chi_c(omega, params.kappa);
    if (params.J == 0.0)
        return cavity;
    const double two_j = 2.0 * params.J;
    const complex inverse =
        1.0 / cavity + two_j * cavity * (two_j - backaction_coupling(omega, params));
    if (inverse == 0.0)
        throw Error(ErrorCode::DivisionSingularity, "1/chi_c' vanishes");
    return 1.0 / inverse;
}

ResponseSet response(double omega, const SystemParams& params)
{
    return {omega,
            chi_c(omega, params.kappa),
            chi_m(omega, params.omega_m, params.gamma_m),
            chi_sigma(omega, params.omega_m, params.Gamma),
            chi_c_prime(omega, params)};
}

std::vector<ResponseSet> response_grid(std::span<const double> omegas,
                                       const SystemParams& params)
{
    std::vector<ResponseSet> out;
    out.reserve(omegas.size());
    for (double w : omegas)
        out.push_back(response(w, params));
    return out;
}

} // namespace cqnc
