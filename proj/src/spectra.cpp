#include "cqnc/spectra.hpp"

#include "cqnc/error.hpp"
#include "cqnc/response.hpp"

#include <cmath>

namespace cqnc {

namespace {

void require_coupling(const SystemParams& params)
{
    if (params.g == 0.0)
        throw Error(ErrorCode::ZeroCoupling, "g = 0: the force is not transduced");
}

double sq(double v) { return v * v; }

} // namespace

double shot_bracket(double J, double kappa)
{
    const double r = sq(J / kappa);
    return sq(0.5 - 8.0 * r) + 16.0 * r;
}

double thermal_floor(const SystemParams& params)
{
    return thermal_occupancy(params.T, params.omega_m).classical;
}

NoiseBudget s_add_cqnc(double omega, const SystemParams& params, Scheme scheme)
{
    if (scheme == Scheme::Standard)
        throw Error(ErrorCode::InvalidArgument, "s_add_cqnc needs a CQNC scheme");
    require_coupling(params);

    const double J = scheme == Scheme::ResonantCQNC ? 0.0 : params.J;
    const double mech = std::norm(chi_m(omega, params.omega_m, params.gamma_m));

    NoiseBudget b;
    b.omega = omega;
    b.thermal = thermal_floor(params);
    b.shot = 0.5 * (params.kappa / params.gamma_m) / (sq(params.g) * mech) *
             shot_bracket(J, params.kappa);
    b.backaction = 0.0;
    b.atomic = 0.5 * (1.0 + (sq(omega) + 0.25 * sq(params.Gamma)) / sq(params.omega_m));
    b.total = b.thermal + b.shot + b.backaction + b.atomic;
    b.outside_validity = std::abs(omega) > 0.1 * params.kappa;
    return b;
}

NoiseBudget s_add_standard(double omega, const SystemParams& params)
{
    require_coupling(params);
    const double mech = std::norm(chi_m(omega, params.omega_m, params.gamma_m));

    NoiseBudget b;
    b.omega = omega;
    b.thermal = thermal_floor(params);
    b.shot = 0.5 * (params.kappa / params.gamma_m) / (sq(params.g) * mech) * 0.25;
    b.backaction = 0.5 * 4.0 * sq(params.g) / (params.kappa * params.gamma_m);
    b.atomic = 0.0;
    b.total = b.thermal + b.shot + b.backaction + b.atomic;
    b.outside_validity = std::abs(omega) > 0.1 * params.kappa;
    return b;
}

NoiseBudget closed_form(double omega, const SystemParams& params, Scheme scheme)
{
    return scheme == Scheme::Standard ? s_add_standard(omega, params)
                                      : s_add_cqnc(omega, params, scheme);
}

double s_sql(double omega, const SystemParams& params)
{
    return 1.0 / (params.gamma_m * std::abs(chi_m(omega, params.omega_m, params.gamma_m)));
}

double s_cqnc_limit(double omega, const SystemParams& params)
{
    return 0.5 * (sq(omega) + sq(params.omega_m) + 0.25 * sq(params.Gamma)) /
           sq(params.omega_m);
}

NoiseBudget f_add_components(double omega, const SystemParams& raw, Scheme scheme,
                             ThermalModel thermal)
{
    const SystemParams p = apply_scheme(raw, scheme);
    require_coupling(p);

    const complex cavity = chi_c(omega, p.kappa);
    const complex cavity_prime = chi_c_prime(omega, p);
    const complex mech = chi_m(omega, p.omega_m, p.gamma_m);
    const complex signal = p.g * mech;  // F_ext enters p_c_out through g chi_m

    // Field lines, common prefactor sqrt(kappa/gamma_m) / (g chi_m).
    const complex field_scale = std::sqrt(p.kappa / p.gamma_m) / signal;
    const complex p_in = field_scale * (1.0 - 1.0 / (cavity_prime * p.kappa));
    const complex x_in_shot = field_scale * cavity * (2.0 * p.J);
    const complex x_in_backaction = -field_scale * backaction_coupling(omega, p) * cavity;

    NoiseBudget b;
    b.omega = omega;
    b.thermal = thermal_force_density(p, thermal);

    const double shot_x = std::norm(x_in_shot);
    const double backaction_x = std::norm(x_in_backaction);
    const double x_channel = std::norm(x_in_shot + x_in_backaction);
    const double separate = shot_x + backaction_x;
    const double shot_share = separate > 0.0 ? x_channel * shot_x / separate : 0.0;
    const double backaction_share = separate > 0.0 ? x_channel * backaction_x / separate : 0.0;

    b.shot = 0.5 * (std::norm(p_in) + shot_share);
    b.backaction = 0.5 * backaction_share;

    if (p.G != 0.0) {
        const complex atoms = p.G * chi_sigma(omega, p.omega_m, p.Gamma) / signal *
                              std::sqrt(p.Gamma / p.gamma_m);
        const double quadrature_weight =
            1.0 + (sq(omega) + 0.25 * sq(p.Gamma)) / sq(p.omega_m);
        b.atomic = 0.5 * std::norm(atoms) * quadrature_weight;
    }
    b.total = b.thermal + b.shot + b.backaction + b.atomic;
    return b;
}

NoiseBudget to_si(NoiseBudget budget, const SystemParams& params)
{
    const double factor = si_force_density_factor(params);
    budget.thermal *= factor;
    budget.shot *= factor;
    budget.backaction *= factor;
    budget.atomic *= factor;
    budget.total *= factor;
    budget.normalization = factor;
    return budget;
}

} // namespace cqnc
