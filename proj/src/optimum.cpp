#include "cqnc/optimum.hpp"

#include "cqnc/error.hpp"
#include "cqnc/response.hpp"

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <limits>

namespace cqnc {

namespace {

bool has_power_scale(const SystemParams& p) { return p.g0 > 0.0 && p.omega_L > 0.0; }

SystemParams at_zero_temperature(SystemParams p)
{
    p.T = 0.0;
    return p;
}

} // namespace

OptimumResult optimal_g_standard(double omega, const SystemParams& params)
{
    const double mech = std::abs(chi_m(omega, params.omega_m, params.gamma_m));

    OptimumResult r;
    r.omega = omega;
    r.scheme = Scheme::Standard;
    r.g_opt = std::sqrt(params.kappa / (4.0 * mech));
    r.thermal = thermal_floor(params);
    r.s_min = r.thermal + 1.0 / (params.gamma_m * mech);
    if (has_power_scale(params))
        r.power_opt = g_to_power(*r.g_opt, params);
    return r;
}

NumericMinimum minimize_standard_numeric(double omega, const SystemParams& params)
{
    SystemParams p = at_zero_temperature(params);
    const double scale = std::sqrt(p.kappa * p.gamma_m);
    auto objective = [&](double log_g) {
        p.g = std::exp(log_g);
        return s_add_standard(omega, p).total;
    };
    const int bits = std::numeric_limits<double>::digits / 2;
    std::uintmax_t max_iter = 500;
    const auto [log_g, s] = boost::math::tools::brent_find_minima(
        objective, std::log(1e-6 * scale), std::log(1e6 * scale), bits, max_iter);
    return {std::exp(log_g), s};
}

OptimumResult optimal_g_cqnc(double omega, const SystemParams& params, double tolerance,
                             Scheme scheme)
{
    if (!(tolerance > 0.0 && tolerance <= 0.5))
        throw Error(ErrorCode::InvalidArgument, "tolerance must lie in (0, 0.5]");
    if (scheme == Scheme::Standard)
        throw Error(ErrorCode::InvalidArgument, "optimal_g_cqnc needs a CQNC scheme");

    const double J = scheme == Scheme::ResonantCQNC ? 0.0 : params.J;
    const double mech2 = std::norm(chi_m(omega, params.omega_m, params.gamma_m));

    OptimumResult r;
    r.omega = omega;
    r.scheme = scheme;
    r.thermal = thermal_floor(params);
    r.s_min = r.thermal + s_cqnc_limit(omega, params);

    // shot(g) = c / g^2 with c = (kappa / 2 gamma_m) bracket / |chi_m|^2
    const double c = 0.5 * (params.kappa / params.gamma_m) * shot_bracket(J, params.kappa) / mech2;
    r.g_99 = std::sqrt(c / (tolerance * r.s_min));
    if (has_power_scale(params))
        r.power_opt = g_to_power(*r.g_99, params);
    return r;
}

std::vector<SweepPoint> power_sweep(double omega, const SystemParams& params, Scheme scheme,
                                    std::span<const double> powers)
{
    SystemParams p = at_zero_temperature(params);
    std::vector<SweepPoint> out;
    out.reserve(powers.size());
    double previous = 0.0;
    for (double power : powers) {
        if (!(power > 0.0) || power <= previous)
            throw Error(ErrorCode::InvalidArgument, "power grid must be positive and ascending");
        previous = power;
        p.g = power_to_g(power, p);
        out.push_back({power, p.g, closed_form(omega, p, scheme)});
    }
    return out;
}

std::vector<double> default_power_grid(double omega, const SystemParams& params,
                                       std::size_t points)
{
    if (points < 2)
        throw Error(ErrorCode::InvalidArgument, "power grid needs at least 2 points");
    const OptimumResult opt = optimal_g_standard(omega, params);
    const double center = std::log10(g_to_power(*opt.g_opt, params));
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        grid[i] = std::pow(10.0, center - 4.0 + 8.0 * t);
    }
    return grid;
}

std::optional<double> crossing_power(double omega, const SystemParams& params, Scheme cqnc,
                                     double p_lo, double p_hi)
{
    SystemParams p = at_zero_temperature(params);
    auto difference = [&](double log_power) {
        p.g = power_to_g(std::exp(log_power), p);
        return closed_form(omega, p, cqnc).total - s_add_standard(omega, p).total;
    };
    const double a = std::log(p_lo);
    const double b = std::log(p_hi);
    const double fa = difference(a);
    const double fb = difference(b);
    if (!(fa > 0.0 && fb < 0.0))
        return std::nullopt;

    boost::math::tools::eps_tolerance<double> tol(std::numeric_limits<double>::digits - 4);
    std::uintmax_t max_iter = 200;
    const auto [lo, hi] = boost::math::tools::bisect(difference, a, b, tol, max_iter);
    return std::exp(0.5 * (lo + hi));
}

} // namespace cqnc
