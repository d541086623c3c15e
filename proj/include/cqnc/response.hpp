#ifndef CQNC_RESPONSE_HPP
#define CQNC_RESPONSE_HPP

#include "cqnc/params.hpp"

#include <complex>
#include <span>
#include <vector>

namespace cqnc {

using complex = std::complex<double>;

/// Cavity field: 1 / (i omega + kappa/2).
complex chi_c(double omega, double kappa);

/// Mechanics: omega_m / (omega_m^2 - omega^2 + i omega gamma_m).
/// Throws DivisionSingularity for gamma_m = 0 exactly on resonance.
complex chi_m(double omega, double omega_m, double gamma_m);

/// Inverted atomic ensemble (negative mass):
/// -omega_m / (omega_m^2 - omega^2 + i omega Gamma + Gamma^2/4).
complex chi_sigma(double omega, double omega_m, double Gamma);

/// Net backaction coupling g^2 chi_m + G^2 chi_sigma. Vanishes identically
/// only in the limit Gamma = gamma_m -> 0 with g = G.
complex backaction_coupling(double omega, const SystemParams& params);

/// Modified quadrature susceptibility of the symmetric mode,
/// 1/chi_c' = 1/chi_c + 2J chi_c [2J - (g^2 chi_m + G^2 chi_sigma)].
/// With J = 0 this returns chi_c unchanged.
complex chi_c_prime(double omega, const SystemParams& params);

struct ResponseSet {
    double omega;
    complex chi_c;
    complex chi_m;
    complex chi_sigma;
    complex chi_c_prime;
};

ResponseSet response(double omega, const SystemParams& params);
std::vector<ResponseSet> response_grid(std::span<const double> omegas,
                                       const SystemParams& params);

} // namespace cqnc

#endif
