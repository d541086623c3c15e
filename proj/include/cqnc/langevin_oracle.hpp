#ifndef CQNC_LANGEVIN_ORACLE_HPP
#define CQNC_LANGEVIN_ORACLE_HPP

#include "cqnc/params.hpp"
#include "cqnc/response.hpp"

#include <Eigen/Dense>

#include <array>

/**
 * Brute-force frequency-domain solution of the linearized Heisenberg-Langevin
 * equations.
 *
 * The six coupled quadrature equations are Fourier transformed with the
 * convention O(omega) = (2 pi)^(-1/2) int dt O(t) exp(-i omega t), so that
 * d/dt -> i omega, and solved as a dense 6x6 complex system for every
 * frequency. Nothing here uses the closed-form susceptibility algebra, which
 * makes the results an independent reference for the spectra module.
 *
 * omega is the Fourier frequency in the frame rotating at the pump frequency
 * omega_d, where the symmetric mode has effective frequency 2J.
 */
namespace cqnc::langevin {

/// State ordering: [x, p, x_c, p_c, x_sigma, p_sigma].
enum StateIndex : int { X = 0, P, Xc, Pc, Xsigma, Psigma, kStateCount };

/// Input ordering: [f, F_ext, x_c_in, p_c_in, x_sigma_in, p_sigma_in].
enum InputIndex : int {
    ThermalForce = 0,
    ExternalForce,
    XcIn,
    PcIn,
    XsigmaIn,
    PsigmaIn,
    kInputCount
};

using Matrix6 = Eigen::Matrix<complex, 6, 6>;
using Vector6 = Eigen::Matrix<complex, 6, 1>;

/// M v = B w with M = i omega - drift.
struct LinearSystem {
    double omega;
    Matrix6 M;
    Matrix6 B;
};

/// Builds the system with the couplings that `scheme` leaves active.
LinearSystem assemble(double omega, const SystemParams& params, Scheme scheme);

/// Solves M v = B w for the 6x6 response matrix v = R w.
/// Throws SingularSystem when M has a zero pivot.
Matrix6 solve(const LinearSystem& system);

/// Gains from every input to the detected quadrature
/// p_c_out = sqrt(kappa) p_c - p_c_in.
struct TransferRow {
    double omega;
    std::array<complex, kInputCount> gain;

    complex force_gain() const { return gain[ExternalForce]; }
};

TransferRow transfer(double omega, const SystemParams& params, Scheme scheme);

/// Added force noise referred to F_ext, split by input channel.
struct ChannelBudget {
    double omega = 0.0;
    double thermal = 0.0;
    double field_x = 0.0;
    double field_p = 0.0;
    double atom_x = 0.0;
    double atom_p = 0.0;
    double total = 0.0;
    /// Largest |Im| / |Re| of the symmetrized per-channel products.
    double imag_residue = 0.0;
};

/// Vacuum spectral density of every optical and atomic input channel.
inline constexpr double kVacuumDensity = 0.5;

/**
 * S_F,add(omega) = sum_ch |T_ch / T_F|^2 S_ch from the symmetrized
 * definition, evaluated with separate solves at +omega and -omega.
 * Temperature is taken from params.T. Throws ZeroCoupling if g = 0.
 */
ChannelBudget oracle_spectrum(double omega, const SystemParams& params, Scheme scheme,
                              ThermalModel thermal = ThermalModel::Classical);

} // namespace cqnc::langevin

#endif
