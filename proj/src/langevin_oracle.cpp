#include "cqnc/langevin_oracle.hpp"

#include "cqnc/error.hpp"

#include <cmath>

namespace cqnc::langevin {

LinearSystem assemble(double omega, const SystemParams& raw, Scheme scheme)
{
    const SystemParams p = apply_scheme(raw, scheme);
    const double wm = p.omega_m;
    const double half_kappa = 0.5 * p.kappa;
    const double half_gamma = 0.5 * p.Gamma;
    const double two_j = 2.0 * p.J;

    // Drift matrix A of dv/dt = A v + B w.
    Eigen::Matrix<double, 6, 6> A = Eigen::Matrix<double, 6, 6>::Zero();
    A(X, P) = wm;

    A(P, X) = -wm;
    A(P, P) = -p.gamma_m;
    A(P, Xc) = -p.g;

    A(Xc, Xc) = -half_kappa;
    A(Xc, Pc) = two_j;

    A(Pc, X) = -p.g;
    A(Pc, Xc) = -two_j;
    A(Pc, Pc) = -half_kappa;
    A(Pc, Xsigma) = -p.G;

    A(Xsigma, Xsigma) = -half_gamma;
    A(Xsigma, Psigma) = -wm;

    A(Psigma, Xc) = -p.G;
    A(Psigma, Xsigma) = wm;
    A(Psigma, Psigma) = -half_gamma;

    LinearSystem sys;
    sys.omega = omega;
    sys.M = complex(0.0, omega) * Matrix6::Identity() - A.cast<complex>();

    sys.B = Matrix6::Zero();
    const double sqrt_gamma_m = std::sqrt(p.gamma_m);
    const double sqrt_kappa = std::sqrt(p.kappa);
    const double sqrt_gamma = std::sqrt(p.Gamma);
    sys.B(P, ThermalForce) = sqrt_gamma_m;
    sys.B(P, ExternalForce) = sqrt_gamma_m;
    sys.B(Xc, XcIn) = sqrt_kappa;
    sys.B(Pc, PcIn) = sqrt_kappa;
    sys.B(Xsigma, XsigmaIn) = sqrt_gamma;
    sys.B(Psigma, PsigmaIn) = sqrt_gamma;
    return sys;
}

Matrix6 solve(const LinearSystem& system)
{
    const Eigen::PartialPivLU<Matrix6> lu(system.M);
    if (lu.matrixLU().diagonal().cwiseAbs().minCoeff() == 0.0)
        throw Error(ErrorCode::SingularSystem, "Langevin matrix has a zero pivot");
    Matrix6 response = lu.solve(system.B);
    if (!response.allFinite())
        throw Error(ErrorCode::SingularSystem, "Langevin solve produced non-finite values");
    return response;
}

TransferRow transfer(double omega, const SystemParams& params, Scheme scheme)
{
    const LinearSystem sys = assemble(omega, params, scheme);
    const Matrix6 response = solve(sys);
    const double sqrt_kappa = std::sqrt(params.kappa);

    TransferRow row;
    row.omega = omega;
    for (int ch = 0; ch < kInputCount; ++ch)
        row.gain[ch] = sqrt_kappa * response(Pc, ch);
    row.gain[PcIn] -= 1.0;
    return row;
}

ChannelBudget oracle_spectrum(double omega, const SystemParams& params, Scheme scheme,
                              ThermalModel thermal)
{
    if (params.g == 0.0)
        throw Error(ErrorCode::ZeroCoupling, "g = 0: the force is not transduced");

    const TransferRow plus = transfer(omega, params, scheme);
    const TransferRow minus = transfer(-omega, params, scheme);
    if (plus.force_gain() == 0.0 || minus.force_gain() == 0.0)
        throw Error(ErrorCode::SingularSystem, "force transfer gain vanishes");

    ChannelBudget out;
    out.omega = omega;

    // 1/2 <F(w) F(-w')> + c.c. for uncorrelated channels.
    auto channel = [&](int ch, double input_density) {
        const complex a_plus = plus.gain[ch] / plus.force_gain();
        const complex a_minus = minus.gain[ch] / minus.force_gain();
        const complex product = a_plus * a_minus;
        if (product.real() != 0.0) {
            out.imag_residue = std::max(out.imag_residue,
                                        std::abs(product.imag()) / std::abs(product.real()));
        }
        return product.real() * input_density;
    };

    out.thermal = channel(ThermalForce, thermal_force_density(params, thermal));
    out.field_x = channel(XcIn, kVacuumDensity);
    out.field_p = channel(PcIn, kVacuumDensity);
    const SystemParams active = apply_scheme(params, scheme);
    if (active.G != 0.0) {
        out.atom_x = channel(XsigmaIn, kVacuumDensity);
        out.atom_p = channel(PsigmaIn, kVacuumDensity);
    }
    out.total = out.thermal + out.field_x + out.field_p + out.atom_x + out.atom_p;
    return out;
}

} // namespace cqnc::langevin
