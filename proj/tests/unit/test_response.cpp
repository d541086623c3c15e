#include "cqnc/response.hpp"
#include "cqnc/params.hpp"

#include "support.hpp"

#include <random>
#include <vector>

using namespace cqnc;
using cqnc::test::error_of;
using cqnc::test::rel;
using constants::two_pi;

TEST_CASE("cavity susceptibility")
{
    const double kappa = two_pi * 1e6;
    CHECK(chi_c(0.0, kappa) == complex(2.0 / kappa, 0.0));
    CHECK(rel(chi_c(0.5 * kappa, kappa), complex(1.0, -1.0) / kappa) < 1e-15);
    CHECK(rel(chi_c(0.0, kappa).real(), 3.1831e-7) < 1e-4);
}

TEST_CASE("mechanical susceptibility")
{
    const SystemParams p = preset("fig2").params;
    CHECK(rel(chi_m(0.0, p.omega_m, p.gamma_m), complex(1.0 / p.omega_m, 0.0)) < 1e-15);
    CHECK(rel(chi_m(p.omega_m, p.omega_m, p.gamma_m), 1.0 / complex(0.0, p.gamma_m)) < 1e-15);
    CHECK(rel(std::abs(chi_m(p.omega_m, p.omega_m, p.gamma_m)), 1.0 / p.gamma_m) < 1e-15);

    // omega_m^2 - omega^2 ~ -8 omega_m gamma_m  ->  |chi_m| ~ 1 / (gamma_m sqrt 65)
    const double w = p.omega_m + 4.0 * p.gamma_m;
    CHECK(rel(std::abs(chi_m(w, p.omega_m, p.gamma_m)), 1.0 / (p.gamma_m * std::sqrt(65.0))) < 0.01);

    CHECK(error_of([&] { chi_m(p.omega_m, p.omega_m, 0.0); }) == ErrorCode::DivisionSingularity);
    CHECK_NOTHROW(chi_m(0.5 * p.omega_m, p.omega_m, 0.0));
}

TEST_CASE("atomic susceptibility")
{
    const double wm = two_pi * 300e3;
    CHECK(rel(chi_sigma(0.0, wm, 0.0), complex(-1.0 / wm, 0.0)) < 1e-15);

    const double gamma = wm * 1e-8;
    const complex at_resonance = chi_sigma(wm, wm, gamma);
    CHECK(rel(at_resonance, complex(0.0, 1.0) / gamma) < 1e-7);
    CHECK(rel(at_resonance, -chi_m(wm, wm, gamma)) < 1e-7);
}

TEST_CASE("conjugate symmetry over random draws")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double wm = two_pi * std::pow(10.0, 3.0 + 4.0 * u(rng));
        const double kappa = wm * std::pow(10.0, -1.0 + 3.0 * u(rng));
        const double gm = wm * std::pow(10.0, -8.0 + 7.0 * u(rng));
        const double w = wm * (6.0 * u(rng) - 3.0);
        CHECK(rel(chi_c(-w, kappa), std::conj(chi_c(w, kappa))) <= 1e-14);
        CHECK(rel(chi_m(-w, wm, gm), std::conj(chi_m(w, wm, gm))) <= 1e-14);
        CHECK(rel(chi_sigma(-w, wm, gm), std::conj(chi_sigma(w, wm, gm))) <= 1e-14);
    }
}

TEST_CASE("backaction coupling")
{
    SystemParams p = preset("fig2").params;
    SUBCASE("G = 0 reduces to g^2 chi_m")
    {
        p.G = 0.0;
        const double w = 0.7 * p.omega_m;
        CHECK(backaction_coupling(w, p) == p.g * p.g * chi_m(w, p.omega_m, p.gamma_m));
    }
    SUBCASE("agrees with the naive sum when nothing cancels")
    {
        p.G = 0.4 * p.g;
        p.Gamma = 1e-3 * p.omega_m;
        for (double x : {0.0, 0.3, 0.9, 1.5}) {
            const double w = x * p.omega_m;
            const complex naive = p.g * p.g * chi_m(w, p.omega_m, p.gamma_m) +
                                  p.G * p.G * chi_sigma(w, p.omega_m, p.Gamma);
            CHECK(rel(backaction_coupling(w, p), naive) < 1e-12);
        }
    }
    SUBCASE("matched residual is bounded by the Gamma^2 term")
    {
        // |g^2 chi_m + G^2 chi_sigma| <= c g^2 |chi_m| |chi_sigma| Gamma^2/(4 omega_m), c <= 2
        for (double gamma_ratio : {1e-8, 1e-5, 1e-2}) {
            p.gamma_m = p.Gamma = gamma_ratio * p.omega_m;
            p.G = p.g;
            double worst = 0.0;
            for (int i = 0; i <= 400; ++i) {
                const double w = 2.0 * p.omega_m * i / 400.0;
                const double bound = p.g * p.g * std::abs(chi_m(w, p.omega_m, p.gamma_m)) *
                                     std::abs(chi_sigma(w, p.omega_m, p.Gamma)) * p.Gamma *
                                     p.Gamma / (4.0 * p.omega_m);
                worst = std::max(worst, std::abs(backaction_coupling(w, p)) / bound);
            }
            CHECK(worst <= 2.0);
        }
    }
}

TEST_CASE("modified cavity susceptibility")
{
    SystemParams p = preset("fig2").params;
    p.J = 0.0;
    for (double w : {0.0, 1e3, 1e6})
        CHECK(chi_c_prime(w, p) == chi_c(w, p.kappa));

    // matched, Gamma -> 0, omega << kappa: 1/(chi_c' kappa) -> 1/2 + 8 J^2/kappa^2
    p.gamma_m = p.Gamma = 1e-10 * p.omega_m;
    p.G = p.g;
    const double w = 1e-4 * p.kappa;
    for (double j_ratio : {0.1, 0.3, 0.5}) {
        p.J = j_ratio * p.kappa;
        const complex inv = 1.0 / (chi_c_prime(w, p) * p.kappa);
        CHECK(rel(inv.real(), 0.5 + 8.0 * j_ratio * j_ratio) < 1e-6);
        CHECK(std::abs(inv.imag()) < 1e-3);
    }

    SystemParams fig3 = preset("fig3").params;
    fig3.gamma_m = fig3.Gamma = 1e-10 * fig3.omega_m;
    fig3.g = fig3.G = 0.5 * std::sqrt(fig3.kappa * fig3.gamma_m);
    const complex inv = 1.0 / (chi_c_prime(1e-4 * fig3.kappa, fig3) * fig3.kappa);
    CHECK(rel(inv.real(), 4.5) < 1e-6);
}

TEST_CASE("response grid")
{
    const SystemParams p = preset("fig3").params;
    const std::vector<double> grid{0.0, 0.5 * p.omega_m, p.omega_m};
    const auto set = response_grid(grid, p);
    REQUIRE(set.size() == 3);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(set[i].omega == grid[i]);
        CHECK(set[i].chi_c == chi_c(grid[i], p.kappa));
        CHECK(set[i].chi_m == chi_m(grid[i], p.omega_m, p.gamma_m));
        CHECK(set[i].chi_sigma == chi_sigma(grid[i], p.omega_m, p.Gamma));
        CHECK(set[i].chi_c_prime == chi_c_prime(grid[i], p));
    }
}
