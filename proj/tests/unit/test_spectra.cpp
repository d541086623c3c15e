#include "cqnc/langevin_oracle.hpp"
#include "cqnc/optimum.hpp"
#include "cqnc/response.hpp"
#include "cqnc/spectra.hpp"

#include "support.hpp"

#include <cfloat>
#include <random>

using namespace cqnc;
using cqnc::test::error_of;
using cqnc::test::rel;

TEST_CASE("shot bracket")
{
    const double kappa = 2.0;
    CHECK(shot_bracket(kappa / std::sqrt(2.0), kappa) == doctest::Approx(20.25).epsilon(1e-14));
    CHECK(shot_bracket(0.0, kappa) == 0.25);
}

TEST_CASE("strong drive reaches the CQNC limit")
{
    SystemParams p = preset("fig3").params;
    p.T = 0.0;
    for (Scheme s : {Scheme::ResonantCQNC, Scheme::HeterodyneCQNC}) {
        for (double x : {0.0, 0.5, 1.0}) {
            const double w = x * p.omega_m;
            SystemParams q = p;
            const double chi = std::abs(chi_m(w, p.omega_m, p.gamma_m));
            q.g = std::sqrt(1e14 * p.kappa / (p.gamma_m * chi * chi));
            const double limit = 0.5 * (1.0 + (w * w + 0.25 * p.Gamma * p.Gamma) / (p.omega_m * p.omega_m));
            CHECK(rel(s_add_cqnc(w, q, s).total, limit) < 1e-6);
            CHECK(rel(s_cqnc_limit(w, q), limit) < 1e-15);
        }
    }
}

TEST_CASE("standard scheme at the analytic optimum")
{
    SystemParams p = preset("fig2").params;
    p.T = 0.0;
    p.g = 0.5 * std::sqrt(p.kappa * p.gamma_m);
    const NoiseBudget b = s_add_standard(p.omega_m, p);
    CHECK(rel(b.total, 1.0) < 1e-12);
    CHECK(rel(b.shot, b.backaction) < 1e-12);
    CHECK(b.atomic == 0.0);

    p.T = 300.0;
    CHECK(rel(s_add_standard(p.omega_m, p).thermal, 2.08e7) < 0.005);
}

TEST_CASE("SQL and CQNC limit values")
{
    SystemParams p = preset("fig2").params;
    CHECK(rel(s_sql(p.omega_m, p), 1.0) < 1e-12);
    CHECK(rel(s_sql(0.0, p), p.Q()) < 1e-12);
    CHECK(rel(s_sql(p.omega_m + 4.0 * p.gamma_m, p), std::sqrt(65.0)) < 1e-6);

    SystemParams bare = p;
    bare.Gamma = 0.0;
    CHECK(s_cqnc_limit(0.0, bare) == 0.5);
    CHECK(rel(s_cqnc_limit(p.omega_m, p), 1.0) < 1e-15);
    CHECK(rel(s_cqnc_limit(2.0 * p.omega_m, p), 2.5) < 1e-15);

    // ratio to the SQL at resonance differs only by O(Gamma^2/omega_m^2)
    const double ratio = s_cqnc_limit(p.omega_m, p) / s_sql(p.omega_m, p);
    CHECK(std::abs(ratio - 1.0) < 10.0 * p.Gamma * p.Gamma / (p.omega_m * p.omega_m) + 1e-15);
}

TEST_CASE("thermal term is additive and exact")
{
    // g at the per-frequency standard optimum keeps S(0) near the SQL rather than 1e17
    for (const char* name : {"fig2", "fig3"}) {
        const SystemParams base = preset(name).params;
        for (double T : {1e-2, 4.0, 300.0}) {
            const double expected = constants::k_B * T / (constants::hbar * base.omega_m);
            for (Scheme s : all_schemes()) {
                for (double x : {0.5, 1.0, 1.3}) {
                    const double w = x * base.omega_m;
                    SystemParams cold = base;
                    cold.T = 0.0;
                    cold.g = *optimal_g_standard(w, cold).g_opt;
                    SystemParams hot = cold;
                    hot.T = T;
                    const NoiseBudget a = closed_form(w, hot, s);
                    const NoiseBudget b = closed_form(w, cold, s);
                    CHECK(rel(a.thermal, expected) < 1e-12);
                    CHECK(b.thermal == 0.0);
                    // the rest of the budget does not see T
                    CHECK(a.shot == b.shot);
                    CHECK(a.backaction == b.backaction);
                    CHECK(a.atomic == b.atomic);
                    // direct subtraction, up to rounding of a total that can reach 1e8
                    const double rounding = 4.0 * DBL_EPSILON * a.total;
                    CHECK(std::abs(a.total - b.total - expected) <= 1e-12 * expected + rounding);
                }
            }
        }
    }
}

TEST_CASE("CQNC noise decreases strictly in g toward the limit")
{
    SystemParams p = preset("fig3").params;
    p.T = 0.0;
    for (Scheme s : {Scheme::ResonantCQNC, Scheme::HeterodyneCQNC}) {
        for (double x : {0.5, 1.0, 1.5}) {
            const double w = x * p.omega_m;
            const double limit = s_cqnc_limit(w, p);
            double previous = INFINITY, gap_low = 0.0;
            for (int k = -20; k <= 40; ++k) {
                SystemParams q = p;
                q.g = p.g * std::pow(10.0, 0.1 * k);
                const double total = s_add_cqnc(w, q, s).total;
                CHECK(total < previous);
                CHECK(total > limit);
                if (k == -20) gap_low = total - limit;
                previous = total;
            }
            // the excess is pure shot noise, so six decades of g give twelve of gap
            CHECK(rel((previous - limit) / gap_low, 1e-12) < 1e-6);
        }
    }
}

TEST_CASE("general components reduce to the closed forms")
{
    SUBCASE("matched CQNC")
    {
        for (const char* name : {"fig2", "fig3"}) {
            SystemParams p = preset(name).params;
            p.T = 0.0;
            p.gamma_m = p.Gamma = 1e-6 * p.omega_m;
            p.g = p.G = 0.5 * std::sqrt(p.kappa * p.gamma_m);
            const double w = 0.01 * p.kappa;
            CHECK(rel(f_add_components(w, p).total, s_add_cqnc(w, p).total) < 0.02);
        }
    }
    SUBCASE("standard")
    {
        SystemParams p = preset("fig2").params;
        p.T = 0.0;
        for (double x : {0.001, 0.01, 0.03}) {
            const double w = x * p.kappa;
            const NoiseBudget general = f_add_components(w, p, Scheme::Standard);
            CHECK(rel(general.total, s_add_standard(w, p).total) < 0.02);
            CHECK(general.atomic == 0.0);
        }
    }
}

TEST_CASE("mismatched coupling leaves a quadratic residual")
{
    SystemParams p = preset("fig2").params;
    p.T = 0.0;
    p.gamma_m = p.Gamma = 1e-8 * p.omega_m;
    const double w = 0.01 * p.kappa;
    auto residual = [&](double ratio) {
        SystemParams q = p;
        q.G = ratio * q.g;
        return f_add_components(w, q, Scheme::ResonantCQNC).backaction;
    };
    const double reference = residual(0.9);
    CHECK(reference > 0.0);
    for (double r : {0.0, 0.5, 0.8, 0.95}) {
        const double expected = std::pow((1.0 - r * r) / (1.0 - 0.81), 2.0);
        CHECK(rel(residual(r) / reference, expected) < 1e-3);
    }
}

TEST_CASE("general components match the oracle on the validation band")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const SystemParams base = preset("fig3").params;
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        SystemParams p = base;
        p.g *= std::pow(10.0, 4.0 * u(rng) - 2.0);
        p.G = p.g * 1.5 * u(rng);
        p.J = p.kappa * u(rng);
        p.gamma_m = p.omega_m * std::pow(10.0, -8.0 + 6.0 * u(rng));
        p.Gamma = p.omega_m * std::pow(10.0, -8.0 + 6.0 * u(rng));
        p.T = 300.0 * u(rng);
        const double w = 0.05 * p.kappa * u(rng);
        for (Scheme s : all_schemes()) {
            const double oracle = langevin::oracle_spectrum(w, p, s).total;
            worst = std::max(worst, rel(f_add_components(w, p, s).total, oracle));
        }
    }
    CHECK(worst <= 0.02);
}

TEST_CASE("components are nonnegative and sum to the total")
{
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    SystemParams p = preset("fig3").params;
    for (int i = 0; i < 500; ++i) {
        SystemParams q = p;
        q.g *= std::pow(10.0, 4.0 * u(rng) - 2.0);
        q.G = q.g * 1.5 * u(rng);
        q.Gamma = q.omega_m * std::pow(10.0, -8.0 + 6.0 * u(rng));
        const NoiseBudget b = f_add_components(q.omega_m * 2.0 * u(rng), q);
        for (double v : {b.thermal, b.shot, b.backaction, b.atomic})
            CHECK(v >= 0.0);
        CHECK(rel(b.thermal + b.shot + b.backaction + b.atomic, b.total) < 1e-14);
    }
}

TEST_CASE("error paths and flags")
{
    SystemParams p = preset("fig2").params;
    CHECK(error_of([&] { s_add_cqnc(1.0, p, Scheme::Standard); }) == ErrorCode::InvalidArgument);
    CHECK(error_of([&] { to_si(s_add_standard(1.0, p), p); }) == ErrorCode::MassMissing);

    CHECK_FALSE(s_add_standard(0.1 * p.kappa, p).outside_validity);
    CHECK(s_add_standard(0.2 * p.kappa, p).outside_validity);

    SystemParams off = p;
    off.g = 0.0;
    CHECK(error_of([&] { s_add_standard(1.0, off); }) == ErrorCode::ZeroCoupling);
    CHECK(error_of([&] { s_add_cqnc(1.0, off); }) == ErrorCode::ZeroCoupling);
    CHECK(error_of([&] { f_add_components(1.0, off); }) == ErrorCode::ZeroCoupling);

    p.m = 2e-12;
    const NoiseBudget b = s_add_standard(p.omega_m, p);
    const NoiseBudget si = to_si(b, p);
    const double factor = constants::hbar * 2e-12 * p.omega_m * p.gamma_m;
    REQUIRE(si.normalization.has_value());
    CHECK(rel(*si.normalization, factor) < 1e-15);
    CHECK(rel(si.total, b.total * factor) < 1e-15);
    CHECK(rel(si.shot, b.shot * factor) < 1e-15);
}
