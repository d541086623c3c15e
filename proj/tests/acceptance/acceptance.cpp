// Acceptance gate: one [PASS]/[FAIL] line per criterion, non-zero exit on any failure.

#include "cqnc/langevin_oracle.hpp"
#include "cqnc/optimum.hpp"
#include "cqnc/precool.hpp"
#include "cqnc/reproduce.hpp"
#include "cqnc/spectra.hpp"
#include "cqnc/sweep.hpp"
#include "cqnc/validation.hpp"

#include <cfloat>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace cqnc;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Verdict {
    bool pass = true;
    std::ostringstream note;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            note << " [!" << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict sql_anchor()
{
    Verdict v;
    SystemParams p = preset("fig2").params;
    auto at_opt = [&](double w) {
        SystemParams q = p;
        q.g = *optimal_g_standard(w, q).g_opt;
        return s_add_standard(w, q).total;
    };
    const double on = at_opt(p.omega_m);
    const double off = at_opt(p.omega_m + 4.0 * p.gamma_m);
    const double numeric = minimize_standard_numeric(p.omega_m, p).s;
    v.require(rel(on, 1.0) <= 0.005, "S(w_m)");
    v.require(rel(off, std::sqrt(65.0)) <= 0.01, "S(w_m + 4 gamma_m)");
    v.require(rel(numeric, 1.0) <= 0.005, "numeric minimum");
    v.note << "S(w_m) = " << format_number(on) << ", S(w_m+4g_m) = " << format_number(off)
           << " (sqrt65 = " << format_number(std::sqrt(65.0)) << "), numeric min "
           << format_number(numeric);
    return v;
}

Verdict cqnc_limit_anchor()
{
    Verdict v;
    const SystemParams p = preset("fig2").params;
    const double limit = s_cqnc_limit(p.omega_m, p);
    const double correction = p.Gamma * p.Gamma / (4.0 * p.omega_m * p.omega_m);
    v.require(std::abs(limit - 1.0) < 1e-8, "|limit - 1| < 1e-8");
    v.require(std::abs(limit - 1.0) <= correction * (1.0 + 1e-6) + 1e-16, "within Gamma^2/4w_m^2");
    v.note << "s_cqnc_limit(w_m) - 1 = " << format_number(limit - 1.0)
           << ", Gamma^2/4w_m^2 = " << format_number(correction);
    return v;
}

Verdict oracle_equivalence()
{
    Verdict v;
    SystemParams p = preset("fig2").params;
    p.T = 0.0;

    double worst_cqnc = 0.0, min_ratio = INFINITY, max_ratio = 0.0, previous = -1.0;
    bool increasing = true;
    for (int i = 0; i <= 200; ++i) {
        const double w = 0.05 * p.kappa * i / 200.0;
        const double oracle = langevin::oracle_spectrum(w, p, Scheme::ResonantCQNC).total;
        const double dev = rel(s_add_cqnc(w, p, Scheme::ResonantCQNC).total, oracle);
        worst_cqnc = std::max(worst_cqnc, dev);
        if (i > 0) {
            const double u = std::pow(2.0 * w / p.kappa, 2.0);
            min_ratio = std::min(min_ratio, dev / u);
            max_ratio = std::max(max_ratio, dev / u);
            increasing = increasing && dev > previous;
        }
        previous = dev;
    }
    v.require(worst_cqnc <= 0.02, "CQNC <= 2%");
    v.require(increasing && min_ratio > 0.9 && max_ratio < 1.1, "smooth (2w/kappa)^2 growth");

    double worst_standard = 0.0;
    auto standard_probe = [&](SystemParams q, double w) {
        q.g = *optimal_g_standard(w, q).g_opt;
        const double oracle = langevin::oracle_spectrum(w, q, Scheme::Standard).total;
        worst_standard = std::max(worst_standard, rel(s_add_standard(w, q).total, oracle));
    };
    standard_probe(p, p.omega_m);
    SystemParams broad = p;
    broad.kappa = 1e3 * p.omega_m;  // omega << kappa over the whole +-0.2 omega_m band
    for (int i = 0; i <= 40; ++i)
        standard_probe(broad, p.omega_m * (0.8 + 0.4 * i / 40.0));
    v.require(worst_standard <= 0.05, "standard <= 5%");

    std::vector<double> grid(10000);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = 2.0 * p.omega_m * static_cast<double>(i) / static_cast<double>(grid.size() - 1);
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = spectrum_table(p, grid, {Scheme::ResonantCQNC}, true);
    const double elapsed = seconds_since(t0);
    v.require(rows.size() == grid.size() && elapsed < 5.0, "1e4 points < 5 s");

    v.note << "CQNC max dev " << format_number(worst_cqnc) << " on [0, 0.05 kappa], dev/(2w/kappa)^2 in ["
           << format_number(min_ratio) << ", " << format_number(max_ratio) << "]; standard max dev "
           << format_number(worst_standard) << "; 1e4 oracle points in " << format_number(elapsed)
           << " s";
    return v;
}

Verdict backaction_cancellation()
{
    Verdict v;
    SystemParams p = preset("fig2").params;
    p.T = 0.0;
    const double decades = cancellation_decades(0.5 * p.omega_m, p, 1e-2 * p.omega_m);
    const double slope = standard_backaction_slope(p.omega_m, p, 0.1 * p.g, 10.0 * p.g);
    v.require(decades >= 4.0 - 0.01, "cancellation >= 4 decades");
    v.require(std::abs(slope - 2.0) <= 0.01, "standard slope 2.00 +- 0.01");
    v.note << "x_c_in drop " << format_number(decades) << " decades for Gamma = gamma_m / 10; standard slope "
           << format_number(slope);
    return v;
}

Verdict bracket_anchors()
{
    Verdict v;
    const SystemParams p = preset("fig3").params;
    const double heterodyne = shot_bracket(p.kappa / std::sqrt(2.0), p.kappa);
    const double resonant = shot_bracket(0.0, p.kappa);
    v.require(std::abs(heterodyne - 20.25) <= 1e-12, "20.25");
    v.require(resonant == 0.25, "0.25");

    double worst = 0.0;
    const auto grid = default_power_grid(p.omega_m, p, 41);
    const auto het = power_sweep(p.omega_m, p, Scheme::HeterodyneCQNC, grid);
    const auto res = power_sweep(p.omega_m, p, Scheme::ResonantCQNC, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
        worst = std::max(worst, rel(het[i].budget.shot / res[i].budget.shot, 81.0));
    v.require(worst <= 1e-12, "ratio 81");
    v.note << "bracket(kappa/sqrt2) = " << format_number(heterodyne) << ", bracket(0) = "
           << format_number(resonant) << ", shot ratio 81 to " << format_number(worst);
    return v;
}

Verdict fig3_shape()
{
    Verdict v;
    for (const char* fig : {"fig3a", "fig3b"}) {
        const Reproduction r = reproduce(fig);
        for (const auto& c : r.checks) {
            v.require(c.pass, std::string(fig) + " " + c.name);
            if (c.name.find("crossing") != std::string::npos)
                v.note << c.name << " " << format_number(c.value) << " W; ";
            if (c.name == "standard_minimum")
                v.note << fig << " standard min " << format_number(c.value) << "; ";
        }
    }
    return v;
}

Verdict thermal_term()
{
    Verdict v;
    const SystemParams base = preset("fig3").params;
    double worst = 0.0, worst_raw = 0.0;
    bool separable = true, rounded = true;
    for (double T : {0.01, 4.0, 77.0, 300.0}) {
        const double expected = constants::k_B * T / (constants::hbar * base.omega_m);
        for (Scheme s : all_schemes()) {
            for (double x : {0.5, 1.0, 1.5}) {
                const double w = x * base.omega_m;
                // g at the standard optimum keeps S(0) of order one
                SystemParams cold = base;
                cold.T = 0.0;
                cold.g = *optimal_g_standard(w, cold).g_opt;
                SystemParams hot = cold;
                hot.T = T;
                const NoiseBudget a = closed_form(w, hot, s);
                const NoiseBudget b = closed_form(w, cold, s);
                // S(T) - S(0) split into the thermal term plus the T-independent remainder,
                // which avoids cancelling against a total near 1e8 off resonance
                worst = std::max(worst, rel(a.thermal - b.thermal, expected));
                separable = separable && b.thermal == 0.0 && a.shot == b.shot &&
                            a.backaction == b.backaction && a.atomic == b.atomic;
                const double raw = std::abs(a.total - b.total - expected);
                worst_raw = std::max(worst_raw, raw / expected);
                rounded = rounded && raw <= 1e-12 * expected + 4.0 * DBL_EPSILON * a.total;
            }
        }
    }
    SystemParams fig2 = preset("fig2").params;
    fig2.T = 300.0;
    const double room = s_add_standard(fig2.omega_m, fig2).thermal;
    v.require(worst <= 1e-12, "linearity 1e-12");
    v.require(separable, "T enters only through the thermal term");
    v.require(rounded, "raw S(T)-S(0) within rounding of S");
    v.require(rel(room, 2.08e7) <= 0.005, "2.08e7 +- 0.5%");
    v.note << "max rel error of S(T)-S(0) " << format_number(worst) << " (raw subtraction "
           << format_number(worst_raw) << "); 300 K term "
           << format_number(room);
    return v;
}

Verdict appendix()
{
    Verdict v;
    const SystemParams device = preset("appendix").params;
    const double n_th = thermal_occupancy(device.T, device.omega_m).bose_einstein;
    for (CouplingMode mode : {CouplingMode::Optomechanical, CouplingMode::AsWritten}) {
        PrecoolParams p = appendix_precool(device, constants::two_pi * 6e6);
        p.coupling_mode = mode;
        const CoolingResult c = optical_damping(p, device);
        const double ratio = c.Gamma_opt / device.omega_m;
        const double n = n_min(c, device.gamma_m, n_th).n_min;
        if (mode == CouplingMode::Optomechanical) {
            v.require(ratio >= 0.03 && ratio <= 3.0, "Gamma_opt within 10x of 0.3 w_m");
            v.require(n < 1.0, "n_min < 1");
        }
        v.note << to_string(mode) << ": Gamma_opt/w_m = " << format_number(ratio) << ", n_min = "
               << format_number(n) << "; ";
    }
    v.note << "as-written reported only (inconsistent with 0.3 w_m)";
    return v;
}

Verdict property_suite()
{
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = run_validation();
    const double elapsed = seconds_since(t0);
    for (const auto& r : results)
        v.require(r.pass, r.check);
    v.require(elapsed < 60.0, "suite < 60 s");

    ValidationOptions injected;
    injected.injected_mismatch = 0.5;
    bool control_failed = false;
    for (const auto& r : run_validation(injected))
        if (r.check == "cancellation_scaling") control_failed = !r.pass;
    v.require(control_failed, "G = 0.5g must fail cancellation");
    v.note << results.size() << " checks in " << format_number(elapsed)
           << " s; G = 0.5g negative control " << (control_failed ? "fails as required" : "did not fail");
    return v;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "SQL anchor", sql_anchor},
        {2, "CQNC limit anchor", cqnc_limit_anchor},
        {3, "oracle equivalence", oracle_equivalence},
        {4, "backaction cancellation", backaction_cancellation},
        {5, "bracket anchors", bracket_anchors},
        {6, "power-sweep shape", fig3_shape},
        {7, "thermal term", thermal_term},
        {8, "precooling", appendix},
        {9, "property suite", property_suite},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.note << "exception: " << e.what();
        }
        failed += !v.pass;
        std::printf("[%s] criterion %d: %s: %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name,
                    v.note.str().c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
