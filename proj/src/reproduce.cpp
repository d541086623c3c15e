#include "cqnc/reproduce.hpp"

#include "cqnc/error.hpp"
#include "cqnc/optimum.hpp"
#include "cqnc/precool.hpp"
#include "cqnc/spectra.hpp"
#include "cqnc/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cqnc {

bool Reproduction::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

const std::vector<std::string>& reproducible_figures()
{
    static const std::vector<std::string> figures{"fig2", "fig3a", "fig3b", "appendix"};
    return figures;
}

namespace {

AnchorCheck relative_anchor(std::string name, double value, double expected, double tol)
{
    const double dev = std::abs(value - expected) / std::abs(expected);
    return {std::move(name), value, expected, "rel <= " + format_number(tol), dev <= tol};
}

void finish_summary(Reproduction& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"value", c.value},
                          {"expected", c.expected},
                          {"criterion", c.criterion},
                          {"status", c.pass ? "pass" : "fail"}});
    }
    r.summary["schema_version"] = kSchemaVersion;
    r.summary["figure"] = r.figure;
    r.summary["checks"] = checks;
    r.summary["status"] = r.all_pass() ? "pass" : "fail";
}

double standard_at_optimum(double omega, SystemParams p)
{
    p.T = 0.0;
    p.g = *optimal_g_standard(omega, p).g_opt;
    return s_add_standard(omega, p).total;
}

Reproduction reproduce_fig2()
{
    Reproduction r;
    r.figure = "fig2";
    SystemParams p = preset("fig2").params;
    p.T = 0.0;
    const double wm = p.omega_m;

    std::vector<double> grid;
    for (int i = 0; i <= 1000; ++i)
        grid.push_back(wm * (0.5 + i / 1000.0));
    for (int k = -20; k <= 20; ++k)
        grid.push_back(wm + k * p.gamma_m);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    struct Row {
        double omega, standard, g_opt, power, sql, cqnc;
    };
    const auto rows = parallel_map(grid.size(), [&](std::size_t i) {
        const double w = grid[i];
        const OptimumResult opt = optimal_g_standard(w, p);
        return Row{w, standard_at_optimum(w, p), *opt.g_opt, opt.power_opt.value_or(NAN),
                   s_sql(w, p), s_cqnc_limit(w, p)};
    });

    std::ostringstream csv;
    csv << "omega_rad_s,omega_over_wm,standard_opt,g_opt_rad_s,power_opt_W,sql,cqnc_limit\n";
    for (const auto& row : rows) {
        csv << format_number(row.omega) << ',' << format_number(row.omega / wm) << ','
            << format_number(row.standard) << ',' << format_number(row.g_opt) << ','
            << format_number(row.power) << ',' << format_number(row.sql) << ','
            << format_number(row.cqnc) << '\n';
    }
    r.files.push_back({"fig2.csv", csv.str()});

    const auto min_it = std::min_element(rows.begin(), rows.end(),
                                         [](const Row& a, const Row& b) { return a.standard < b.standard; });
    r.checks.push_back(relative_anchor("standard_opt_at_resonance", standard_at_optimum(wm, p), 1.0, 0.005));
    r.checks.push_back(relative_anchor("standard_opt_at_4gamma_detuning",
                                       standard_at_optimum(wm + 4.0 * p.gamma_m, p),
                                       std::sqrt(65.0), 0.01));
    r.checks.push_back(relative_anchor("standard_curve_minimum", min_it->standard, 1.0, 0.005));
    r.checks.push_back({"standard_minimum_location_over_wm", min_it->omega / wm, 1.0,
                        "exact grid point", min_it->omega == wm});
    const double limit = s_cqnc_limit(wm, p);
    r.checks.push_back({"cqnc_limit_at_resonance", limit, 1.0, "abs <= 1e-8",
                        std::abs(limit - 1.0) <= 1e-8});
    finish_summary(r);
    return r;
}

bool monotone_nonincreasing(const std::vector<SweepPoint>& sweep)
{
    for (std::size_t i = 1; i < sweep.size(); ++i)
        if (sweep[i].budget.total > sweep[i - 1].budget.total) return false;
    return true;
}

Reproduction reproduce_fig3(bool on_resonance)
{
    Reproduction r;
    r.figure = on_resonance ? "fig3a" : "fig3b";
    SystemParams p = preset("fig3").params;
    p.T = 0.0;
    const double w = on_resonance ? p.omega_m : p.omega_m + 4.0 * p.gamma_m;
    const double expected_min = on_resonance ? 1.0 : std::sqrt(65.0);
    const double min_tol = on_resonance ? 0.005 : 0.01;

    const auto grid = default_power_grid(w, p, 401);
    const auto rows = power_table(p, w, grid, all_schemes());
    std::ostringstream csv;
    write_power_csv(csv, rows, p);
    r.files.push_back({r.figure + ".csv", csv.str()});

    const auto standard = power_sweep(w, p, Scheme::Standard, grid);
    const auto resonant = power_sweep(w, p, Scheme::ResonantCQNC, grid);
    const auto heterodyne = power_sweep(w, p, Scheme::HeterodyneCQNC, grid);

    const auto min_it = std::min_element(standard.begin(), standard.end(), [](const auto& a, const auto& b) {
        return a.budget.total < b.budget.total;
    });
    const bool interior = min_it != standard.begin() && min_it != std::prev(standard.end());
    r.checks.push_back({"standard_minimum_interior", static_cast<double>(min_it - standard.begin()),
                        static_cast<double>(grid.size() / 2), "not an endpoint", interior});
    r.checks.push_back(relative_anchor("standard_minimum", minimize_standard_numeric(w, p).s,
                                       expected_min, min_tol));
    r.checks.push_back({"resonant_cqnc_monotone", 1.0, 1.0, "nonincreasing in P",
                        monotone_nonincreasing(resonant)});
    r.checks.push_back({"heterodyne_cqnc_monotone", 1.0, 1.0, "nonincreasing in P",
                        monotone_nonincreasing(heterodyne)});
    const std::size_t mid = grid.size() / 2;
    r.checks.push_back(relative_anchor("heterodyne_over_resonant_shot",
                                       heterodyne[mid].budget.shot / resonant[mid].budget.shot,
                                       81.0, 1e-12));
    r.checks.push_back(relative_anchor("cqnc_asymptote", s_cqnc_limit(w, p), 1.0, 0.005));

    if (!on_resonance) {
        for (Scheme s : {Scheme::ResonantCQNC, Scheme::HeterodyneCQNC}) {
            const auto cross = crossing_power(w, p, s, grid.front(), grid.back());
            r.checks.push_back({std::string(to_string(s)) + "_crossing_power_W",
                                cross.value_or(NAN), NAN, "finite crossing found",
                                cross.has_value() && std::isfinite(*cross)});
        }
    }
    finish_summary(r);
    return r;
}

Reproduction reproduce_appendix()
{
    Reproduction r;
    r.figure = "appendix";
    const SystemParams device = preset("appendix").params;
    const double n_th = thermal_occupancy(device.T, device.omega_m).bose_einstein;

    nlohmann::json modes = nlohmann::json::object();
    std::ostringstream csv;
    csv << "coupling_mode,abs_d,Gamma_opt_over_wm,A_minus,A_plus,n_min\n";
    for (CouplingMode mode : {CouplingMode::Optomechanical, CouplingMode::AsWritten}) {
        PrecoolParams pc = appendix_precool(device);
        pc.coupling_mode = mode;
        const CoolingResult cooling = optical_damping(pc, device);
        const PhononOccupancy occ = n_min(cooling, device.gamma_m, n_th);
        const double ratio = cooling.Gamma_opt / device.omega_m;
        modes[to_string(mode)] = {{"d_real", cooling.d_ss.real()},
                                  {"d_imag", cooling.d_ss.imag()},
                                  {"abs_d", std::abs(cooling.d_ss)},
                                  {"Gamma_opt_over_omega_m", ratio},
                                  {"A_minus", cooling.A_minus},
                                  {"A_plus", cooling.A_plus},
                                  {"n_min", occ.n_min},
                                  {"negative_damping", occ.negative_damping}};
        csv << to_string(mode) << ',' << format_number(std::abs(cooling.d_ss)) << ','
            << format_number(ratio) << ',' << format_number(cooling.A_minus) << ','
            << format_number(cooling.A_plus) << ',' << format_number(occ.n_min) << '\n';

        if (mode == CouplingMode::Optomechanical) {
            const double factor = ratio / 0.3;
            r.checks.push_back({"Gamma_opt_over_0.3wm", factor, 1.0, "within [0.1, 10]",
                                factor >= 0.1 && factor <= 10.0});
            r.checks.push_back({"n_min_from_300K", occ.n_min, 1.0, "< 1", occ.n_min < 1.0});
        }
    }
    r.files.push_back({"appendix.csv", csv.str()});
    r.summary["n_th"] = n_th;
    r.summary["gamma_e"] = kDefaultExcitedLinewidth;
    r.summary["coupling_modes"] = modes;
    r.summary["note"] =
        "as-written coupling uses the collective Raman coupling G0 and is orders of magnitude "
        "away from Gamma_opt ~ 0.3 omega_m; the optomechanical reading is the default";
    finish_summary(r);
    return r;
}

} // namespace

Reproduction reproduce(std::string_view figure)
{
    if (figure == "fig2") return reproduce_fig2();
    if (figure == "fig3a") return reproduce_fig3(true);
    if (figure == "fig3b") return reproduce_fig3(false);
    if (figure == "appendix") return reproduce_appendix();
    throw Error(ErrorCode::InvalidArgument, "unknown figure '" + std::string(figure) + "'");
}

} // namespace cqnc
