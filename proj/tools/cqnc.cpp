// cqnc: command-line front end for the noise-spectrum library.
//
// Exit codes: 0 ok, 1 check failure, 2 usage/config error, 3 numerical error.

#include "cqnc/error.hpp"
#include "cqnc/optimum.hpp"
#include "cqnc/params.hpp"
#include "cqnc/precool.hpp"
#include "cqnc/reproduce.hpp"
#include "cqnc/sweep.hpp"
#include "cqnc/validation.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace cqnc;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kNumerical = 3 };

struct Common {
    std::string preset = "fig2";
    std::string config;
    std::optional<double> temperature;
    std::string format = "csv";
    std::string output;
};

void add_common(CLI::App* cmd, Common& c, bool with_format = true)
{
    auto* preset = cmd->add_option("--preset", c.preset, "parameter preset")
                       ->check(CLI::IsMember(preset_names()));
    cmd->add_option("--config", c.config, "key = value parameter file")->excludes(preset);
    cmd->add_option("--temperature", c.temperature, "bath temperature in K");
    if (with_format)
        cmd->add_option("--format", c.format)->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("-o,--output", c.output, "write to file instead of stdout");
}

SystemParams load(const Common& c)
{
    SystemParams p = c.config.empty() ? preset(c.preset).params : load_config(c.config);
    if (c.temperature) {
        p.T = *c.temperature;
        p = validate(p);
    }
    return p;
}

std::vector<Scheme> parse_schemes(const std::vector<std::string>& names)
{
    std::vector<Scheme> out;
    for (const auto& n : names) {
        const Scheme s = parse_scheme(n);
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    return out;
}

void emit(const Common& c, const std::string& text)
{
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::InvalidArgument, "cannot write '" + c.output + "'");
    out << text;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// --- spectrum -------------------------------------------------------------

struct SpectrumOpts {
    Common common;
    std::vector<std::string> schemes{"heterodyne-cqnc"};
    std::string from = "0", to = "2wm";
    std::size_t points = 201;
    std::string spacing = "linear";
    bool oracle = false;
    std::string model = "closed";
};

int cmd_spectrum(const SpectrumOpts& o)
{
    const SystemParams p = load(o.common);
    SweepSpec spec;
    spec.axis = Axis::Frequency;
    spec.start = parse_frequency(o.from, p);
    spec.stop = parse_frequency(o.to, p);
    spec.points = o.points;
    spec.spacing = o.spacing == "log" ? Spacing::Log : Spacing::Linear;
    spec.schemes = parse_schemes(o.schemes);
    spec.temperature = p.T;
    const auto grid = make_grid(spec);

    const auto model = o.model == "general" ? SpectrumModel::General : SpectrumModel::ClosedForm;
    const auto rows = spectrum_table(p, grid, spec.schemes, o.oracle, model);

    if (o.common.format == "json") {
        nlohmann::json j{{"schema_version", kSchemaVersion}, {"rows", nlohmann::json::array()}};
        for (const auto& r : rows)
            j["rows"].push_back(to_json(r));
        emit(o.common, json_text(j));
    } else {
        std::ostringstream out;
        write_spectrum_csv(out, rows, o.oracle);
        emit(o.common, out.str());
    }
    return kOk;
}

// --- power-sweep ----------------------------------------------------------

struct PowerOpts {
    Common common;
    std::vector<std::string> schemes{"standard", "resonant-cqnc", "heterodyne-cqnc"};
    std::string omega = "1wm";
    std::optional<double> from, to;
    std::size_t points = 201;
    std::string spacing = "log";
};

int cmd_power_sweep(const PowerOpts& o)
{
    SystemParams p = load(o.common);
    const double w = parse_frequency(o.omega, p);
    std::vector<double> grid;
    if (o.from || o.to) {
        if (!o.from || !o.to)
            throw Error(ErrorCode::InvalidArgument, "--from and --to must be given together");
        SweepSpec spec;
        spec.axis = Axis::Power;
        spec.start = *o.from;
        spec.stop = *o.to;
        spec.points = o.points;
        spec.spacing = o.spacing == "log" ? Spacing::Log : Spacing::Linear;
        spec.schemes = parse_schemes(o.schemes);
        grid = make_grid(spec);
        if (!(grid.front() > 0.0))
            throw Error(ErrorCode::InvalidArgument, "powers must be positive");
    } else {
        if (o.points < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 points");
        grid = default_power_grid(w, p, o.points);
    }
    const auto rows = power_table(p, w, grid, parse_schemes(o.schemes));

    if (o.common.format == "json") {
        nlohmann::json j{{"schema_version", kSchemaVersion},
                         {"omega", w},
                         {"rows", nlohmann::json::array()}};
        for (const auto& r : rows) {
            nlohmann::json row = to_json(r.point.budget);
            row["scheme"] = to_string(r.scheme);
            row["power"] = r.point.power;
            row["g"] = r.point.g;
            j["rows"].push_back(row);
        }
        emit(o.common, json_text(j));
    } else {
        std::ostringstream out;
        write_power_csv(out, rows, p);
        emit(o.common, out.str());
    }
    return kOk;
}

// --- sql ------------------------------------------------------------------

struct SqlOpts {
    Common common;
    std::string omega = "1wm";
    std::vector<std::string> schemes{"standard", "resonant-cqnc", "heterodyne-cqnc"};
    double tolerance = 0.01;
};

int cmd_sql(const SqlOpts& o)
{
    const SystemParams p = load(o.common);
    const double w = parse_frequency(o.omega, p);
    nlohmann::json j{{"schema_version", kSchemaVersion},
                     {"omega", w},
                     {"sql", s_sql(w, p)},
                     {"cqnc_limit", s_cqnc_limit(w, p)},
                     {"optima", nlohmann::json::array()}};
    for (Scheme s : parse_schemes(o.schemes)) {
        const OptimumResult r = s == Scheme::Standard ? optimal_g_standard(w, p)
                                                      : optimal_g_cqnc(w, p, o.tolerance, s);
        j["optima"].push_back(to_json(r));
    }
    emit(o.common, json_text(j));
    return kOk;
}

// --- reproduce ------------------------------------------------------------

struct ReproduceOpts {
    std::string figure;
    std::string outdir = ".";
};

int cmd_reproduce(const ReproduceOpts& o)
{
    const Reproduction r = reproduce(o.figure);
    const std::filesystem::path dir(o.outdir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::InvalidArgument, "cannot create '" + o.outdir + "'");

    auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + (dir / name).string() + "'");
        out << text;
    };
    for (const auto& f : r.files)
        write(f.name, f.csv);
    write(r.figure + "_summary.json", json_text(r.summary));

    std::size_t passed = 0;
    for (const auto& c : r.checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << r.figure << ' ' << c.name << " = "
                  << format_number(c.value) << " (";
        if (!std::isnan(c.expected)) std::cout << "expected " << format_number(c.expected) << ", ";
        std::cout << c.criterion << ")\n";
        passed += c.pass;
    }
    if (r.summary.contains("coupling_modes")) {
        for (const auto& [mode, v] : r.summary["coupling_modes"].items()) {
            std::cout << "  " << mode << ": |<d>| = " << format_number(v["abs_d"].get<double>())
                      << ", Gamma_opt/omega_m = "
                      << format_number(v["Gamma_opt_over_omega_m"].get<double>())
                      << ", n_min = " << format_number(v["n_min"].get<double>()) << '\n';
        }
    }
    std::cout << r.figure << ": " << passed << '/' << r.checks.size() << " anchor checks passed\n";
    return r.all_pass() ? kOk : kCheckFailed;
}

// --- precool --------------------------------------------------------------

struct PrecoolOpts {
    Common common;
    std::string gamma_e = "6mhz";
    std::string mode = "both";
    std::optional<double> power;
};

int cmd_precool(PrecoolOpts o)
{
    if (o.common.config.empty() && o.common.preset == "fig2") o.common.preset = "appendix";
    const SystemParams device = load(o.common);
    const double gamma_e = parse_frequency(o.gamma_e, device);
    const double n_th = thermal_occupancy(device.T, device.omega_m).bose_einstein;

    std::vector<CouplingMode> modes;
    if (o.mode == "both")
        modes = {CouplingMode::Optomechanical, CouplingMode::AsWritten};
    else
        modes = {parse_coupling_mode(o.mode)};

    nlohmann::json j{{"schema_version", kSchemaVersion},
                     {"temperature", device.T},
                     {"n_th", n_th},
                     {"gamma_e", gamma_e},
                     {"results", nlohmann::json::array()}};
    for (CouplingMode mode : modes) {
        PrecoolParams pc = appendix_precool(device, gamma_e);
        pc.coupling_mode = mode;
        if (o.power) pc.P = *o.power;
        const CoolingResult c = optical_damping(pc, device);
        const PhononOccupancy occ = n_min(c, device.gamma_m, n_th);
        j["results"].push_back({{"coupling_mode", to_string(mode)},
                                {"d_real", c.d_ss.real()},
                                {"d_imag", c.d_ss.imag()},
                                {"abs_d", std::abs(c.d_ss)},
                                {"coupling", c.coupling},
                                {"A_minus", c.A_minus},
                                {"A_plus", c.A_plus},
                                {"Gamma_opt", c.Gamma_opt},
                                {"Gamma_opt_over_omega_m", c.Gamma_opt / device.omega_m},
                                {"n_min", occ.n_min},
                                {"negative_damping", occ.negative_damping}});
    }
    emit(o.common, json_text(j));
    return kOk;
}

// --- validate -------------------------------------------------------------

struct ValidateOpts {
    std::uint64_t seed = 42;
    std::size_t draws = 1000;
    std::optional<double> mismatch;
    std::string output;
};

int cmd_validate(const ValidateOpts& o)
{
    ValidationOptions opts;
    opts.seed = o.seed;
    opts.draws = o.draws;
    opts.injected_mismatch = o.mismatch;
    const auto results = run_validation(opts);
    const nlohmann::json report = report_json(results, opts);
    Common sink;
    sink.output = o.output;
    emit(sink, json_text(report));
    return report["status"] == "pass" ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Added-noise spectra for coherent quantum noise cancellation"};
    app.require_subcommand(1);

    SpectrumOpts spectrum;
    auto* sp = app.add_subcommand("spectrum", "added noise vs frequency");
    add_common(sp, spectrum.common);
    sp->add_option("--scheme", spectrum.schemes, "comma-separated schemes")->delimiter(',');
    sp->add_option("--from", spectrum.from, "start frequency (units: wm, hz, khz, mhz, rad)");
    sp->add_option("--to", spectrum.to, "stop frequency");
    sp->add_option("-n,--points", spectrum.points);
    sp->add_option("--spacing", spectrum.spacing)->check(CLI::IsMember({"linear", "log"}));
    sp->add_flag("--oracle", spectrum.oracle, "add oracle_total and rel_dev columns");
    sp->add_option("--model", spectrum.model)->check(CLI::IsMember({"closed", "general"}));

    PowerOpts power;
    auto* pw = app.add_subcommand("power-sweep", "added noise vs input power at fixed frequency");
    add_common(pw, power.common);
    pw->add_option("--scheme", power.schemes)->delimiter(',');
    pw->add_option("--omega", power.omega);
    pw->add_option("--from", power.from, "start power in W");
    pw->add_option("--to", power.to, "stop power in W");
    pw->add_option("-n,--points", power.points);
    pw->add_option("--spacing", power.spacing)->check(CLI::IsMember({"linear", "log"}));

    SqlOpts sql;
    auto* sq = app.add_subcommand("sql", "optimal measurement strength and minimum noise");
    add_common(sq, sql.common, false);
    sq->add_option("--omega", sql.omega);
    sq->add_option("--scheme", sql.schemes)->delimiter(',');
    sq->add_option("--tolerance", sql.tolerance, "shot share defining g_99 for CQNC");

    ReproduceOpts repro;
    auto* rp = app.add_subcommand("reproduce", "regenerate a figure's data with anchor checks");
    rp->add_option("figure", repro.figure)->required()->check(CLI::IsMember(reproducible_figures()));
    rp->add_option("--outdir", repro.outdir);

    PrecoolOpts precool;
    auto* pc = app.add_subcommand("precool", "EIT precooling rates and final occupancy");
    add_common(pc, precool.common, false);
    pc->add_option("--gamma-e", precool.gamma_e, "excited-state linewidth");
    pc->add_option("--coupling-mode", precool.mode)
        ->check(CLI::IsMember({"optomechanical", "as-written", "both"}));
    pc->add_option("--power", precool.power, "pump power in W");

    ValidateOpts val;
    auto* va = app.add_subcommand("validate", "run the invariant suite");
    va->add_option("--seed", val.seed);
    va->add_option("--draws", val.draws)->check(CLI::PositiveNumber);
    va->add_option("--inject-mismatch", val.mismatch, "set G = ratio * g (negative control)");
    va->add_option("-o,--output", val.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*sp) return cmd_spectrum(spectrum);
        if (*pw) return cmd_power_sweep(power);
        if (*sq) return cmd_sql(sql);
        if (*rp) return cmd_reproduce(repro);
        if (*pc) return cmd_precool(precool);
        if (*va) return cmd_validate(val);
    } catch (const Error& e) {
        std::cerr << "cqnc: " << e.what() << '\n';
        return e.is_numerical() ? kNumerical : kUsage;
    } catch (const std::exception& e) {
        std::cerr << "cqnc: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
