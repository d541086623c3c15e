#include "cqnc/params.hpp"

#include "cqnc/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace cqnc {

using constants::hbar;
using constants::k_B;
using constants::two_pi;

const char* to_string(Scheme scheme) noexcept
{
    switch (scheme) {
    case Scheme::Standard: return "standard";
    case Scheme::ResonantCQNC: return "resonant-cqnc";
    case Scheme::HeterodyneCQNC: return "heterodyne-cqnc";
    }
    return "unknown";
}

Scheme parse_scheme(std::string_view name)
{
    if (name == "standard") return Scheme::Standard;
    if (name == "resonant" || name == "resonant-cqnc") return Scheme::ResonantCQNC;
    if (name == "heterodyne" || name == "heterodyne-cqnc" || name == "cqnc")
        return Scheme::HeterodyneCQNC;
    throw Error(ErrorCode::InvalidArgument, "unknown scheme '" + std::string(name) + "'");
}

SystemParams apply_scheme(SystemParams params, Scheme scheme)
{
    switch (scheme) {
    case Scheme::Standard:
        params.G = 0.0;
        params.J = 0.0;
        break;
    case Scheme::ResonantCQNC:
        params.J = 0.0;
        break;
    case Scheme::HeterodyneCQNC:
        break;
    }
    return params;
}

namespace {

void require_finite(double value, const char* name)
{
    if (!std::isfinite(value))
        throw Error(ErrorCode::InvalidArgument, std::string(name) + " is not finite");
}

void require_positive(double value, const char* name)
{
    require_finite(value, name);
    if (!(value > 0.0))
        throw Error(ErrorCode::NonPositiveRate, std::string(name) + " must be > 0");
}

void require_nonnegative(double value, const char* name)
{
    require_finite(value, name);
    if (value < 0.0)
        throw Error(ErrorCode::NonPositiveRate, std::string(name) + " must be >= 0");
}

} // namespace

SystemParams validate(SystemParams raw)
{
    require_positive(raw.omega_m, "omega_m");
    require_positive(raw.kappa, "kappa");

    if (raw.quality) {
        require_positive(*raw.quality, "Q");
        const double from_q = raw.omega_m / *raw.quality;
        if (raw.gamma_m != 0.0 &&
            std::abs(raw.gamma_m - from_q) > 1e-9 * from_q) {
            throw Error(ErrorCode::InvalidConfig,
                        "gamma_m and Q are both given and disagree");
        }
        raw.gamma_m = from_q;
        raw.quality.reset();
    }
    require_positive(raw.gamma_m, "gamma_m");

    require_nonnegative(raw.Gamma, "Gamma");
    require_nonnegative(raw.J, "J");
    require_nonnegative(raw.g, "g");
    require_nonnegative(raw.G, "G");
    require_nonnegative(raw.g0, "g0");
    require_nonnegative(raw.omega_L, "omega_L");
    require_finite(raw.T, "T");
    if (raw.T < 0.0)
        throw Error(ErrorCode::InvalidArgument, "T must be >= 0");
    if (raw.m)
        require_positive(*raw.m, "m");
    return raw;
}

FrequencyLayout sensing_layout(const SystemParams& params)
{
    FrequencyLayout layout;
    layout.omega_d = params.omega_L;
    layout.omega_cav = layout.omega_d + params.J;
    layout.omega_c = layout.omega_cav + params.J;
    layout.omega_Omega = layout.omega_c;
    return layout;
}

FrequencyLayout precool_layout(const SystemParams& params, double pump_detuning)
{
    FrequencyLayout layout;
    layout.omega_d = params.omega_L + pump_detuning;
    layout.omega_cav = layout.omega_d + params.J;
    layout.omega_c = layout.omega_cav + params.J;
    layout.omega_Omega = layout.omega_d + params.omega_m;
    return layout;
}

namespace {

SystemParams device_params()
{
    SystemParams p;
    p.omega_m = two_pi * 300e3;
    p.kappa = two_pi * 1e6;
    p.quality = 1e8;
    p.g0 = two_pi * 300.0;
    p.omega_L = two_pi * 384e12;
    p = validate(p);
    // Matched atoms, couplings at the resonant standard-scheme optimum.
    p.Gamma = p.gamma_m;
    p.g = 0.5 * std::sqrt(p.kappa * p.gamma_m);
    p.G = p.g;
    return p;
}

} // namespace

const std::vector<std::string>& preset_names()
{
    static const std::vector<std::string> names{"fig2", "fig3", "appendix"};
    return names;
}

Preset preset(std::string_view name)
{
    SystemParams p = device_params();
    if (name == "fig2") {
        p.J = 0.0;
        return {p, sensing_layout(p)};
    }
    if (name == "fig3") {
        p.J = p.kappa / std::sqrt(2.0);
        return {p, sensing_layout(p)};
    }
    if (name == "appendix") {
        p.J = p.kappa / std::sqrt(2.0);
        p.T = 300.0;
        return {p, precool_layout(p, p.omega_m)};
    }
    throw Error(ErrorCode::UnknownPreset, "'" + std::string(name) + "'");
}

namespace {

double power_per_photon_rate(const SystemParams& params)
{
    if (!(params.g0 > 0.0))
        throw Error(ErrorCode::MissingParameter, "g0 must be > 0 for power conversion");
    if (!(params.omega_L > 0.0))
        throw Error(ErrorCode::MissingParameter, "omega_L must be > 0 for power conversion");
    return 2.0 * hbar * params.omega_L * params.kappa;
}

} // namespace

double photon_number(double g, const SystemParams& params)
{
    if (!(params.g0 > 0.0))
        throw Error(ErrorCode::MissingParameter, "g0 must be > 0");
    const double ratio = g / params.g0;
    return ratio * ratio;
}

double g_to_power(double g, const SystemParams& params)
{
    if (g < 0.0)
        throw Error(ErrorCode::InvalidArgument, "g must be >= 0");
    return power_per_photon_rate(params) * photon_number(g, params);
}

double power_to_g(double power, const SystemParams& params)
{
    if (power < 0.0)
        throw Error(ErrorCode::InvalidArgument, "power must be >= 0");
    return params.g0 * std::sqrt(power / power_per_photon_rate(params));
}

Occupancy thermal_occupancy(double temperature, double omega)
{
    if (temperature < 0.0)
        throw Error(ErrorCode::InvalidArgument, "temperature must be >= 0");
    if (!(omega > 0.0))
        throw Error(ErrorCode::InvalidArgument, "omega must be > 0");
    if (temperature == 0.0)
        return {0.0, 0.0};
    const double x = hbar * omega / (k_B * temperature);
    return {1.0 / x, 1.0 / std::expm1(x)};
}

const char* to_string(ThermalModel model) noexcept
{
    return model == ThermalModel::Classical ? "classical" : "symmetrized";
}

ThermalModel parse_thermal_model(std::string_view name)
{
    if (name == "classical") return ThermalModel::Classical;
    if (name == "symmetrized") return ThermalModel::Symmetrized;
    throw Error(ErrorCode::InvalidArgument,
                "unknown thermal model '" + std::string(name) + "'");
}

double thermal_force_density(const SystemParams& params, ThermalModel model)
{
    const Occupancy n = thermal_occupancy(params.T, params.omega_m);
    return model == ThermalModel::Classical ? n.classical : n.bose_einstein + 0.5;
}

double si_force_density_factor(const SystemParams& params)
{
    if (!params.m)
        throw Error(ErrorCode::MassMissing, "effective mass m is required for SI output");
    return hbar * *params.m * params.omega_m * params.gamma_m;
}

// ---------------------------------------------------------------------------
// Config file

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, int line)
{
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    if (!text.empty() && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw Error(ErrorCode::InvalidConfig, "line " + std::to_string(line) +
                                                  ": bad number '" + std::string(text) + "'");
    }
    return value;
}

} // namespace

SystemParams parse_config(std::string_view text)
{
    SystemParams p;
    using Field = double SystemParams::*;
    static const std::map<std::string, Field, std::less<>> angular{
        {"omega_m", &SystemParams::omega_m}, {"gamma_m", &SystemParams::gamma_m},
        {"Gamma", &SystemParams::Gamma},     {"kappa", &SystemParams::kappa},
        {"J", &SystemParams::J},             {"g", &SystemParams::g},
        {"G", &SystemParams::G},             {"g0", &SystemParams::g0},
        {"omega_L", &SystemParams::omega_L}};

    std::set<std::string, std::less<>> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::InvalidConfig,
                        "line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const double value = parse_number(trim(line.substr(eq + 1)), line_no);

        std::string_view base = key;
        double scale = 1.0;
        if (key.size() > 3 && key.substr(key.size() - 3) == "_hz") {
            base = key.substr(0, key.size() - 3);
            scale = two_pi;
        }
        if (!seen.emplace(base).second) {
            throw Error(ErrorCode::InvalidConfig,
                        "line " + std::to_string(line_no) + ": duplicate key '" + std::string(base) + "'");
        }

        if (auto it = angular.find(base); it != angular.end()) {
            p.*(it->second) = scale * value;
        } else if (scale == 1.0 && base == "Q") {
            p.quality = value;
        } else if (scale == 1.0 && base == "T") {
            p.T = value;
        } else if (scale == 1.0 && base == "m") {
            p.m = value;
        } else {
            throw Error(ErrorCode::InvalidConfig,
                        "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
    }
    return validate(p);
}

SystemParams load_config(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::InvalidConfig, "cannot open config file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_config(buffer.str());
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.detail());
    }
}

} // namespace cqnc
