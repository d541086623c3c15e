#include "cqnc/sweep.hpp"

#include "cqnc/error.hpp"
#include "cqnc/langevin_oracle.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ostream>

namespace cqnc {

void validate(const SweepSpec& spec)
{
    if (!std::isfinite(spec.start) || !std::isfinite(spec.stop))
        throw Error(ErrorCode::InvalidArgument, "sweep bounds must be finite");
    if (!(spec.start < spec.stop))
        throw Error(ErrorCode::InvalidArgument, "sweep start must be below stop");
    if (spec.points < 2)
        throw Error(ErrorCode::InvalidArgument, "sweep needs at least 2 points");
    if (spec.spacing == Spacing::Log && !(spec.start > 0.0))
        throw Error(ErrorCode::InvalidArgument, "log spacing needs start > 0");
    if (spec.schemes.empty())
        throw Error(ErrorCode::InvalidArgument, "no scheme selected");
    if (!(spec.temperature >= 0.0))
        throw Error(ErrorCode::InvalidArgument, "temperature must be >= 0");
}

std::vector<double> make_grid(const SweepSpec& spec)
{
    validate(spec);
    std::vector<double> grid(spec.points);
    const double last = static_cast<double>(spec.points - 1);
    for (std::size_t i = 0; i < spec.points; ++i) {
        const double t = static_cast<double>(i) / last;
        if (spec.spacing == Spacing::Linear) {
            grid[i] = spec.start + (spec.stop - spec.start) * t;
        } else {
            grid[i] = spec.start * std::pow(spec.stop / spec.start, t);
        }
    }
    grid.front() = spec.start;
    grid.back() = spec.stop;
    return grid;
}

double parse_frequency(std::string_view text, const SystemParams& params)
{
    std::string lower;
    for (char c : text)
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

    struct Unit {
        std::string_view suffix;
        double scale;
    };
    const std::array<Unit, 5> units{{{"wm", params.omega_m},
                                     {"khz", constants::two_pi * 1e3},
                                     {"mhz", constants::two_pi * 1e6},
                                     {"hz", constants::two_pi},
                                     {"rad", 1.0}}};
    std::string_view number = lower;
    double scale = 1.0;
    for (const auto& unit : units) {
        if (number.size() > unit.suffix.size() &&
            number.substr(number.size() - unit.suffix.size()) == unit.suffix) {
            number.remove_suffix(unit.suffix.size());
            scale = unit.scale;
            break;
        }
    }
    double value = 0.0;
    const char* begin = number.data();
    const char* end = begin + number.size();
    if (begin != end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || begin == end)
        throw Error(ErrorCode::InvalidArgument, "bad frequency '" + std::string(text) + "'");
    return value * scale;
}

std::string format_number(double value)
{
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::general, 9);
    if (ec != std::errc())
        throw Error(ErrorCode::InvalidArgument, "number formatting failed");
    return std::string(buf.data(), ptr);
}

std::size_t worker_count()
{
    if (const char* env = std::getenv("CQNC_WORKERS")) {
        std::size_t n = 0;
        const std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
        if (ec == std::errc() && ptr == s.data() + s.size() && n > 0)
            return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SpectrumRow> spectrum_table(const SystemParams& params,
                                        const std::vector<double>& omegas,
                                        const std::vector<Scheme>& schemes, bool with_oracle,
                                        SpectrumModel model)
{
    const std::size_t per_point = schemes.size();
    return parallel_map(omegas.size() * per_point, [&](std::size_t k) {
        const double omega = omegas[k / per_point];
        const Scheme scheme = schemes[k % per_point];
        SpectrumRow row{scheme, {}, std::nullopt, std::nullopt};
        row.budget = model == SpectrumModel::ClosedForm
                         ? closed_form(omega, params, scheme)
                         : f_add_components(omega, params, scheme);
        if (with_oracle) {
            const double oracle = langevin::oracle_spectrum(omega, params, scheme).total;
            row.oracle_total = oracle;
            row.rel_dev = std::abs(row.budget.total - oracle) / oracle;
        }
        return row;
    });
}

void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumRow>& rows,
                        bool with_oracle)
{
    out << "omega_rad_s,scheme,total,thermal,shot,backaction,atomic";
    if (with_oracle) out << ",oracle_total,rel_dev";
    out << '\n';
    for (const auto& row : rows) {
        const NoiseBudget& b = row.budget;
        out << format_number(b.omega) << ',' << to_string(row.scheme) << ','
            << format_number(b.total) << ',' << format_number(b.thermal) << ','
            << format_number(b.shot) << ',' << format_number(b.backaction) << ','
            << format_number(b.atomic);
        if (with_oracle) {
            out << ',' << format_number(row.oracle_total.value_or(NAN)) << ','
                << format_number(row.rel_dev.value_or(NAN));
        }
        out << '\n';
    }
}

std::vector<PowerRow> power_table(const SystemParams& params, double omega,
                                  const std::vector<double>& powers,
                                  const std::vector<Scheme>& schemes)
{
    std::vector<PowerRow> rows;
    rows.reserve(powers.size() * schemes.size());
    std::vector<std::vector<SweepPoint>> per_scheme;
    for (Scheme s : schemes)
        per_scheme.push_back(power_sweep(omega, params, s, powers));
    for (std::size_t i = 0; i < powers.size(); ++i)
        for (std::size_t s = 0; s < schemes.size(); ++s)
            rows.push_back({schemes[s], per_scheme[s][i]});
    return rows;
}

void write_power_csv(std::ostream& out, const std::vector<PowerRow>& rows,
                     const SystemParams& params)
{
    out << "power_W,g_rad_s,photon_number,scheme,total,thermal,shot,backaction,atomic\n";
    for (const auto& row : rows) {
        const NoiseBudget& b = row.point.budget;
        out << format_number(row.point.power) << ',' << format_number(row.point.g) << ','
            << format_number(photon_number(row.point.g, params)) << ','
            << to_string(row.scheme) << ',' << format_number(b.total) << ','
            << format_number(b.thermal) << ',' << format_number(b.shot) << ','
            << format_number(b.backaction) << ',' << format_number(b.atomic) << '\n';
    }
}

nlohmann::json to_json(const NoiseBudget& b)
{
    nlohmann::json j{{"schema_version", kSchemaVersion},
                     {"omega", b.omega},
                     {"thermal", b.thermal},
                     {"shot", b.shot},
                     {"backaction", b.backaction},
                     {"atomic", b.atomic},
                     {"total", b.total},
                     {"outside_validity", b.outside_validity}};
    j["normalization"] = b.normalization ? nlohmann::json(*b.normalization) : nlohmann::json();
    return j;
}

nlohmann::json to_json(const SpectrumRow& row)
{
    nlohmann::json j = to_json(row.budget);
    j["scheme"] = to_string(row.scheme);
    if (row.oracle_total) j["oracle_total"] = *row.oracle_total;
    if (row.rel_dev) j["rel_dev"] = *row.rel_dev;
    return j;
}

nlohmann::json to_json(const OptimumResult& r)
{
    auto opt = [](const std::optional<double>& v) {
        return v ? nlohmann::json(*v) : nlohmann::json();
    };
    return {{"schema_version", kSchemaVersion},
            {"omega", r.omega},
            {"scheme", to_string(r.scheme)},
            {"g_opt", r.asymptotic() ? nlohmann::json("asymptotic") : nlohmann::json(*r.g_opt)},
            {"s_min", r.s_min},
            {"thermal", r.thermal},
            {"g_99", opt(r.g_99)},
            {"power_opt", opt(r.power_opt)}};
}

} // namespace cqnc
