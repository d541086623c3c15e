#ifndef CQNC_SWEEP_HPP
#define CQNC_SWEEP_HPP

#include "cqnc/optimum.hpp"
#include "cqnc/params.hpp"
#include "cqnc/spectra.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <exception>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace cqnc {

enum class Axis { Frequency, Power };
enum class Spacing { Linear, Log };

struct SweepSpec {
    Axis axis = Axis::Frequency;
    double start = 0.0;
    double stop = 0.0;
    std::size_t points = 2;
    Spacing spacing = Spacing::Linear;
    std::vector<Scheme> schemes;
    double temperature = 0.0;
};

/// start < stop, points >= 2, start > 0 for log spacing, at least one scheme.
void validate(const SweepSpec& spec);
std::vector<double> make_grid(const SweepSpec& spec);

/**
 * Frequency with an optional unit suffix: `wm` (multiples of omega_m),
 * `hz` (times 2 pi), `khz`, `mhz`, `rad` or none (rad/s). Case-insensitive.
 */
double parse_frequency(std::string_view text, const SystemParams& params);

/// 9 significant digits, '.' separator, independent of the global locale.
std::string format_number(double value);

/// Worker count from CQNC_WORKERS, else hardware concurrency (at least 1).
std::size_t worker_count();

/// Evaluates fn(i) for i in [0, n) on `workers` threads; results keep input
/// order. The first exception thrown by any worker is rethrown.
template <class Fn>
auto parallel_map(std::size_t n, Fn fn, std::size_t workers = worker_count())
    -> std::vector<decltype(fn(std::size_t{}))>
{
    using Result = decltype(fn(std::size_t{}));
    std::vector<std::optional<Result>> slots(n);
    workers = std::max<std::size_t>(1, std::min(workers, n));
    std::vector<std::exception_ptr> errors(workers);

    auto run = [&](std::size_t worker) {
        try {
            for (std::size_t i = worker; i < n; i += workers)
                slots[i].emplace(fn(i));
        } catch (...) {
            errors[worker] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
        for (auto& t : pool)
            t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<Result> out;
    out.reserve(n);
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

enum class SpectrumModel {
    ClosedForm,  ///< s_add_standard / s_add_cqnc
    General,     ///< f_add_components
};

struct SpectrumRow {
    Scheme scheme;
    NoiseBudget budget;
    std::optional<double> oracle_total;
    std::optional<double> rel_dev;
};

/// One row per (grid point, scheme), grid-major.
std::vector<SpectrumRow> spectrum_table(const SystemParams& params,
                                        const std::vector<double>& omegas,
                                        const std::vector<Scheme>& schemes, bool with_oracle,
                                        SpectrumModel model = SpectrumModel::ClosedForm);

void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumRow>& rows,
                        bool with_oracle);

struct PowerRow {
    Scheme scheme;
    SweepPoint point;
};

std::vector<PowerRow> power_table(const SystemParams& params, double omega,
                                  const std::vector<double>& powers,
                                  const std::vector<Scheme>& schemes);

void write_power_csv(std::ostream& out, const std::vector<PowerRow>& rows,
                     const SystemParams& params);

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const NoiseBudget& budget);
nlohmann::json to_json(const SpectrumRow& row);
nlohmann::json to_json(const OptimumResult& result);

} // namespace cqnc

#endif
