#ifndef CQNC_REPRODUCE_HPP
#define CQNC_REPRODUCE_HPP

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace cqnc {

/// A reproduced number compared against its reference.
struct AnchorCheck {
    std::string name;
    double value = 0.0;
    double expected = 0.0;
    std::string criterion;  ///< human-readable comparison, e.g. "rel <= 0.005"
    bool pass = false;
};

struct DataFile {
    std::string name;  ///< suggested file name, e.g. "fig2.csv"
    std::string csv;
};

struct Reproduction {
    std::string figure;
    std::vector<DataFile> files;
    std::vector<AnchorCheck> checks;
    nlohmann::json summary;

    bool all_pass() const;
};

/// figure in {fig2, fig3a, fig3b, appendix}; throws InvalidArgument otherwise.
Reproduction reproduce(std::string_view figure);

const std::vector<std::string>& reproducible_figures();

} // namespace cqnc

#endif
