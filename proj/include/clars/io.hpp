#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "clars/experiments.hpp"

namespace clars {

inline constexpr const char* kToolName = "clars";
inline constexpr const char* kToolVersion = "0.1.0";

// Shortest decimal representation that round-trips the exact double.
std::string format_double(double v);

struct RunConfig {
    Scenario scenario;
    std::uint64_t seed = 1;
    int trials = 1000;
};

// Accepted keys: n_sensors, grid_spacing_deg, doas_deg, powers, snr_db,
// gamma, seed, trials. Unknown keys are an error.
RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
nlohmann::json config_to_json(const RunConfig& config);

nlohmann::json selection_to_json(const Selection& sel);
nlohmann::json path_to_json(const LassoPath& path);
nlohmann::json report_to_json(const McReport& report, bool include_records);

// Flat CSV, one row per (axis value, method, gamma). `meta` lines are
// prefixed with '#' so a run can be re-created from its own output.
std::string reports_to_csv(const std::vector<McReport>& reports,
                           const nlohmann::json& meta);

// Per-knot rows: k, lambda, active set, |beta_j| for every column.
std::string path_to_csv(const LassoPath& path, const AngularGrid& grid,
                        const nlohmann::json& meta);

// Score-trace rows plus the selected estimate's magnitudes per grid angle.
std::string selection_to_csv(const Selection& sel, const AngularGrid& grid,
                             const nlohmann::json& meta);

}  // namespace clars
