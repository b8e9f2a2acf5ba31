/*
   Copyright 2026 The pdnet Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "pdnet/advisor.hpp"
#include "pdnet/scenario_config.hpp"
#include "pdnet/sweep.hpp"

namespace pdnet {

/// Everything a CLI run needs: scenario, platform table, sweep axis, fleet
/// grid, Monte Carlo budget and advisor budgets.
struct RunConfig {
    ScenarioConfig scenario;
    PlatformTable platforms = PlatformTable::defaults();

    double sweep_min_km = 0.1;
    double sweep_max_km = 5.0;
    int sweep_points = 50;
    Spacing spacing = Spacing::Linear;
    std::optional<std::vector<double>> sweep_values;  ///< overrides min/max/points

    std::vector<FleetSpec> fleets;
    std::int64_t iterations = 10'000;
    std::uint64_t seed = 1;
    int workers = 0;
    std::vector<std::int64_t> advisor_budgets{1'000, 4'000, 16'000};

    [[nodiscard]] std::vector<double> values() const;
    [[nodiscard]] SweepPlan plan(SweepVariable variable) const;
    [[nodiscard]] AdvisorOptions advisor_options() const;
};

/// Homogeneous town, rho_d in [0.1, 5] km, drones {0, 1, 5, 15, 30}.
RunConfig default_radius_config();
/// Gaussian town, rho_d = 0.5 km, r_c in [0, 30] km, drones {0, 1, 5, 15}.
RunConfig default_distance_config();
/// Gaussian town at r_c = 25 km, rho_d = 0.5 km, drones {1, 5, 15}.
RunConfig default_advise_config();

/// Overlays a JSON document on `base`. Unknown keys and invalid values throw
/// ConfigError naming the field. A relative "platforms_file" resolves
/// against `base_dir`.
RunConfig apply_json(RunConfig base, std::string_view json_text,
                     const std::filesystem::path& base_dir = {});
RunConfig load_run_config(RunConfig base, const std::filesystem::path& path);

/// "drone:0,1,5" -> {drone 0, drone 1, drone 5}.
std::vector<FleetSpec> parse_fleet_flag(std::string_view text);

/// Checks the scenario against every fleet in the grid and the sweep plan.
void validate(const RunConfig& config, SweepVariable variable);

/// The fleet grids used when a config does not name one.
std::vector<FleetSpec> default_fleet_grid(std::string_view platform);

}  // namespace pdnet
