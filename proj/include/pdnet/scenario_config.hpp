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

#include <string>
#include <string_view>

#include "pdnet/point_fields.hpp"
#include "pdnet/radio_channel.hpp"
#include "pdnet/sinr.hpp"

namespace pdnet {

enum class CapacityMode {
    Truncated,   ///< outage iterations count as zero rate
    Conditional  ///< mean rate over covered iterations only
};

enum class FleetResample { PerIteration, Frozen };

std::string_view to_string(CapacityMode mode);
CapacityMode parse_capacity_mode(std::string_view text);
std::string_view to_string(FleetResample resample);
FleetResample parse_fleet_resample(std::string_view text);

struct FleetSpec {
    std::string platform = "drone";
    int n_a = 0;

    friend bool operator==(const FleetSpec&, const FleetSpec&) = default;
};

struct ScenarioConfig {
    TownModel town = HomogeneousTown{};
    DisasterSpec disaster;
    FleetSpec fleet;
    RadioGlobals globals;
    LosModel los;
    CapacityMode capacity_mode = CapacityMode::Truncated;
    FleetResample fleet_resample = FleetResample::PerIteration;
};

/// Throws ConfigError naming the first offending field.
void validate(const ScenarioConfig& config, const PlatformTable& platforms);

}  // namespace pdnet
