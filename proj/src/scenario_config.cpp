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

#include "pdnet/scenario_config.hpp"

#include <cmath>

#include "pdnet/errors.hpp"

namespace pdnet {
namespace {

void require(bool ok, const char* field, const std::string& message)
{
    if (!ok)
        throw ConfigError(field, message);
}

}  // namespace

std::string_view to_string(CapacityMode mode)
{
    return mode == CapacityMode::Truncated ? "truncated" : "conditional";
}

CapacityMode parse_capacity_mode(std::string_view text)
{
    if (text == "truncated")
        return CapacityMode::Truncated;
    if (text == "conditional")
        return CapacityMode::Conditional;
    throw ConfigError("capacity_mode", "expected truncated|conditional, got '"
                                           + std::string(text) + "'");
}

std::string_view to_string(FleetResample resample)
{
    return resample == FleetResample::PerIteration ? "per-iteration" : "frozen";
}

FleetResample parse_fleet_resample(std::string_view text)
{
    if (text == "per-iteration")
        return FleetResample::PerIteration;
    if (text == "frozen")
        return FleetResample::Frozen;
    throw ConfigError("fleet_resample", "expected per-iteration|frozen, got '"
                                            + std::string(text) + "'");
}

void validate(const ScenarioConfig& config, const PlatformTable& platforms)
{
    if (const auto* h = std::get_if<HomogeneousTown>(&config.town)) {
        require(std::isfinite(h->density_per_km2) && h->density_per_km2 > 0.0,
                "town.density_per_km2", "must be positive");
        require(std::isfinite(h->window_radius_km) && h->window_radius_km > 0.0,
                "town.window_radius_km", "must be positive");
    } else {
        const auto& g = std::get<GaussianTown>(config.town);
        require(std::isfinite(g.variance_km2) && g.variance_km2 > 0.0, "town.variance_km2",
                "must be positive");
        require(std::isfinite(g.mean_count_100km) && g.mean_count_100km > 0.0,
                "town.mean_count_100km", "must be positive");
        require(g.truncation_radius_km >= 10.0 * std::sqrt(g.variance_km2),
                "town.truncation_radius_km", "must be at least 10 standard deviations");
    }

    require(std::isfinite(config.disaster.center_distance_km)
                && config.disaster.center_distance_km >= 0.0,
            "disaster.center_distance_km", "must be non-negative");
    require(std::isfinite(config.disaster.radius_km) && config.disaster.radius_km > 0.0,
            "disaster.radius_km", "must be positive");

    require(config.fleet.n_a >= 0, "fleet.n_a", "must be non-negative");
    require(platforms.contains(config.fleet.platform), "fleet.platform",
            "unknown platform '" + config.fleet.platform + "'");
    require(platforms.at(config.fleet.platform).is_aerial(), "fleet.platform",
            "platform '" + config.fleet.platform + "' is not airborne");
    require(platforms.contains(PlatformTable::kTerrestrial), "platforms",
            "table has no 'tbs' profile");

    const auto& g = config.globals;
    require(std::isfinite(g.bandwidth_hz) && g.bandwidth_hz > 0.0, "radio.bandwidth_hz",
            "must be positive");
    require(std::isfinite(g.sinr_threshold_db), "radio.sinr_threshold_db", "must be finite");
    require(std::isfinite(g.noise_psd_w_per_hz) && g.noise_psd_w_per_hz >= 0.0,
            "radio.noise_psd_w_per_hz", "must be non-negative");
    require(std::isfinite(g.path_loss_unit_km) && g.path_loss_unit_km > 0.0,
            "radio.path_loss_unit_km", "must be positive");
    require(g.min_terrestrial_distance_km > 0.0, "radio.min_terrestrial_distance_km",
            "must be positive");

    const auto& los = config.los;
    if (los.kind == LosModel::Kind::Constant) {
        require(los.constant_probability >= 0.0 && los.constant_probability <= 1.0,
                "los.probability", "must lie in [0, 1]");
    } else {
        require(std::isfinite(los.a) && los.a > 0.0, "los.a", "must be positive");
        require(std::isfinite(los.b) && los.b > 0.0, "los.b", "must be positive");
    }
}

}  // namespace pdnet
