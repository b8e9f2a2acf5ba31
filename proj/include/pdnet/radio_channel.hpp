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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pdnet/point_fields.hpp"
#include "pdnet/rng.hpp"

namespace pdnet {

enum class LinkState { Terrestrial, AerialLoS, AerialNLoS };

std::string_view to_string(LinkState state);

/// Propagation constants for one link state.
struct LinkParams {
    double alpha = 3.0;       ///< path-loss exponent
    double nakagami_m = 1.0;  ///< fading shape
    double eta = 0.692;       ///< linear mean additional loss, in (0, 1]
};

/**
 * Radio constants of one platform type. Terrestrial platforms (altitude 0)
 * only use `terrestrial`; aerial ones use `los` / `nlos`.
 */
struct PlatformProfile {
    std::string name;
    double transmit_power_w = 0.0;
    double altitude_km = 0.0;
    LinkParams terrestrial;
    LinkParams los;
    LinkParams nlos;

    [[nodiscard]] bool is_aerial() const noexcept { return altitude_km > 0.0; }
    [[nodiscard]] const LinkParams& params(LinkState state) const;
};

/// Throws ParameterError naming the offending field.
void validate(const PlatformProfile& profile);

/// Named platform profiles, loadable from a versioned key-value text file:
///
///     format = pdnet-platforms
///     version = 1
///     drone.transmit_power_w = 1.585
///     drone.altitude_km = 0.1
///     drone.los.alpha = 2
///     ...
class PlatformTable {
public:
    static constexpr int kFormatVersion = 1;

    /// The four reference platforms: tbs, drone, tethered_balloon, hap.
    static PlatformTable defaults();
    static PlatformTable parse(std::string_view text);
    static PlatformTable load(const std::filesystem::path& path);

    void add(PlatformProfile profile);
    [[nodiscard]] bool contains(std::string_view name) const;
    /// Throws ConfigError for unknown names.
    [[nodiscard]] const PlatformProfile& at(std::string_view name) const;
    [[nodiscard]] std::vector<std::string> names() const;
    [[nodiscard]] std::string serialize() const;

    /// Name of the terrestrial base-station profile.
    static constexpr std::string_view kTerrestrial = "tbs";

private:
    std::map<std::string, PlatformProfile, std::less<>> profiles_;
};

/// Air-to-ground LoS probability as a function of elevation angle.
struct LosModel {
    enum class Kind { Sigmoid, Constant };

    Kind kind = Kind::Sigmoid;
    double a = 12.08;
    double b = 0.11;
    double constant_probability = 1.0;

    static LosModel sigmoid(double a, double b) { return {Kind::Sigmoid, a, b, 1.0}; }
    static LosModel constant(double p) { return {Kind::Constant, 12.08, 0.11, p}; }
};

void validate(const LosModel& model);

/// 1 / (1 + a exp(-b (theta - a))), theta in degrees.
double los_probability(double elevation_deg, const LosModel& model);

/// Elevation of an aerial point seen from a ground user, in degrees.
double elevation_deg(const GroundPoint& user, const AerialPoint& platform);

LinkState draw_link_state(const GroundPoint& user, const AerialPoint& platform,
                          const LosModel& model, RandomStream& rng);

/**
 * p_t * eta * (distance / unit)^(-alpha).
 *
 * `unit_km` is the reference distance of the power law expressed in km:
 * 1.0 evaluates distances in km, 0.001 in metres.
 */
double mean_received_power(const PlatformProfile& profile, LinkState state, double distance_km,
                           double unit_km = 1.0);

/// Unit-mean Gamma(m, 1/m) power gain.
double draw_fading(double nakagami_m, RandomStream& rng);

}  // namespace pdnet
