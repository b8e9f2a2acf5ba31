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

#include <cmath>
#include <span>
#include <variant>
#include <vector>

#include "pdnet/rng.hpp"

namespace pdnet {

// All lengths in this module are kilometres.

struct GroundPoint {
    double x = 0.0;
    double y = 0.0;

    [[nodiscard]] double distance_to(const GroundPoint& o) const noexcept
    {
        return std::hypot(x - o.x, y - o.y);
    }
};

struct AerialPoint {
    double x = 0.0;
    double y = 0.0;
    double h = 0.0;  ///< altitude

    [[nodiscard]] GroundPoint ground() const noexcept { return {x, y}; }

    [[nodiscard]] double horizontal_distance_to(const GroundPoint& o) const noexcept
    {
        return std::hypot(x - o.x, y - o.y);
    }

    /// 3-D distance to a ground-level point.
    [[nodiscard]] double distance_to(const GroundPoint& o) const noexcept
    {
        return std::hypot(horizontal_distance_to(o), h);
    }
};

/// Homogeneous PPP on a disk centred on the typical user.
struct HomogeneousTown {
    double density_per_km2 = 10.0;
    double window_radius_km = 10.0;
};

/// Inhomogeneous PPP whose intensity is an isotropic Gaussian around the
/// town centre (origin).
struct GaussianTown {
    double variance_km2 = 10.0;
    double mean_count_100km = 1254.0;
    double truncation_radius_km = 100.0;
};

using TownModel = std::variant<HomogeneousTown, GaussianTown>;

/// Circular failure region. For a Gaussian town the centre sits at
/// (center_distance_km, 0); a homogeneous town ignores center_distance_km.
struct DisasterSpec {
    double center_distance_km = 0.0;
    double radius_km = 0.5;
};

/// Radius used to normalise the Gaussian town's mean count.
inline constexpr double kCountNormalisationRadiusKm = 100.0;

/// Throws ParameterError on invalid fields.
void validate(const HomogeneousTown& town);
void validate(const GaussianTown& town);
void validate(const DisasterSpec& disaster);

std::vector<GroundPoint> sample_hppp(double density_per_km2, double window_radius_km,
                                     RandomStream& rng);

/// Poisson mean of the untruncated Gaussian field such that the expected
/// count within 100 km equals mean_count_100km.
double gaussian_total_mean(double variance_km2, double mean_count_100km);

std::vector<GroundPoint> sample_gaussian_ippp(double variance_km2, double mean_count_100km,
                                              double truncation_radius_km, RandomStream& rng);

/// Draws a town realisation. `user` is where a homogeneous window is centred.
std::vector<GroundPoint> sample_town(const TownModel& town, const GroundPoint& user,
                                     RandomStream& rng);

/// Centre of the failure region in town coordinates.
GroundPoint disaster_center(const TownModel& town, const DisasterSpec& disaster);

/// Keeps the points strictly farther than radius_km from the disaster centre
/// (a point exactly on the rim survives). Order is preserved.
std::vector<GroundPoint> apply_disaster(std::span<const GroundPoint> points,
                                        const GroundPoint& center, double radius_km);

/// n_a platforms uniform on the failure disk at a common altitude.
std::vector<AerialPoint> deploy_fleet(const GroundPoint& center, double radius_km, int n_a,
                                      double altitude_km, RandomStream& rng);

}  // namespace pdnet
