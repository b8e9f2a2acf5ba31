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

#include "pdnet/point_fields.hpp"

#include <numbers>
#include <random>
#include <string>

#include "pdnet/errors.hpp"

namespace pdnet {
namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

GroundPoint uniform_on_disk(const GroundPoint& center, double radius, RandomStream& rng)
{
    const double r = radius * std::sqrt(rng.uniform());
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    return {center.x + r * std::cos(theta), center.y + r * std::sin(theta)};
}

}  // namespace

void validate(const HomogeneousTown& town)
{
    if (!positive_finite(town.density_per_km2))
        throw ParameterError("town density must be positive, got "
                             + std::to_string(town.density_per_km2));
    if (!positive_finite(town.window_radius_km))
        throw ParameterError("town window radius must be positive, got "
                             + std::to_string(town.window_radius_km));
}

void validate(const GaussianTown& town)
{
    if (!positive_finite(town.variance_km2))
        throw ParameterError("town variance must be positive");
    if (!positive_finite(town.mean_count_100km))
        throw ParameterError("town mean count must be positive");
    if (!(town.truncation_radius_km >= 10.0 * std::sqrt(town.variance_km2)))
        throw ParameterError("town truncation radius must be at least 10 standard deviations");
}

void validate(const DisasterSpec& disaster)
{
    if (!(std::isfinite(disaster.center_distance_km) && disaster.center_distance_km >= 0.0))
        throw ParameterError("disaster center distance must be non-negative");
    if (!positive_finite(disaster.radius_km))
        throw ParameterError("disaster radius must be positive");
}

std::vector<GroundPoint> sample_hppp(double density_per_km2, double window_radius_km,
                                     RandomStream& rng)
{
    validate(HomogeneousTown{density_per_km2, window_radius_km});
    const double mean = density_per_km2 * std::numbers::pi * window_radius_km * window_radius_km;
    std::poisson_distribution<long long> count_dist(mean);
    const long long n = count_dist(rng);

    std::vector<GroundPoint> points;
    points.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i)
        points.push_back(uniform_on_disk({0.0, 0.0}, window_radius_km, rng));
    return points;
}

double gaussian_total_mean(double variance_km2, double mean_count_100km)
{
    const double r = kCountNormalisationRadiusKm;
    return mean_count_100km / -std::expm1(-r * r / (2.0 * variance_km2));
}

std::vector<GroundPoint> sample_gaussian_ippp(double variance_km2, double mean_count_100km,
                                              double truncation_radius_km, RandomStream& rng)
{
    if (!positive_finite(variance_km2))
        throw ParameterError("gaussian variance must be positive");
    if (!positive_finite(mean_count_100km))
        throw ParameterError("gaussian mean count must be positive");
    if (!positive_finite(truncation_radius_km))
        throw ParameterError("gaussian truncation radius must be positive");

    std::poisson_distribution<long long> count_dist(
        gaussian_total_mean(variance_km2, mean_count_100km));
    const long long n = count_dist(rng);
    std::normal_distribution<double> axis(0.0, std::sqrt(variance_km2));
    const double limit2 = truncation_radius_km * truncation_radius_km;

    std::vector<GroundPoint> points;
    points.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        const double x = axis(rng);
        const double y = axis(rng);
        if (x * x + y * y <= limit2)
            points.push_back({x, y});
    }
    return points;
}

std::vector<GroundPoint> sample_town(const TownModel& town, const GroundPoint& user,
                                     RandomStream& rng)
{
    if (const auto* h = std::get_if<HomogeneousTown>(&town)) {
        auto points = sample_hppp(h->density_per_km2, h->window_radius_km, rng);
        for (auto& p : points) {
            p.x += user.x;
            p.y += user.y;
        }
        return points;
    }
    const auto& g = std::get<GaussianTown>(town);
    return sample_gaussian_ippp(g.variance_km2, g.mean_count_100km, g.truncation_radius_km, rng);
}

GroundPoint disaster_center(const TownModel& town, const DisasterSpec& disaster)
{
    // A homogeneous field is translation invariant: the hole sits on the origin.
    if (std::holds_alternative<HomogeneousTown>(town))
        return {0.0, 0.0};
    return {disaster.center_distance_km, 0.0};
}

std::vector<GroundPoint> apply_disaster(std::span<const GroundPoint> points,
                                        const GroundPoint& center, double radius_km)
{
    const double r2 = radius_km * radius_km;
    std::vector<GroundPoint> survivors;
    survivors.reserve(points.size());
    for (const auto& p : points) {
        const double dx = p.x - center.x;
        const double dy = p.y - center.y;
        if (dx * dx + dy * dy >= r2)
            survivors.push_back(p);
    }
    return survivors;
}

std::vector<AerialPoint> deploy_fleet(const GroundPoint& center, double radius_km, int n_a,
                                      double altitude_km, RandomStream& rng)
{
    if (n_a < 0)
        throw ParameterError("fleet size must be non-negative");
    if (n_a == 0)
        return {};
    if (!positive_finite(altitude_km))
        throw ParameterError("aerial platform altitude must be positive");
    if (!positive_finite(radius_km))
        throw ParameterError("deployment radius must be positive");

    std::vector<AerialPoint> fleet;
    fleet.reserve(static_cast<std::size_t>(n_a));
    for (int i = 0; i < n_a; ++i) {
        const auto g = uniform_on_disk(center, radius_km, rng);
        fleet.push_back({g.x, g.y, altitude_km});
    }
    return fleet;
}

}  // namespace pdnet
