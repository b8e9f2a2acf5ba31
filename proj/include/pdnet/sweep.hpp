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
#include <string>
#include <string_view>
#include <vector>

#include "pdnet/estimator.hpp"
#include "pdnet/scenario_config.hpp"

namespace pdnet {

enum class SweepVariable { DisasterRadius, CenterDistance };
enum class Spacing { Linear, Log };

/// CSV names: "rho_d" and "r_c".
std::string_view to_string(SweepVariable variable);
SweepVariable parse_sweep_variable(std::string_view text);
Spacing parse_spacing(std::string_view text);

/// `points` values from lo to hi inclusive.
std::vector<double> sweep_values(double lo, double hi, int points, Spacing spacing);

struct SweepPlan {
    SweepVariable variable = SweepVariable::DisasterRadius;
    std::vector<double> values;
    std::vector<FleetSpec> fleets;
    std::int64_t iterations = 10'000;
    std::uint64_t seed = 1;
    int workers = 0;
};

/// Throws ConfigError: values must be strictly increasing, >= 1 fleet.
void validate(const SweepPlan& plan);

struct SweepRecord {
    SweepVariable variable = SweepVariable::DisasterRadius;
    double value_km = 0.0;
    FleetSpec fleet;
    MetricEstimate estimate;
};

struct SweepResult {
    std::vector<SweepRecord> records;  ///< ordered by (fleet, sweep value)
};

/**
 * Homogeneous-town sweep over the disaster radius. Every fleet at sweep
 * index i uses root stream (seed, i), so fleets are compared on common
 * random numbers and the numbers do not depend on the fleet-grid order.
 */
SweepResult run_radius_sweep(const SweepPlan& plan, const ScenarioConfig& base,
                             const PlatformTable& platforms);

/// Gaussian-town sweep over the disaster-to-town-centre distance.
SweepResult run_distance_sweep(const SweepPlan& plan, const ScenarioConfig& base,
                               const PlatformTable& platforms);

/// Estimate that degrades an undefined conditional estimate to NaN capacity
/// instead of throwing; used where a sweep must not abort.
MetricEstimate estimate_or_nan(const ScenarioConfig& config, const PlatformTable& platforms,
                               const EstimateOptions& options);

inline constexpr std::string_view kCsvHeader =
    "sweep_variable,sweep_value_km,platform,n_a,capacity_mode,ergodic_capacity_bps,"
    "ci95_low,ci95_high,coverage_probability,iterations,seed";

std::string to_csv(const SweepResult& result);
/// Throws std::runtime_error naming the path and cause.
void emit_csv(const SweepResult& result, const std::filesystem::path& path);
/// Inverse of to_csv for the columns the CSV carries.
SweepResult parse_csv(std::string_view text);

/// Shortest round-trip decimal.
std::string format_double(double value);

}  // namespace pdnet
