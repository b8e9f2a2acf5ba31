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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pdnet/rng.hpp"
#include "pdnet/scenario_config.hpp"
#include "pdnet/sinr.hpp"

namespace pdnet {

enum class FadingModel {
    Nakagami,  ///< Gamma(m, 1/m) per link per iteration
    Unit       ///< every gain is 1; deterministic harness
};

struct MetricEstimate {
    double ergodic_capacity_bps = 0.0;
    double coverage_probability = 0.0;
    double std_error_bps = 0.0;
    double sample_stddev_bps = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;
    std::int64_t iterations = 0;
    std::int64_t covered_iterations = 0;
    std::uint64_t seed = 0;
    CapacityMode mode = CapacityMode::Truncated;
};

struct EstimateOptions {
    std::int64_t iterations = 10'000;
    std::uint64_t seed = 1;
    /// Extra key mixed into the root stream (sweep point index). Scenarios
    /// sharing seed and key see common random numbers.
    std::uint64_t stream_key = 0;
    CapacityMode mode = CapacityMode::Truncated;
    int workers = 0;  ///< 0: OpenMP default
    FadingModel fading = FadingModel::Nakagami;
};

/**
 * Everything one Monte Carlo iteration needs. `sample` draws a topology
 * from the per-record root stream and the per-iteration stream.
 */
struct EstimatorModel {
    GroundPoint user;
    PlatformProfile terrestrial;
    std::optional<PlatformProfile> aerial;
    RadioGlobals globals;
    std::function<TopologyRealization(const RandomStream& root, const RandomStream& iteration)>
        sample;
};

/// Model for a validated scenario: user at the disaster centre.
EstimatorModel make_model(const ScenarioConfig& config, const PlatformTable& platforms);

/// Model that returns the same topology every iteration.
EstimatorModel make_fixed_model(const GroundPoint& user, TopologyRealization topology,
                                const PlatformProfile& terrestrial,
                                std::optional<PlatformProfile> aerial,
                                const RadioGlobals& globals);

RandomStream root_stream(const EstimateOptions& options);

IterationOutcome run_iteration(const EstimatorModel& model, const RandomStream& root,
                               std::int64_t index, FadingModel fading);

/// OpenMP kernel: outcomes[i] for i in [0, iterations).
std::vector<IterationOutcome> simulate(const EstimatorModel& model,
                                       const EstimateOptions& options);

/// Single-threaded reference of simulate().
std::vector<IterationOutcome> simulate_serial(const EstimatorModel& model,
                                              const EstimateOptions& options);

/// Order-fixed reduction of per-iteration outcomes. Throws UndefinedEstimate
/// in conditional mode when nothing was covered.
MetricEstimate summarize(std::span<const IterationOutcome> outcomes, CapacityMode mode,
                         std::uint64_t seed);

MetricEstimate estimate_metrics(const EstimatorModel& model, const EstimateOptions& options);
MetricEstimate estimate_metrics_serial(const EstimatorModel& model,
                                       const EstimateOptions& options);

/// Validates `config`, then estimates with options.mode taken from it.
MetricEstimate estimate_metrics(const ScenarioConfig& config, const PlatformTable& platforms,
                                EstimateOptions options);

/// Pairwise sum, fixed association order.
double pairwise_sum(std::span<const double> values);

}  // namespace pdnet
