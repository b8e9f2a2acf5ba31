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
#include <string>
#include <vector>

#include "pdnet/estimator.hpp"
#include "pdnet/scenario_config.hpp"

namespace pdnet {

struct AdvisorOptions {
    /// Successive-halving budgets; the last one is the full budget.
    std::vector<std::int64_t> budgets{1'000, 4'000, 16'000};
    std::uint64_t seed = 1;
    int workers = 0;
};

struct CandidateResult {
    FleetSpec fleet;
    MetricEstimate estimate;
    std::int64_t budget = 0;
    std::size_t grid_index = 0;
};

struct AdvisorReport {
    FleetSpec best;
    /// Survivors re-evaluated at the full budget, in grid order.
    std::vector<CandidateResult> table;
    /// Candidates dropped by halving, with the estimate that dropped them.
    std::vector<CandidateResult> eliminated;
    double margin_bps = 0.0;  ///< best minus runner-up in `table`
    bool statistically_resolved = false;
};

/**
 * Picks the fleet with the highest ergodic capacity for `scenario` (its own
 * fleet field is ignored). All candidates share common random numbers.
 *
 * Each round evaluates the remaining candidates at the next budget and keeps
 * the better half, never fewer than two; the survivors are then
 * re-evaluated at the full budget and the best is the argmax of that table
 * (grid order breaks ties). Throws ParameterError with fewer than two
 * candidates or a first budget below two iterations.
 */
AdvisorReport advise(const ScenarioConfig& scenario, const std::vector<FleetSpec>& candidates,
                     const PlatformTable& platforms, const AdvisorOptions& options);

std::string advisor_csv(const AdvisorReport& report);
std::string recommendation_line(const AdvisorReport& report);

}  // namespace pdnet
