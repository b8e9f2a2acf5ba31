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

#include "pdnet/advisor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pdnet/errors.hpp"
#include "pdnet/sweep.hpp"

namespace pdnet {
namespace {

double rank_key(const MetricEstimate& e)
{
    return std::isnan(e.ergodic_capacity_bps) ? -std::numeric_limits<double>::infinity()
                                              : e.ergodic_capacity_bps;
}

std::vector<CandidateResult> evaluate(const ScenarioConfig& scenario,
                                      const std::vector<FleetSpec>& candidates,
                                      const std::vector<std::size_t>& which,
                                      const PlatformTable& platforms, std::int64_t budget,
                                      const AdvisorOptions& options)
{
    std::vector<CandidateResult> out;
    out.reserve(which.size());
    for (const auto idx : which) {
        ScenarioConfig config = scenario;
        config.fleet = candidates[idx];
        EstimateOptions eo;
        eo.iterations = budget;
        eo.seed = options.seed;
        eo.workers = options.workers;
        eo.mode = config.capacity_mode;
        out.push_back({candidates[idx], estimate_or_nan(config, platforms, eo), budget, idx});
    }
    return out;
}

}  // namespace

AdvisorReport advise(const ScenarioConfig& scenario, const std::vector<FleetSpec>& candidates,
                     const PlatformTable& platforms, const AdvisorOptions& options)
{
    if (candidates.size() < 2)
        throw ParameterError("advisor needs at least two candidates");
    if (options.budgets.empty() || options.budgets.front() < 2)
        throw ParameterError("advisor budget too small for one round (need >= 2 iterations)");
    for (std::size_t i = 1; i < options.budgets.size(); ++i)
        if (options.budgets[i] < options.budgets[i - 1])
            throw ParameterError("advisor budgets must be non-decreasing");
    for (const auto& c : candidates) {
        ScenarioConfig probe = scenario;
        probe.fleet = c;
        validate(probe, platforms);
    }

    AdvisorReport report;
    std::vector<std::size_t> remaining(candidates.size());
    for (std::size_t i = 0; i < remaining.size(); ++i)
        remaining[i] = i;

    for (std::size_t round = 0; round + 1 < options.budgets.size() && remaining.size() > 2;
         ++round) {
        auto results = evaluate(scenario, candidates, remaining, platforms,
                                options.budgets[round], options);
        std::stable_sort(results.begin(), results.end(), [](const auto& a, const auto& b) {
            return rank_key(a.estimate) > rank_key(b.estimate);
        });
        const std::size_t keep = std::max<std::size_t>(2, (results.size() + 1) / 2);
        remaining.clear();
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (i < keep)
                remaining.push_back(results[i].grid_index);
            else
                report.eliminated.push_back(results[i]);
        }
        std::sort(remaining.begin(), remaining.end());
    }

    report.table = evaluate(scenario, candidates, remaining, platforms, options.budgets.back(),
                            options);

    std::size_t best = 0;
    for (std::size_t i = 1; i < report.table.size(); ++i)
        if (rank_key(report.table[i].estimate) > rank_key(report.table[best].estimate))
            best = i;
    std::size_t runner = best == 0 ? 1 : 0;
    for (std::size_t i = 0; i < report.table.size(); ++i)
        if (i != best
            && rank_key(report.table[i].estimate) > rank_key(report.table[runner].estimate))
            runner = i;

    const auto& b = report.table[best].estimate;
    const auto& r = report.table[runner].estimate;
    report.best = report.table[best].fleet;
    report.margin_bps = rank_key(b) - rank_key(r);
    if (std::isnan(report.margin_bps) || report.margin_bps < 0.0)
        report.margin_bps = 0.0;
    report.statistically_resolved = b.ci95_low > r.ci95_high;
    return report;
}

std::string advisor_csv(const AdvisorReport& report)
{
    std::string out =
        "platform,n_a,stage,budget,ergodic_capacity_bps,ci95_low,ci95_high,"
        "coverage_probability,iterations,seed\n";
    auto row = [&](const CandidateResult& c, const char* stage) {
        const auto& e = c.estimate;
        out += c.fleet.platform + ',' + std::to_string(c.fleet.n_a) + ',' + stage + ','
               + std::to_string(c.budget) + ',' + format_double(e.ergodic_capacity_bps) + ','
               + format_double(e.ci95_low) + ',' + format_double(e.ci95_high) + ','
               + format_double(e.coverage_probability) + ',' + std::to_string(e.iterations)
               + ',' + std::to_string(e.seed) + '\n';
    };
    for (const auto& c : report.table)
        row(c, "final");
    for (const auto& c : report.eliminated)
        row(c, "eliminated");
    return out;
}

std::string recommendation_line(const AdvisorReport& report)
{
    return "recommendation: " + report.best.platform + " n_a=" + std::to_string(report.best.n_a)
           + " (margin " + format_double(report.margin_bps) + " bit/s, "
           + (report.statistically_resolved ? "resolved" : "not resolved") + ")";
}

}  // namespace pdnet
