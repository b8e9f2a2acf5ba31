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

#include <gtest/gtest.h>

#include "pdnet/advisor.hpp"
#include "pdnet/errors.hpp"

namespace pdnet {
namespace {

// A town with essentially no base stations and guaranteed LoS.
ScenarioConfig empty_town()
{
    ScenarioConfig c;
    c.town = HomogeneousTown{1e-9, 10.0};
    c.los = LosModel::constant(1.0);
    return c;
}

AdvisorOptions small_budgets()
{
    AdvisorOptions o;
    o.budgets = {50, 200};
    return o;
}

TEST(Advisor, IdenticalCandidatesTieToGridOrder)
{
    const auto report = advise(empty_town(), {{"drone", 1}, {"drone", 1}},
                               PlatformTable::defaults(), small_budgets());
    ASSERT_EQ(report.table.size(), 2u);
    EXPECT_EQ(report.table[0].grid_index, 0u);
    EXPECT_EQ(report.margin_bps, 0.0);
    EXPECT_FALSE(report.statistically_resolved);
    EXPECT_EQ(report.best, (FleetSpec{"drone", 1}));
}

TEST(Advisor, AnyDroneBeatsNoNetwork)
{
    const auto report = advise(empty_town(), {{"drone", 0}, {"drone", 1}},
                               PlatformTable::defaults(), small_budgets());
    EXPECT_EQ(report.best, (FleetSpec{"drone", 1}));
    EXPECT_TRUE(report.statistically_resolved);
    for (const auto& row : report.table) {
        if (row.fleet.n_a == 0)
            EXPECT_EQ(row.estimate.coverage_probability, 0.0);
        else
            EXPECT_EQ(row.estimate.coverage_probability, 1.0);
    }
    EXPECT_GT(report.margin_bps, 0.0);
}

TEST(Advisor, DominatedPlatformNeverWins)
{
    auto table = PlatformTable::defaults();
    PlatformProfile strong = table.at("drone");
    strong.name = "strong_drone";
    strong.transmit_power_w = 15.85;
    table.add(strong);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto o = small_budgets();
        o.seed = seed;
        const auto report =
            advise(empty_town(), {{"drone", 1}, {"strong_drone", 1}}, table, o);
        EXPECT_EQ(report.best.platform, "strong_drone") << seed;
    }
}

TEST(Advisor, HalvingKeepsAtLeastTwo)
{
    AdvisorOptions o;
    o.budgets = {20, 40, 80};
    const auto report =
        advise(empty_town(), {{"drone", 0}, {"drone", 1}, {"drone", 2}, {"drone", 3}, {"drone", 4}},
               PlatformTable::defaults(), o);
    EXPECT_GE(report.table.size(), 2u);
    EXPECT_EQ(report.table.size() + report.eliminated.size(), 5u);
    for (const auto& row : report.table)
        EXPECT_EQ(row.budget, 80);
    for (const auto& row : report.eliminated)
        EXPECT_NE(row.fleet.n_a, report.best.n_a);
}

TEST(Advisor, Deterministic)
{
    const std::vector<FleetSpec> grid{{"drone", 1}, {"drone", 3}, {"drone", 6}};
    ScenarioConfig c;
    c.town = HomogeneousTown{10.0, 3.0};
    const auto a = advise(c, grid, PlatformTable::defaults(), small_budgets());
    const auto b = advise(c, grid, PlatformTable::defaults(), small_budgets());
    EXPECT_EQ(advisor_csv(a), advisor_csv(b));
    EXPECT_EQ(recommendation_line(a), recommendation_line(b));
}

TEST(Advisor, RejectsDegenerateInput)
{
    const auto& t = PlatformTable::defaults();
    EXPECT_THROW(advise(empty_town(), {{"drone", 1}}, t, small_budgets()), ParameterError);
    AdvisorOptions bad;
    bad.budgets = {1, 10};
    EXPECT_THROW(advise(empty_town(), {{"drone", 1}, {"drone", 2}}, t, bad), ParameterError);
    bad.budgets = {100, 10};
    EXPECT_THROW(advise(empty_town(), {{"drone", 1}, {"drone", 2}}, t, bad), ParameterError);
}

TEST(Advisor, CsvAndRecommendation)
{
    const auto report = advise(empty_town(), {{"drone", 0}, {"drone", 1}},
                               PlatformTable::defaults(), small_budgets());
    const auto csv = advisor_csv(report);
    EXPECT_EQ(csv.rfind("platform,n_a,stage,budget,", 0), 0u);
    EXPECT_NE(csv.find("drone,1,final,200,"), std::string::npos);
    EXPECT_EQ(recommendation_line(report).rfind("recommendation: drone n_a=1", 0), 0u);
}

}  // namespace
}  // namespace pdnet
