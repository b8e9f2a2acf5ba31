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

#include <cmath>
#include <vector>

#include "pdnet/errors.hpp"
#include "pdnet/sinr.hpp"

namespace pdnet {
namespace {

RadioGlobals metre_globals()
{
    RadioGlobals g;
    g.path_loss_unit_km = 0.001;
    return g;
}

TEST(Associate, DroneOverheadBeatsTbsAt500m)
{
    const auto table = PlatformTable::defaults();
    const auto g = metre_globals();
    TopologyRealization topo;
    topo.tbs = {{0.5, 0.0}};
    topo.fleet = {{{0.0, 0.0, 0.1}, LinkState::AerialLoS}};
    const auto links = build_links({0, 0}, topo, table.at("tbs"), &table.at("drone"), g);
    ASSERT_EQ(links.size(), 2u);
    EXPECT_NEAR(links[0].mean_power_w, 5.536e-8, 1e-20);
    EXPECT_NEAR(links[1].mean_power_w, 1.09682e-4, 1e-16);

    const auto a = associate(links);
    EXPECT_EQ(a.serving_index, 1u);
    EXPECT_EQ(a.serving_kind, BsKind::Aerial);
    EXPECT_EQ(a.serving_mean_power_w, links[1].mean_power_w);
}

TEST(Associate, SingleCandidate)
{
    const std::vector<Link> links{{BsKind::Terrestrial, LinkState::Terrestrial, 3e-9, 1.0}};
    EXPECT_EQ(associate(links).serving_index, 0u);
}

TEST(Associate, TieGoesToLowestIndex)
{
    const auto table = PlatformTable::defaults();
    TopologyRealization topo;
    topo.tbs = {{0.3, 0.4}, {-0.4, 0.3}};  // both 0.5 km away
    const auto a = associate({0, 0}, topo, table.at("tbs"), nullptr, RadioGlobals{});
    EXPECT_EQ(a.serving_index, 0u);
}

TEST(Associate, EmptyCandidateSet)
{
    EXPECT_THROW(associate(std::vector<Link>{}), NoCoverageError);
    const auto out = evaluate_links({}, {}, RadioGlobals{});
    EXPECT_EQ(out.rate_bps, 0.0);
    EXPECT_FALSE(out.covered);
}

TEST(Associate, ServingPowerIsTheMaximum)
{
    RandomStream rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Link> links(1 + trial % 7);
        for (auto& l : links)
            l.mean_power_w = rng.uniform();
        const auto a = associate(links);
        for (const auto& l : links)
            ASSERT_LE(l.mean_power_w, a.serving_mean_power_w);
    }
}

TEST(Sinr, InterferenceFree)
{
    const std::vector<Link> links{{BsKind::Aerial, LinkState::AerialLoS, 3e-4, 2.0}};
    const std::vector<double> gains{1.0};
    EXPECT_NEAR(instantaneous_sinr(associate(links), links, gains, RadioGlobals{}), 3.0, 1e-12);
}

TEST(Sinr, OneInterfererEqualToNoise)
{
    const std::vector<Link> links{{BsKind::Terrestrial, LinkState::Terrestrial, 2e-4, 1.0},
                                  {BsKind::Terrestrial, LinkState::Terrestrial, 1e-4, 1.0}};
    const std::vector<double> gains{1.0, 1.0};
    EXPECT_NEAR(instantaneous_sinr(associate(links), links, gains, RadioGlobals{}), 1.0, 1e-12);
}

TEST(Sinr, DoublingPowersHelpsWhenNoiseMatters)
{
    const RadioGlobals g;
    std::vector<Link> links{{BsKind::Terrestrial, LinkState::Terrestrial, 1e-4, 1.0},
                            {BsKind::Terrestrial, LinkState::Terrestrial, 2e-5, 1.0}};
    const std::vector<double> gains{1.0, 1.0};
    const double before = instantaneous_sinr(associate(links), links, gains, g);
    for (auto& l : links)
        l.mean_power_w *= 2.0;
    const double after = instantaneous_sinr(associate(links), links, gains, g);
    // 1e-4/(2e-5+1e-4) = 0.8333..., 2e-4/(4e-5+1e-4) = 1.428...
    EXPECT_NEAR(before, 1e-4 / 1.2e-4, 1e-12);
    EXPECT_NEAR(after, 2e-4 / 1.4e-4, 1e-12);
    EXPECT_GT(after, before);
}

TEST(Sinr, ScaleInvariantWithNoise)
{
    RandomStream rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Link> links(2 + trial % 4);
        std::vector<double> gains(links.size());
        for (std::size_t i = 0; i < links.size(); ++i) {
            links[i].mean_power_w = 1e-4 * rng.uniform();
            gains[i] = 0.1 + rng.uniform();
        }
        RadioGlobals g;
        const auto a = associate(links);
        const double base = instantaneous_sinr(a, links, gains, g);
        for (auto& l : links)
            l.mean_power_w *= 1e3;
        g.noise_psd_w_per_hz *= 1e3;
        EXPECT_NEAR(instantaneous_sinr(a, links, gains, g), base, 1e-12 * base);
    }
}

TEST(ShannonRate, ReferencePoints)
{
    EXPECT_EQ(shannon_rate(1e8, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(shannon_rate(1e8, 1.0), 1e8);
    EXPECT_DOUBLE_EQ(shannon_rate(1e8, 3.0), 2e8);
    EXPECT_THROW(shannon_rate(1e8, -0.5), ParameterError);
}

TEST(Links, TerrestrialDistanceClamp)
{
    const auto table = PlatformTable::defaults();
    TopologyRealization topo;
    topo.tbs = {{0.0, 0.0}};
    const auto g = metre_globals();
    const auto links = build_links({0, 0}, topo, table.at("tbs"), nullptr, g);
    EXPECT_DOUBLE_EQ(links[0].mean_power_w, 10.0 * 0.692);
}

}  // namespace
}  // namespace pdnet
