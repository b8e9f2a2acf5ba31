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

#include "pdnet/sinr.hpp"

#include <algorithm>

#include "pdnet/errors.hpp"

namespace pdnet {

void validate(const RadioGlobals& g)
{
    if (!(g.bandwidth_hz > 0.0 && std::isfinite(g.bandwidth_hz)))
        throw ParameterError("radio.bandwidth_hz must be positive");
    if (!std::isfinite(g.sinr_threshold_db))
        throw ParameterError("radio.sinr_threshold_db must be finite");
    if (!(g.noise_psd_w_per_hz >= 0.0 && std::isfinite(g.noise_psd_w_per_hz)))
        throw ParameterError("radio.noise_psd_w_per_hz must be non-negative");
    if (!(g.path_loss_unit_km > 0.0 && std::isfinite(g.path_loss_unit_km)))
        throw ParameterError("radio.path_loss_unit_km must be positive");
    if (!(g.min_terrestrial_distance_km > 0.0))
        throw ParameterError("radio.min_terrestrial_distance_km must be positive");
}

std::vector<Link> build_links(const GroundPoint& user, const TopologyRealization& topology,
                              const PlatformProfile& terrestrial, const PlatformProfile* aerial,
                              const RadioGlobals& globals)
{
    std::vector<Link> links;
    links.reserve(topology.tbs.size() + topology.fleet.size());

    const double m_ground = terrestrial.params(LinkState::Terrestrial).nakagami_m;
    for (const auto& bs : topology.tbs) {
        const double d = std::max(bs.distance_to(user), globals.min_terrestrial_distance_km);
        links.push_back({BsKind::Terrestrial, LinkState::Terrestrial,
                         mean_received_power(terrestrial, LinkState::Terrestrial, d,
                                             globals.path_loss_unit_km),
                         m_ground});
    }
    if (!topology.fleet.empty() && aerial == nullptr)
        throw ParameterError("aerial nodes present without an aerial profile");
    for (const auto& node : topology.fleet) {
        const double d = node.position.distance_to(user);
        links.push_back({BsKind::Aerial, node.state,
                         mean_received_power(*aerial, node.state, d, globals.path_loss_unit_km),
                         aerial->params(node.state).nakagami_m});
    }
    return links;
}

Association associate(std::span<const Link> links)
{
    if (links.empty())
        throw NoCoverageError();
    std::size_t best = 0;
    for (std::size_t i = 1; i < links.size(); ++i)
        if (links[i].mean_power_w > links[best].mean_power_w)
            best = i;
    return {best, links[best].kind, links[best].mean_power_w};
}

Association associate(const GroundPoint& user, const TopologyRealization& topology,
                      const PlatformProfile& terrestrial, const PlatformProfile* aerial,
                      const RadioGlobals& globals)
{
    const auto links = build_links(user, topology, terrestrial, aerial, globals);
    return associate(links);
}

double instantaneous_sinr(const Association& assoc, std::span<const Link> links,
                          std::span<const double> gains, const RadioGlobals& globals)
{
    double interference = 0.0;
    for (std::size_t i = 0; i < links.size(); ++i)
        if (i != assoc.serving_index)
            interference += links[i].mean_power_w * gains[i];
    const double signal = links[assoc.serving_index].mean_power_w * gains[assoc.serving_index];
    return signal / (interference + globals.noise_power_w());
}

double shannon_rate(double bandwidth_hz, double sinr)
{
    if (!(sinr >= 0.0))
        throw ParameterError("SINR must be non-negative");
    return bandwidth_hz * std::log2(1.0 + sinr);
}

IterationOutcome evaluate_links(std::span<const Link> links, std::span<const double> gains,
                                const RadioGlobals& globals)
{
    if (links.empty())
        return {};
    const auto assoc = associate(links);
    const double sinr = instantaneous_sinr(assoc, links, gains, globals);
    return {shannon_rate(globals.bandwidth_hz, sinr), sinr >= globals.sinr_threshold_linear()};
}

}  // namespace pdnet
