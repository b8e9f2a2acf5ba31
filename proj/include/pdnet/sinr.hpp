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
#include <cstddef>
#include <span>
#include <vector>

#include "pdnet/point_fields.hpp"
#include "pdnet/radio_channel.hpp"

namespace pdnet {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

struct RadioGlobals {
    double bandwidth_hz = 100e6;
    double sinr_threshold_db = -5.0;
    double noise_psd_w_per_hz = 1e-12;
    /// Reference distance of the power law, in km.
    double path_loss_unit_km = 1.0;
    /// Terrestrial links closer than this are evaluated at this distance.
    double min_terrestrial_distance_km = 0.001;

    [[nodiscard]] double noise_power_w() const noexcept
    {
        return noise_psd_w_per_hz * bandwidth_hz;
    }
    [[nodiscard]] double sinr_threshold_linear() const
    {
        return db_to_linear(sinr_threshold_db);
    }
};

void validate(const RadioGlobals& globals);

enum class BsKind { Terrestrial, Aerial };

struct AerialNode {
    AerialPoint position;
    LinkState state = LinkState::AerialLoS;
};

/// One sampled world as seen by the typical user.
struct TopologyRealization {
    std::vector<GroundPoint> tbs;  ///< surviving terrestrial stations
    std::vector<AerialNode> fleet;
};

/// A candidate downlink: mean received power and fading shape.
struct Link {
    BsKind kind = BsKind::Terrestrial;
    LinkState state = LinkState::Terrestrial;
    double mean_power_w = 0.0;
    double nakagami_m = 1.0;
};

/// Terrestrial links first, then the fleet, each in input order.
std::vector<Link> build_links(const GroundPoint& user, const TopologyRealization& topology,
                              const PlatformProfile& terrestrial, const PlatformProfile* aerial,
                              const RadioGlobals& globals);

struct Association {
    std::size_t serving_index = 0;
    BsKind serving_kind = BsKind::Terrestrial;
    double serving_mean_power_w = 0.0;
};

/// Maximum mean received power; the lowest index wins ties.
/// Throws NoCoverageError on an empty candidate set.
Association associate(std::span<const Link> links);

Association associate(const GroundPoint& user, const TopologyRealization& topology,
                      const PlatformProfile& terrestrial, const PlatformProfile* aerial,
                      const RadioGlobals& globals);

/// Every non-serving link interferes. `gains` is parallel to `links`.
double instantaneous_sinr(const Association& assoc, std::span<const Link> links,
                          std::span<const double> gains, const RadioGlobals& globals);

double shannon_rate(double bandwidth_hz, double sinr);

struct IterationOutcome {
    double rate_bps = 0.0;  ///< B log2(1 + SINR), regardless of threshold
    bool covered = false;   ///< SINR >= threshold
};

/// Association, SINR, and rate for one realisation. An empty candidate set
/// gives a zero-rate, uncovered outcome.
IterationOutcome evaluate_links(std::span<const Link> links, std::span<const double> gains,
                                const RadioGlobals& globals);

}  // namespace pdnet
