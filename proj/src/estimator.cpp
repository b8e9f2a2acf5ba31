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

#include "pdnet/estimator.hpp"

#include <cmath>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pdnet/errors.hpp"

namespace pdnet {
namespace {

constexpr double kZ95 = 1.959963984540054;

std::vector<double> draw_gains(std::span<const Link> links, const RandomStream& iteration,
                               FadingModel fading)
{
    std::vector<double> gains(links.size(), 1.0);
    if (fading == FadingModel::Unit)
        return gains;
    // Terrestrial and aerial gains come from separate streams so fleets of
    // different sizes share the terrestrial fading.
    auto ground = substream(iteration, StreamPurpose::TerrestrialFading);
    auto air = substream(iteration, StreamPurpose::AerialFading);
    for (std::size_t i = 0; i < links.size(); ++i)
        gains[i] = draw_fading(links[i].nakagami_m,
                               links[i].kind == BsKind::Terrestrial ? ground : air);
    return gains;
}

struct Moments {
    double mean = 0.0;
    double stddev = 0.0;
};

Moments moments(std::span<const double> values)
{
    Moments m;
    if (values.empty())
        return m;
    const double n = static_cast<double>(values.size());
    m.mean = pairwise_sum(values) / n;
    if (values.size() < 2)
        return m;
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - m.mean;
        sq[i] = d * d;
    }
    m.stddev = std::sqrt(pairwise_sum(sq) / (n - 1.0));
    return m;
}

}  // namespace

double pairwise_sum(std::span<const double> values)
{
    if (values.size() <= 16) {
        double s = 0.0;
        for (double v : values)
            s += v;
        return s;
    }
    const auto half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

EstimatorModel make_model(const ScenarioConfig& config, const PlatformTable& platforms)
{
    validate(config, platforms);

    EstimatorModel model;
    const GroundPoint center = disaster_center(config.town, config.disaster);
    model.user = center;
    model.terrestrial = platforms.at(PlatformTable::kTerrestrial);
    model.globals = config.globals;
    if (config.fleet.n_a > 0)
        model.aerial = platforms.at(config.fleet.platform);

    const double altitude = model.aerial ? model.aerial->altitude_km : 0.0;
    model.sample = [config, center, altitude](const RandomStream& root,
                                              const RandomStream& iteration) {
        TopologyRealization topo;
        auto town_rng = substream(iteration, StreamPurpose::Town);
        const auto field = sample_town(config.town, center, town_rng);
        topo.tbs = apply_disaster(field, center, config.disaster.radius_km);

        const int n_a = config.fleet.n_a;
        if (n_a > 0) {
            auto fleet_rng = config.fleet_resample == FleetResample::Frozen
                                 ? substream(root, StreamPurpose::Fleet)
                                 : substream(iteration, StreamPurpose::Fleet);
            const auto fleet =
                deploy_fleet(center, config.disaster.radius_km, n_a, altitude, fleet_rng);
            const auto states = substream(iteration, StreamPurpose::LinkState);
            topo.fleet.reserve(fleet.size());
            for (std::size_t j = 0; j < fleet.size(); ++j) {
                auto uav_rng = states.split(j);
                topo.fleet.push_back(
                    {fleet[j], draw_link_state(center, fleet[j], config.los, uav_rng)});
            }
        }
        return topo;
    };
    return model;
}

EstimatorModel make_fixed_model(const GroundPoint& user, TopologyRealization topology,
                                const PlatformProfile& terrestrial,
                                std::optional<PlatformProfile> aerial,
                                const RadioGlobals& globals)
{
    EstimatorModel model;
    model.user = user;
    model.terrestrial = terrestrial;
    model.aerial = std::move(aerial);
    model.globals = globals;
    model.sample = [topo = std::move(topology)](const RandomStream&, const RandomStream&) {
        return topo;
    };
    return model;
}

RandomStream root_stream(const EstimateOptions& options)
{
    return RandomStream(options.seed).split(options.stream_key);
}

IterationOutcome run_iteration(const EstimatorModel& model, const RandomStream& root,
                               std::int64_t index, FadingModel fading)
{
    const auto iteration = root.split(static_cast<std::uint64_t>(index));
    const auto topo = model.sample(root, iteration);
    const auto links = build_links(model.user, topo, model.terrestrial,
                                   model.aerial ? &*model.aerial : nullptr, model.globals);
    const auto gains = draw_gains(links, iteration, fading);
    return evaluate_links(links, gains, model.globals);
}

std::vector<IterationOutcome> simulate(const EstimatorModel& model,
                                       const EstimateOptions& options)
{
    if (options.iterations < 1)
        throw ParameterError("iterations must be at least 1");
    const auto root = root_stream(options);
    const std::int64_t n = options.iterations;
    std::vector<IterationOutcome> outcomes(static_cast<std::size_t>(n));

    std::exception_ptr failure;
    std::mutex failure_mutex;
#ifdef _OPENMP
    const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(workers)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            outcomes[static_cast<std::size_t>(i)] = run_iteration(model, root, i, options.fading);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return outcomes;
}

std::vector<IterationOutcome> simulate_serial(const EstimatorModel& model,
                                              const EstimateOptions& options)
{
    if (options.iterations < 1)
        throw ParameterError("iterations must be at least 1");
    const auto root = root_stream(options);
    std::vector<IterationOutcome> outcomes;
    outcomes.reserve(static_cast<std::size_t>(options.iterations));
    for (std::int64_t i = 0; i < options.iterations; ++i)
        outcomes.push_back(run_iteration(model, root, i, options.fading));
    return outcomes;
}

MetricEstimate summarize(std::span<const IterationOutcome> outcomes, CapacityMode mode,
                         std::uint64_t seed)
{
    MetricEstimate est;
    est.iterations = static_cast<std::int64_t>(outcomes.size());
    est.seed = seed;
    est.mode = mode;

    std::vector<double> samples;
    samples.reserve(outcomes.size());
    for (const auto& o : outcomes) {
        if (o.covered)
            ++est.covered_iterations;
        if (mode == CapacityMode::Truncated)
            samples.push_back(o.covered ? o.rate_bps : 0.0);
        else if (o.covered)
            samples.push_back(o.rate_bps);
    }
    est.coverage_probability = outcomes.empty()
                                   ? 0.0
                                   : static_cast<double>(est.covered_iterations)
                                         / static_cast<double>(outcomes.size());
    if (samples.empty())
        throw UndefinedEstimate(est.coverage_probability);

    const auto m = moments(samples);
    est.ergodic_capacity_bps = m.mean;
    est.sample_stddev_bps = m.stddev;
    est.std_error_bps = m.stddev / std::sqrt(static_cast<double>(samples.size()));
    est.ci95_low = m.mean - kZ95 * est.std_error_bps;
    est.ci95_high = m.mean + kZ95 * est.std_error_bps;
    return est;
}

MetricEstimate estimate_metrics(const EstimatorModel& model, const EstimateOptions& options)
{
    const auto outcomes = simulate(model, options);
    return summarize(outcomes, options.mode, options.seed);
}

MetricEstimate estimate_metrics_serial(const EstimatorModel& model,
                                       const EstimateOptions& options)
{
    const auto outcomes = simulate_serial(model, options);
    return summarize(outcomes, options.mode, options.seed);
}

MetricEstimate estimate_metrics(const ScenarioConfig& config, const PlatformTable& platforms,
                                EstimateOptions options)
{
    options.mode = config.capacity_mode;
    return estimate_metrics(make_model(config, platforms), options);
}

}  // namespace pdnet
