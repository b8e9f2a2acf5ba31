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

#include "pdnet/sweep.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "pdnet/errors.hpp"

namespace pdnet {
namespace {

SweepResult run_sweep(const SweepPlan& plan, const ScenarioConfig& base,
                      const PlatformTable& platforms)
{
    validate(plan);
    SweepResult result;
    result.records.reserve(plan.values.size() * plan.fleets.size());
    for (const auto& fleet : plan.fleets) {
        for (std::size_t i = 0; i < plan.values.size(); ++i) {
            ScenarioConfig config = base;
            config.fleet = fleet;
            if (plan.variable == SweepVariable::DisasterRadius)
                config.disaster.radius_km = plan.values[i];
            else
                config.disaster.center_distance_km = plan.values[i];

            EstimateOptions options;
            options.iterations = plan.iterations;
            options.seed = plan.seed;
            options.stream_key = i;
            options.workers = plan.workers;
            options.mode = config.capacity_mode;
            result.records.push_back(
                {plan.variable, plan.values[i], fleet, estimate_or_nan(config, platforms, options)});
        }
    }
    return result;
}

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = line.find(',');
        out.push_back(line.substr(0, comma));
        if (comma == std::string_view::npos)
            break;
        line.remove_prefix(comma + 1);
    }
    return out;
}

template <typename T>
T parse_field(std::string_view text, const char* column)
{
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError(column, "cannot parse '" + std::string(text) + "'");
    return value;
}

}  // namespace

std::string_view to_string(SweepVariable variable)
{
    return variable == SweepVariable::DisasterRadius ? "rho_d" : "r_c";
}

SweepVariable parse_sweep_variable(std::string_view text)
{
    if (text == "rho_d")
        return SweepVariable::DisasterRadius;
    if (text == "r_c")
        return SweepVariable::CenterDistance;
    throw ConfigError("sweep_variable", "expected rho_d|r_c, got '" + std::string(text) + "'");
}

Spacing parse_spacing(std::string_view text)
{
    if (text == "linear")
        return Spacing::Linear;
    if (text == "log")
        return Spacing::Log;
    throw ConfigError("sweep.spacing", "expected linear|log, got '" + std::string(text) + "'");
}

std::vector<double> sweep_values(double lo, double hi, int points, Spacing spacing)
{
    if (points < 1)
        throw ConfigError("sweep.points", "must be at least 1");
    if (!(hi >= lo))
        throw ConfigError("sweep.max_km", "must not be below sweep.min_km");
    if (spacing == Spacing::Log && !(lo > 0.0))
        throw ConfigError("sweep.min_km", "log spacing needs a positive lower bound");
    std::vector<double> values(static_cast<std::size_t>(points));
    if (points == 1) {
        values[0] = lo;
        return values;
    }
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        values[static_cast<std::size_t>(i)] =
            spacing == Spacing::Linear ? lo + t * (hi - lo)
                                       : std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
    }
    values.back() = hi;
    return values;
}

void validate(const SweepPlan& plan)
{
    if (plan.values.empty())
        throw ConfigError("sweep.values", "must not be empty");
    for (std::size_t i = 1; i < plan.values.size(); ++i)
        if (!(plan.values[i] > plan.values[i - 1]))
            throw ConfigError("sweep.values", "must be strictly increasing");
    if (plan.fleets.empty())
        throw ConfigError("fleets", "need at least one fleet entry");
    if (plan.iterations < 1)
        throw ConfigError("iterations", "must be at least 1");
}

MetricEstimate estimate_or_nan(const ScenarioConfig& config, const PlatformTable& platforms,
                               const EstimateOptions& options)
{
    try {
        return estimate_metrics(config, platforms, options);
    } catch (const UndefinedEstimate& e) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        MetricEstimate est;
        est.ergodic_capacity_bps = nan;
        est.std_error_bps = nan;
        est.sample_stddev_bps = nan;
        est.ci95_low = nan;
        est.ci95_high = nan;
        est.coverage_probability = e.coverage_probability();
        est.iterations = options.iterations;
        est.seed = options.seed;
        est.mode = config.capacity_mode;
        return est;
    }
}

SweepResult run_radius_sweep(const SweepPlan& plan, const ScenarioConfig& base,
                             const PlatformTable& platforms)
{
    if (!std::holds_alternative<HomogeneousTown>(base.town))
        throw ConfigError("town.model", "radius sweep needs a homogeneous town");
    if (plan.variable != SweepVariable::DisasterRadius)
        throw ConfigError("sweep_variable", "radius sweep must sweep rho_d");
    return run_sweep(plan, base, platforms);
}

SweepResult run_distance_sweep(const SweepPlan& plan, const ScenarioConfig& base,
                               const PlatformTable& platforms)
{
    if (!std::holds_alternative<GaussianTown>(base.town))
        throw ConfigError("town.model", "distance sweep needs a gaussian town");
    if (plan.variable != SweepVariable::CenterDistance)
        throw ConfigError("sweep_variable", "distance sweep must sweep r_c");
    return run_sweep(plan, base, platforms);
}

std::string format_double(double value)
{
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, r.ptr);
}

std::string to_csv(const SweepResult& result)
{
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& r : result.records) {
        const auto& e = r.estimate;
        out += to_string(r.variable);
        out += ',' + format_double(r.value_km);
        out += ',' + r.fleet.platform;
        out += ',' + std::to_string(r.fleet.n_a);
        out += ',';
        out += to_string(e.mode);
        out += ',' + format_double(e.ergodic_capacity_bps);
        out += ',' + format_double(e.ci95_low);
        out += ',' + format_double(e.ci95_high);
        out += ',' + format_double(e.coverage_probability);
        out += ',' + std::to_string(e.iterations);
        out += ',' + std::to_string(e.seed);
        out += '\n';
    }
    return out;
}

void emit_csv(const SweepResult& result, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing: "
                                 + std::strerror(errno));
    out << to_csv(result);
    out.flush();
    if (!out)
        throw std::runtime_error("write to " + path.string() + " failed: "
                                 + std::strerror(errno));
}

SweepResult parse_csv(std::string_view text)
{
    SweepResult result;
    bool header = true;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (header) {
            if (line != kCsvHeader)
                throw ConfigError("header", "unexpected CSV header");
            header = false;
            continue;
        }
        if (line.empty())
            continue;
        const auto f = split_fields(line);
        if (f.size() != 11)
            throw ConfigError("row", "expected 11 columns, got " + std::to_string(f.size()));
        SweepRecord r;
        r.variable = parse_sweep_variable(f[0]);
        r.value_km = parse_field<double>(f[1], "sweep_value_km");
        r.fleet.platform = std::string(f[2]);
        r.fleet.n_a = parse_field<int>(f[3], "n_a");
        r.estimate.mode = parse_capacity_mode(f[4]);
        r.estimate.ergodic_capacity_bps = parse_field<double>(f[5], "ergodic_capacity_bps");
        r.estimate.ci95_low = parse_field<double>(f[6], "ci95_low");
        r.estimate.ci95_high = parse_field<double>(f[7], "ci95_high");
        r.estimate.coverage_probability = parse_field<double>(f[8], "coverage_probability");
        r.estimate.iterations = parse_field<std::int64_t>(f[9], "iterations");
        r.estimate.seed = parse_field<std::uint64_t>(f[10], "seed");
        result.records.push_back(std::move(r));
    }
    if (header)
        throw ConfigError("header", "empty CSV");
    return result;
}

}  // namespace pdnet
