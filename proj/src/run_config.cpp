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

#include "pdnet/run_config.hpp"

#include <charconv>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "pdnet/errors.hpp"

namespace pdnet {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& prefix,
                    std::initializer_list<std::string_view> known)
{
    if (!obj.is_object())
        throw ConfigError(prefix.empty() ? "<root>" : prefix, "expected an object");
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (auto k : known)
            ok = ok || key == k;
        if (!ok)
            throw ConfigError(prefix.empty() ? key : prefix + "." + key, "unknown key");
    }
}

template <typename T>
void read(const json& obj, const char* key, const std::string& field, T& out)
{
    const auto it = obj.find(key);
    if (it == obj.end())
        return;
    try {
        out = it->get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(field, e.what());
    }
}

void read_town(const json& j, TownModel& town)
{
    std::string model = std::holds_alternative<HomogeneousTown>(town) ? "homogeneous" : "gaussian";
    read(j, "model", "town.model", model);
    if (model == "homogeneous") {
        reject_unknown(j, "town", {"model", "density_per_km2", "window_radius_km"});
        HomogeneousTown h = std::holds_alternative<HomogeneousTown>(town)
                                ? std::get<HomogeneousTown>(town)
                                : HomogeneousTown{};
        read(j, "density_per_km2", "town.density_per_km2", h.density_per_km2);
        read(j, "window_radius_km", "town.window_radius_km", h.window_radius_km);
        town = h;
    } else if (model == "gaussian") {
        reject_unknown(j, "town",
                       {"model", "variance_km2", "mean_count_100km", "truncation_radius_km"});
        GaussianTown g = std::holds_alternative<GaussianTown>(town) ? std::get<GaussianTown>(town)
                                                                    : GaussianTown{};
        read(j, "variance_km2", "town.variance_km2", g.variance_km2);
        read(j, "mean_count_100km", "town.mean_count_100km", g.mean_count_100km);
        read(j, "truncation_radius_km", "town.truncation_radius_km", g.truncation_radius_km);
        town = g;
    } else {
        throw ConfigError("town.model", "expected homogeneous|gaussian, got '" + model + "'");
    }
}

void read_los(const json& j, LosModel& los)
{
    reject_unknown(j, "los", {"model", "a", "b", "probability"});
    std::string model = los.kind == LosModel::Kind::Sigmoid ? "sigmoid" : "constant";
    read(j, "model", "los.model", model);
    if (model == "sigmoid")
        los.kind = LosModel::Kind::Sigmoid;
    else if (model == "constant")
        los.kind = LosModel::Kind::Constant;
    else
        throw ConfigError("los.model", "expected sigmoid|constant, got '" + model + "'");
    read(j, "a", "los.a", los.a);
    read(j, "b", "los.b", los.b);
    read(j, "probability", "los.probability", los.constant_probability);
}

std::vector<FleetSpec> read_fleets(const json& j)
{
    if (!j.is_array())
        throw ConfigError("fleets", "expected an array");
    std::vector<FleetSpec> fleets;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = "fleets[" + std::to_string(i) + "]";
        reject_unknown(j[i], where, {"platform", "n_a"});
        std::string platform;
        read(j[i], "platform", where + ".platform", platform);
        if (platform.empty())
            throw ConfigError(where + ".platform", "missing");
        const auto it = j[i].find("n_a");
        if (it == j[i].end())
            throw ConfigError(where + ".n_a", "missing");
        std::vector<int> sizes;
        if (it->is_array())
            read(j[i], "n_a", where + ".n_a", sizes);
        else {
            int n = 0;
            read(j[i], "n_a", where + ".n_a", n);
            sizes.push_back(n);
        }
        for (int n : sizes)
            fleets.push_back({platform, n});
    }
    return fleets;
}

}  // namespace

std::vector<double> RunConfig::values() const
{
    if (sweep_values)
        return *sweep_values;
    return pdnet::sweep_values(sweep_min_km, sweep_max_km, sweep_points, spacing);
}

SweepPlan RunConfig::plan(SweepVariable variable) const
{
    SweepPlan p;
    p.variable = variable;
    p.values = values();
    p.fleets = fleets;
    p.iterations = iterations;
    p.seed = seed;
    p.workers = workers;
    return p;
}

AdvisorOptions RunConfig::advisor_options() const
{
    AdvisorOptions o;
    o.budgets = advisor_budgets;
    o.seed = seed;
    o.workers = workers;
    return o;
}

std::vector<FleetSpec> default_fleet_grid(std::string_view platform)
{
    std::vector<int> sizes;
    if (platform == "drone")
        sizes = {0, 1, 5, 15, 30};
    else if (platform == "tethered_balloon")
        sizes = {0, 1, 3, 5};
    else if (platform == "hap")
        sizes = {0, 1, 2};
    else
        throw ConfigError("fleet.platform", "no default grid for '" + std::string(platform) + "'");
    std::vector<FleetSpec> out;
    for (int n : sizes)
        out.push_back({std::string(platform), n});
    return out;
}

RunConfig default_radius_config()
{
    RunConfig c;
    c.scenario.town = HomogeneousTown{10.0, 10.0};
    c.scenario.disaster = {0.0, 0.5};
    c.sweep_min_km = 0.1;
    c.sweep_max_km = 5.0;
    c.fleets = default_fleet_grid("drone");
    return c;
}

RunConfig default_distance_config()
{
    RunConfig c;
    c.scenario.town = GaussianTown{10.0, 1254.0, 100.0};
    c.scenario.disaster = {0.0, 0.5};
    c.sweep_min_km = 0.0;
    c.sweep_max_km = 30.0;
    c.fleets = {{"drone", 0}, {"drone", 1}, {"drone", 5}, {"drone", 15}};
    return c;
}

RunConfig default_advise_config()
{
    RunConfig c = default_distance_config();
    c.scenario.disaster = {25.0, 0.5};
    c.fleets = {{"drone", 1}, {"drone", 5}, {"drone", 15}};
    return c;
}

RunConfig apply_json(RunConfig c, std::string_view json_text,
                     const std::filesystem::path& base_dir)
{
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
    }
    reject_unknown(root, "",
                   {"town", "disaster", "fleet", "fleets", "radio", "los", "capacity_mode",
                    "fleet_resample", "platforms_file", "sweep", "iterations", "seed", "workers",
                    "advisor"});

    if (const auto it = root.find("platforms_file"); it != root.end()) {
        std::filesystem::path p = it->get<std::string>();
        if (p.is_relative() && !base_dir.empty())
            p = base_dir / p;
        c.platforms = PlatformTable::load(p);
    }
    if (const auto it = root.find("town"); it != root.end())
        read_town(*it, c.scenario.town);
    if (const auto it = root.find("disaster"); it != root.end()) {
        reject_unknown(*it, "disaster", {"center_distance_km", "radius_km"});
        read(*it, "center_distance_km", "disaster.center_distance_km",
             c.scenario.disaster.center_distance_km);
        read(*it, "radius_km", "disaster.radius_km", c.scenario.disaster.radius_km);
    }
    if (const auto it = root.find("fleet"); it != root.end()) {
        reject_unknown(*it, "fleet", {"platform", "n_a"});
        read(*it, "platform", "fleet.platform", c.scenario.fleet.platform);
        read(*it, "n_a", "fleet.n_a", c.scenario.fleet.n_a);
    }
    if (const auto it = root.find("fleets"); it != root.end())
        c.fleets = read_fleets(*it);
    if (const auto it = root.find("radio"); it != root.end()) {
        reject_unknown(*it, "radio",
                       {"bandwidth_hz", "sinr_threshold_db", "noise_psd_w_per_hz",
                        "path_loss_unit_km", "min_terrestrial_distance_km"});
        auto& g = c.scenario.globals;
        read(*it, "bandwidth_hz", "radio.bandwidth_hz", g.bandwidth_hz);
        read(*it, "sinr_threshold_db", "radio.sinr_threshold_db", g.sinr_threshold_db);
        read(*it, "noise_psd_w_per_hz", "radio.noise_psd_w_per_hz", g.noise_psd_w_per_hz);
        read(*it, "path_loss_unit_km", "radio.path_loss_unit_km", g.path_loss_unit_km);
        read(*it, "min_terrestrial_distance_km", "radio.min_terrestrial_distance_km",
             g.min_terrestrial_distance_km);
    }
    if (const auto it = root.find("los"); it != root.end())
        read_los(*it, c.scenario.los);
    if (const auto it = root.find("capacity_mode"); it != root.end()) {
        std::string mode;
        read(root, "capacity_mode", "capacity_mode", mode);
        c.scenario.capacity_mode = parse_capacity_mode(mode);
    }
    if (const auto it = root.find("fleet_resample"); it != root.end()) {
        std::string resample;
        read(root, "fleet_resample", "fleet_resample", resample);
        c.scenario.fleet_resample = parse_fleet_resample(resample);
    }
    if (const auto it = root.find("sweep"); it != root.end()) {
        reject_unknown(*it, "sweep", {"min_km", "max_km", "points", "spacing", "values"});
        read(*it, "min_km", "sweep.min_km", c.sweep_min_km);
        read(*it, "max_km", "sweep.max_km", c.sweep_max_km);
        read(*it, "points", "sweep.points", c.sweep_points);
        if (it->contains("spacing")) {
            std::string spacing;
            read(*it, "spacing", "sweep.spacing", spacing);
            c.spacing = parse_spacing(spacing);
        }
        if (it->contains("values")) {
            std::vector<double> values;
            read(*it, "values", "sweep.values", values);
            c.sweep_values = std::move(values);
        }
    }
    read(root, "iterations", "iterations", c.iterations);
    read(root, "seed", "seed", c.seed);
    read(root, "workers", "workers", c.workers);
    if (const auto it = root.find("advisor"); it != root.end()) {
        reject_unknown(*it, "advisor", {"budgets"});
        read(*it, "budgets", "advisor.budgets", c.advisor_budgets);
    }

    pdnet::validate(c.scenario, c.platforms);
    for (std::size_t i = 0; i < c.fleets.size(); ++i) {
        const std::string where = "fleets[" + std::to_string(i) + "]";
        if (!c.platforms.contains(c.fleets[i].platform))
            throw ConfigError(where + ".platform", "unknown platform '" + c.fleets[i].platform + "'");
        if (c.fleets[i].n_a < 0)
            throw ConfigError(where + ".n_a", "must be >= 0");
    }
    if (c.iterations < 1)
        throw ConfigError("iterations", "must be >= 1");
    if (c.workers < 0)
        throw ConfigError("workers", "must be >= 0");
    if (c.sweep_points < 1)
        throw ConfigError("sweep.points", "must be >= 1");
    return c;
}

RunConfig load_run_config(RunConfig base, const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("--config", "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return apply_json(std::move(base), buffer.str(), path.parent_path());
}

std::vector<FleetSpec> parse_fleet_flag(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size())
        throw ConfigError("--fleet", "expected <platform>:<n>[,<n>...], got '"
                                         + std::string(text) + "'");
    const std::string platform(text.substr(0, colon));
    auto list = text.substr(colon + 1);
    std::vector<FleetSpec> out;
    while (!list.empty()) {
        const auto comma = list.find(',');
        const auto item = list.substr(0, comma);
        int n = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), n);
        if (ec != std::errc{} || ptr != item.data() + item.size() || n < 0)
            throw ConfigError("--fleet", "bad fleet size '" + std::string(item) + "'");
        out.push_back({platform, n});
        list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    }
    return out;
}

void validate(const RunConfig& config, SweepVariable variable)
{
    if (variable == SweepVariable::DisasterRadius
        && !std::holds_alternative<HomogeneousTown>(config.scenario.town))
        throw ConfigError("town.model", "radius sweep needs a homogeneous town");
    if (variable == SweepVariable::CenterDistance
        && !std::holds_alternative<GaussianTown>(config.scenario.town))
        throw ConfigError("town.model", "distance sweep needs a gaussian town");
    const auto plan = config.plan(variable);
    validate(plan);
    for (const auto& fleet : plan.fleets) {
        ScenarioConfig probe = config.scenario;
        probe.fleet = fleet;
        if (variable == SweepVariable::DisasterRadius)
            probe.disaster.radius_km = plan.values.front();
        else
            probe.disaster.center_distance_km = plan.values.front();
        pdnet::validate(probe, config.platforms);
    }
    if (config.advisor_budgets.empty() || config.advisor_budgets.front() < 2)
        throw ConfigError("advisor.budgets", "first budget must be at least 2");
}

}  // namespace pdnet
