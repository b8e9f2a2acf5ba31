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

// pdnet: post-disaster network Monte Carlo sweeps and fleet advice.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pdnet/advisor.hpp"
#include "pdnet/errors.hpp"
#include "pdnet/run_config.hpp"
#include "pdnet/sweep.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> iterations;
    std::optional<int> points;
    std::optional<int> workers;
    std::string out_path;
    std::string mode;
    std::vector<std::string> fleets;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_out)
{
    cmd->add_option("--config", f.config_path, "JSON scenario/run config")->check(CLI::ExistingFile);
    cmd->add_option("--seed", f.seed, "master seed");
    cmd->add_option("--iterations", f.iterations, "Monte Carlo iterations per record");
    cmd->add_option("--points", f.points, "number of sweep points");
    cmd->add_option("--workers", f.workers, "OpenMP threads (0 = default)");
    cmd->add_option("--mode", f.mode, "capacity mode")
        ->check(CLI::IsMember({"truncated", "conditional"}));
    cmd->add_option("--fleet", f.fleets, "fleet grid entry <platform:n,n,...> (repeatable)");
    if (with_out)
        cmd->add_option("--out", f.out_path, "output CSV path")->required();
}

pdnet::RunConfig resolve(pdnet::RunConfig base, const CommonFlags& f)
{
    pdnet::RunConfig c = f.config_path.empty() ? std::move(base)
                                               : pdnet::load_run_config(std::move(base),
                                                                        f.config_path);
    if (f.seed)
        c.seed = *f.seed;
    if (f.iterations)
        c.iterations = *f.iterations;
    if (f.points) {
        c.sweep_points = *f.points;
        c.sweep_values.reset();
    }
    if (f.workers)
        c.workers = *f.workers;
    if (!f.mode.empty())
        c.scenario.capacity_mode = pdnet::parse_capacity_mode(f.mode);
    if (!f.fleets.empty()) {
        c.fleets.clear();
        for (const auto& text : f.fleets)
            for (auto& spec : pdnet::parse_fleet_flag(text))
                c.fleets.push_back(std::move(spec));
    }
    return c;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out.flush())
        throw std::runtime_error("write to " + path + " failed");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pdnet: UAV-assisted post-disaster network simulator"};
    app.require_subcommand(1);

    CommonFlags radius_flags, distance_flags, advise_flags, validate_flags;
    std::string validate_kind = "sweep-radius";

    auto* radius = app.add_subcommand("sweep-radius", "ergodic capacity vs disaster radius");
    add_common(radius, radius_flags, true);
    auto* distance =
        app.add_subcommand("sweep-distance", "ergodic capacity vs disaster-town distance");
    add_common(distance, distance_flags, true);
    auto* adv = app.add_subcommand("advise", "search the best (platform, n_A)");
    add_common(adv, advise_flags, true);
    auto* check = app.add_subcommand("validate-config", "validate a config and exit");
    add_common(check, validate_flags, false);
    check->add_option("--for", validate_kind, "subcommand the config is meant for")
        ->check(CLI::IsMember({"sweep-radius", "sweep-distance", "advise"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (radius->parsed()) {
            const auto c = resolve(pdnet::default_radius_config(), radius_flags);
            validate(c, pdnet::SweepVariable::DisasterRadius);
            const auto result = pdnet::run_radius_sweep(
                c.plan(pdnet::SweepVariable::DisasterRadius), c.scenario, c.platforms);
            pdnet::emit_csv(result, radius_flags.out_path);
            std::cout << "wrote " << result.records.size() << " records to "
                      << radius_flags.out_path << "\n";
        } else if (distance->parsed()) {
            const auto c = resolve(pdnet::default_distance_config(), distance_flags);
            validate(c, pdnet::SweepVariable::CenterDistance);
            const auto result = pdnet::run_distance_sweep(
                c.plan(pdnet::SweepVariable::CenterDistance), c.scenario, c.platforms);
            pdnet::emit_csv(result, distance_flags.out_path);
            std::cout << "wrote " << result.records.size() << " records to "
                      << distance_flags.out_path << "\n";
        } else if (adv->parsed()) {
            const auto c = resolve(pdnet::default_advise_config(), advise_flags);
            const auto report =
                pdnet::advise(c.scenario, c.fleets, c.platforms, c.advisor_options());
            write_text(advise_flags.out_path, pdnet::advisor_csv(report));
            std::cout << pdnet::recommendation_line(report) << "\n";
        } else if (check->parsed()) {
            pdnet::RunConfig base = validate_kind == "sweep-radius"
                                        ? pdnet::default_radius_config()
                                    : validate_kind == "sweep-distance"
                                        ? pdnet::default_distance_config()
                                        : pdnet::default_advise_config();
            const auto c = resolve(std::move(base), validate_flags);
            if (validate_kind == "advise") {
                if (c.fleets.size() < 2)
                    throw pdnet::ConfigError("fleets", "advisor needs at least two candidates");
                for (const auto& fleet : c.fleets) {
                    auto probe = c.scenario;
                    probe.fleet = fleet;
                    pdnet::validate(probe, c.platforms);
                }
            } else {
                validate(c, validate_kind == "sweep-radius"
                                ? pdnet::SweepVariable::DisasterRadius
                                : pdnet::SweepVariable::CenterDistance);
            }
            std::cout << "config ok (" << validate_kind << ", " << c.fleets.size()
                      << " fleet entries, " << c.iterations << " iterations)\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "pdnet: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
