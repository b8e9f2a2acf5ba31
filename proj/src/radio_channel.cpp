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

#include "pdnet/radio_channel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "pdnet/errors.hpp"

namespace pdnet {
namespace {

void check_link(const std::string& where, const LinkParams& p)
{
    if (!(p.alpha >= 2.0 && std::isfinite(p.alpha)))
        throw ParameterError(where + ".alpha must be >= 2");
    const double twice_m = 2.0 * p.nakagami_m;
    if (!(p.nakagami_m >= 0.5 && twice_m == std::floor(twice_m) && std::isfinite(twice_m)))
        throw ParameterError(where + ".nakagami_m must be an integer or half-integer >= 0.5");
    if (!(p.eta > 0.0 && p.eta <= 1.0))
        throw ParameterError(where + ".eta must lie in (0, 1]");
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view key, std::string_view text)
{
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError(std::string(key), "not a number: '" + std::string(text) + "'");
    return value;
}

std::string format_number(double v)
{
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

}  // namespace

std::string_view to_string(LinkState state)
{
    switch (state) {
    case LinkState::Terrestrial:
        return "terrestrial";
    case LinkState::AerialLoS:
        return "los";
    case LinkState::AerialNLoS:
        return "nlos";
    }
    return "unknown";
}

const LinkParams& PlatformProfile::params(LinkState state) const
{
    if (is_aerial() == (state == LinkState::Terrestrial))
        throw ParameterError("link state " + std::string(to_string(state))
                             + " does not apply to platform " + name);
    switch (state) {
    case LinkState::AerialLoS:
        return los;
    case LinkState::AerialNLoS:
        return nlos;
    case LinkState::Terrestrial:
        break;
    }
    return terrestrial;
}

void validate(const PlatformProfile& profile)
{
    if (profile.name.empty())
        throw ParameterError("platform name must not be empty");
    if (!(profile.transmit_power_w > 0.0 && std::isfinite(profile.transmit_power_w)))
        throw ParameterError(profile.name + ".transmit_power_w must be positive");
    if (!(profile.altitude_km >= 0.0 && std::isfinite(profile.altitude_km)))
        throw ParameterError(profile.name + ".altitude_km must be non-negative");
    if (profile.is_aerial()) {
        check_link(profile.name + ".los", profile.los);
        check_link(profile.name + ".nlos", profile.nlos);
    } else {
        check_link(profile.name + ".terrestrial", profile.terrestrial);
    }
}

PlatformTable PlatformTable::defaults()
{
    const LinkParams los{2.0, 2.0, 0.692};
    const LinkParams nlos{3.0, 1.0, 0.005};
    const LinkParams ground{3.0, 1.0, 0.692};

    PlatformTable table;
    table.add({"tbs", 10.0, 0.0, ground, los, nlos});
    table.add({"drone", 1.585, 0.1, ground, los, nlos});
    table.add({"tethered_balloon", 10.0, 0.5, ground, los, nlos});
    table.add({"hap", 20.0, 17.0, ground, los, nlos});
    return table;
}

PlatformTable PlatformTable::parse(std::string_view text)
{
    std::map<std::string, PlatformProfile, std::less<>> pending;
    bool saw_format = false;
    int version = 0;

    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        const std::string where = "line " + std::to_string(line_no);
        if (eq == std::string_view::npos)
            throw ConfigError(where, "expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));

        if (key == "format") {
            if (value != "pdnet-platforms")
                throw ConfigError("format", "unsupported format '" + std::string(value) + "'");
            saw_format = true;
            continue;
        }
        if (key == "version") {
            version = static_cast<int>(parse_number(key, value));
            continue;
        }

        const auto dot = key.find('.');
        if (dot == std::string_view::npos)
            throw ConfigError(std::string(key), "expected '<platform>.<field>'");
        const std::string name(key.substr(0, dot));
        const auto field = key.substr(dot + 1);
        auto& profile = pending[name];
        profile.name = name;
        const double v = parse_number(key, value);

        if (field == "transmit_power_w") {
            profile.transmit_power_w = v;
        } else if (field == "altitude_km") {
            profile.altitude_km = v;
        } else {
            const auto sub = field.find('.');
            if (sub == std::string_view::npos)
                throw ConfigError(std::string(key), "unknown field");
            const auto state = field.substr(0, sub);
            const auto param = field.substr(sub + 1);
            LinkParams* target = nullptr;
            if (state == "terrestrial")
                target = &profile.terrestrial;
            else if (state == "los")
                target = &profile.los;
            else if (state == "nlos")
                target = &profile.nlos;
            else
                throw ConfigError(std::string(key), "unknown link state");
            if (param == "alpha")
                target->alpha = v;
            else if (param == "nakagami_m")
                target->nakagami_m = v;
            else if (param == "eta")
                target->eta = v;
            else
                throw ConfigError(std::string(key), "unknown link parameter");
        }
    }

    if (!saw_format)
        throw ConfigError("format", "missing 'format = pdnet-platforms'");
    if (version != kFormatVersion)
        throw ConfigError("version", "unsupported platform table version "
                                         + std::to_string(version));

    PlatformTable table;
    for (auto& [name, profile] : pending) {
        try {
            table.add(std::move(profile));
        } catch (const ParameterError& e) {
            throw ConfigError(name, e.what());
        }
    }
    return table;
}

PlatformTable PlatformTable::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("platforms_file", "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

void PlatformTable::add(PlatformProfile profile)
{
    validate(profile);
    auto name = profile.name;
    profiles_.insert_or_assign(std::move(name), std::move(profile));
}

bool PlatformTable::contains(std::string_view name) const
{
    return profiles_.find(name) != profiles_.end();
}

const PlatformProfile& PlatformTable::at(std::string_view name) const
{
    const auto it = profiles_.find(name);
    if (it == profiles_.end())
        throw ConfigError("platform", "unknown platform '" + std::string(name) + "'");
    return it->second;
}

std::vector<std::string> PlatformTable::names() const
{
    std::vector<std::string> out;
    for (const auto& [name, _] : profiles_)
        out.push_back(name);
    return out;
}

std::string PlatformTable::serialize() const
{
    std::ostringstream out;
    out << "format = pdnet-platforms\nversion = " << kFormatVersion << "\n";
    auto emit_link = [&](const std::string& prefix, const LinkParams& p) {
        out << prefix << ".alpha = " << format_number(p.alpha) << "\n"
            << prefix << ".nakagami_m = " << format_number(p.nakagami_m) << "\n"
            << prefix << ".eta = " << format_number(p.eta) << "\n";
    };
    for (const auto& [name, p] : profiles_) {
        out << "\n"
            << name << ".transmit_power_w = " << format_number(p.transmit_power_w) << "\n"
            << name << ".altitude_km = " << format_number(p.altitude_km) << "\n";
        if (p.is_aerial()) {
            emit_link(name + ".los", p.los);
            emit_link(name + ".nlos", p.nlos);
        } else {
            emit_link(name + ".terrestrial", p.terrestrial);
        }
    }
    return out.str();
}

void validate(const LosModel& model)
{
    if (model.kind == LosModel::Kind::Constant) {
        if (!(model.constant_probability >= 0.0 && model.constant_probability <= 1.0))
            throw ParameterError("los.probability must lie in [0, 1]");
        return;
    }
    if (!(model.a > 0.0 && std::isfinite(model.a)))
        throw ParameterError("los.a must be positive");
    if (!(model.b > 0.0 && std::isfinite(model.b)))
        throw ParameterError("los.b must be positive");
}

double los_probability(double elevation_deg, const LosModel& model)
{
    if (!(elevation_deg >= 0.0 && elevation_deg <= 90.0))
        throw ParameterError("elevation angle must lie in [0, 90] degrees");
    if (model.kind == LosModel::Kind::Constant)
        return model.constant_probability;
    const double p = 1.0 / (1.0 + model.a * std::exp(-model.b * (elevation_deg - model.a)));
    return std::clamp(p, 0.0, 1.0);
}

double elevation_deg(const GroundPoint& user, const AerialPoint& platform)
{
    const double rad = std::atan2(platform.h, platform.horizontal_distance_to(user));
    return std::clamp(rad * 180.0 / std::numbers::pi, 0.0, 90.0);
}

LinkState draw_link_state(const GroundPoint& user, const AerialPoint& platform,
                          const LosModel& model, RandomStream& rng)
{
    const double p = los_probability(elevation_deg(user, platform), model);
    return rng.uniform() < p ? LinkState::AerialLoS : LinkState::AerialNLoS;
}

double mean_received_power(const PlatformProfile& profile, LinkState state, double distance_km,
                           double unit_km)
{
    if (!(distance_km > 0.0))
        throw ParameterError("received power is singular at zero distance");
    const auto& p = profile.params(state);
    const double d = distance_km / unit_km;
    double loss;
    if (p.alpha == 2.0)
        loss = 1.0 / (d * d);
    else if (p.alpha == 3.0)
        loss = 1.0 / (d * d * d);
    else
        loss = std::pow(d, -p.alpha);
    return profile.transmit_power_w * p.eta * loss;
}

double draw_fading(double nakagami_m, RandomStream& rng)
{
    // Redraw the measure-zero exact zero so gains stay strictly positive.
    double gain = 0.0;
    if (nakagami_m == 1.0) {
        std::exponential_distribution<double> dist(1.0);
        do
            gain = dist(rng);
        while (gain <= 0.0);
        return gain;
    }
    std::gamma_distribution<double> dist(nakagami_m, 1.0 / nakagami_m);
    do
        gain = dist(rng);
    while (gain <= 0.0);
    return gain;
}

}  // namespace pdnet
