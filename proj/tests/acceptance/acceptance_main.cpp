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

// Acceptance suite: one PASS/FAIL line per criterion, desk-scale budgets
// (10^4 iterations, 25 sweep points). Exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pdnet/advisor.hpp"
#include "pdnet/estimator.hpp"
#include "pdnet/point_fields.hpp"
#include "pdnet/sweep.hpp"
#include "support/brute_force.hpp"
#include "support/stats.hpp"

namespace {

using namespace pdnet;

constexpr std::int64_t kIterations = 10'000;
constexpr int kSweepPoints = 25;

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::vector<double> means_of(const SweepResult& r, const FleetSpec& fleet)
{
    std::vector<double> out;
    for (const auto& rec : r.records)
        if (rec.fleet == fleet)
            out.push_back(rec.estimate.ergodic_capacity_bps);
    return out;
}

const SweepRecord& record_at(const SweepResult& r, const FleetSpec& fleet, double value)
{
    for (const auto& rec : r.records)
        if (rec.fleet == fleet && rec.value_km == value)
            return rec;
    throw std::logic_error("record not found");
}

ScenarioConfig hppp_base()
{
    ScenarioConfig c;
    c.town = HomogeneousTown{};
    return c;
}

ScenarioConfig ippp_base()
{
    ScenarioConfig c;
    c.town = GaussianTown{};
    c.disaster.radius_km = 0.5;
    return c;
}

Verdict baseline_decay()
{
    SweepPlan plan;
    plan.variable = SweepVariable::DisasterRadius;
    plan.values = sweep_values(0.1, 5.0, kSweepPoints, Spacing::Linear);
    plan.fleets = {{"drone", 0}};
    plan.iterations = kIterations;
    const auto result = run_radius_sweep(plan, hppp_base(), PlatformTable::defaults());

    std::size_t rises = 0;
    const auto& recs = result.records;
    for (std::size_t i = 0; i < recs.size(); ++i)
        for (std::size_t j = i + 1; j < recs.size(); ++j)
            rises += recs[j].estimate.ci95_low > recs[i].estimate.ci95_high ? 1 : 0;
    const double rho = testing::spearman(plan.values, means_of(result, plan.fleets[0]));
    std::size_t zeros = 0;
    for (const auto& r : recs)
        zeros += r.estimate.ergodic_capacity_bps == 0.0 ? 1 : 0;
    return {rises == 0 && rho < -0.95,
            "spearman=" + fmt(rho) + " significant_rises=" + std::to_string(rises) + " R(0.1)="
                + fmt(recs.front().estimate.ergodic_capacity_bps) + " zero_points="
                + std::to_string(zeros) + "/" + std::to_string(recs.size())};
}

Verdict hap_harm_and_crossover()
{
    SweepPlan plan;
    plan.variable = SweepVariable::DisasterRadius;
    plan.values = {0.5, 4.0};
    plan.fleets = {{"hap", 0}, {"hap", 1}, {"hap", 2}};
    plan.iterations = kIterations;
    const auto result = run_radius_sweep(plan, hppp_base(), PlatformTable::defaults());

    bool harm = true;
    bool crossover = false;
    std::ostringstream detail;
    for (double rho : plan.values) {
        const auto& base = record_at(result, plan.fleets[0], rho).estimate;
        detail << "rho=" << rho << " base=" << fmt(base.ergodic_capacity_bps);
        for (std::size_t f = 1; f < plan.fleets.size(); ++f) {
            const auto& e = record_at(result, plan.fleets[f], rho).estimate;
            detail << " hap" << plan.fleets[f].n_a << "=" << fmt(e.ergodic_capacity_bps) << "["
                   << fmt(e.ci95_low) << "," << fmt(e.ci95_high) << "]";
            if (rho == 0.5)
                harm = harm && e.ci95_high < base.ci95_low;
            else
                crossover = crossover || e.ergodic_capacity_bps > base.ergodic_capacity_bps;
        }
        detail << "; ";
    }
    detail << "harm=" << (harm ? "yes" : "no") << " crossover=" << (crossover ? "yes" : "no");
    return {harm && crossover, detail.str()};
}

struct DistanceCurves {
    std::vector<double> values;
    SweepResult result;
};

const DistanceCurves& distance_curves()
{
    static const DistanceCurves curves = [] {
        DistanceCurves c;
        SweepPlan plan;
        plan.variable = SweepVariable::CenterDistance;
        plan.values = sweep_values(0.0, 30.0, kSweepPoints, Spacing::Linear);
        plan.fleets = {{"drone", 0}, {"drone", 1}, {"drone", 5}, {"drone", 15}};
        plan.iterations = kIterations;
        c.values = plan.values;
        c.result = run_distance_sweep(plan, ippp_base(), PlatformTable::defaults());
        return c;
    }();
    return curves;
}

Verdict steepest_ascent()
{
    const auto& c = distance_curves();
    const auto r = means_of(c.result, {"drone", 0});
    std::size_t best = 0;
    double best_slope = -INFINITY;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        const double slope = (r[i + 1] - r[i]) / (c.values[i + 1] - c.values[i]);
        if (slope > best_slope) {
            best_slope = slope;
            best = i;
        }
    }
    const double at = 0.5 * (c.values[best] + c.values[best + 1]);
    const double sigma = std::sqrt(10.0);
    return {at >= 2.0 * sigma && at <= 4.0 * sigma,
            "r_c*=" + fmt(at) + " km, slope=" + fmt(best_slope) + " bit/s/km, window=["
                + fmt(2.0 * sigma) + "," + fmt(4.0 * sigma) + "]"};
}

Verdict fleet_flattening()
{
    const auto& c = distance_curves();
    const double cv1 = testing::coefficient_of_variation(means_of(c.result, {"drone", 1}));
    const double cv5 = testing::coefficient_of_variation(means_of(c.result, {"drone", 5}));
    const double cv15 = testing::coefficient_of_variation(means_of(c.result, {"drone", 15}));
    return {cv1 > cv5 && cv5 > cv15,
            "cov n1=" + fmt(cv1) + " n5=" + fmt(cv5) + " n15=" + fmt(cv15)};
}

Verdict far_disaster_advisor()
{
    auto scenario = ippp_base();
    scenario.disaster.center_distance_km = 25.0;
    const auto report = advise(scenario, {{"drone", 1}, {"drone", 5}, {"drone", 15}},
                               PlatformTable::defaults(), AdvisorOptions{});
    std::ostringstream detail;
    detail << recommendation_line(report) << ";";
    for (const auto& row : report.table)
        detail << " n" << row.fleet.n_a << "=" << fmt(row.estimate.ergodic_capacity_bps);
    for (const auto& row : report.eliminated)
        detail << " (dropped n" << row.fleet.n_a << "=" << fmt(row.estimate.ergodic_capacity_bps)
               << ")";
    return {report.best == FleetSpec{"drone", 1} && report.statistically_resolved,
            detail.str()};
}

Verdict oracle_equivalence()
{
    const auto table = PlatformTable::defaults();
    const auto& tbs = table.at("tbs");
    const auto& drone = table.at("drone");
    const testing::RefPlatform ref_tbs{10.0, 3.0, 2.0, 3.0, 0.692, 0.692, 0.005};
    const testing::RefPlatform ref_uav{1.585, 3.0, 2.0, 3.0, 0.692, 0.692, 0.005};
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    double worst = 0.0;
    int mismatches = 0;
    const int topologies = 40;
    for (int t = 0; t < topologies; ++t) {
        const int n = 1 + static_cast<int>(gen() % 5);
        TopologyRealization topo;
        std::vector<testing::RefStation> ref;
        for (int i = 0; i < n; ++i) {
            if (gen() % 2 == 0) {
                const GroundPoint p{coord(gen), coord(gen)};
                topo.tbs.push_back(p);
            } else {
                const AerialPoint p{coord(gen), coord(gen), 0.1};
                const bool los = gen() % 2 == 0;
                topo.fleet.push_back({p, los ? LinkState::AerialLoS : LinkState::AerialNLoS});
            }
        }
        for (const auto& p : topo.tbs)
            ref.push_back({p.x, p.y, 0.0, false});
        for (const auto& a : topo.fleet)
            ref.push_back({a.position.x, a.position.y, a.position.h,
                           a.state == LinkState::AerialLoS});
        RadioGlobals g;
        g.path_loss_unit_km = t % 2 == 0 ? 1.0 : 0.001;
        const GroundPoint user{0.0, 0.0};
        EstimateOptions o;
        o.iterations = 2;
        o.fading = FadingModel::Unit;
        const auto est = estimate_metrics(make_fixed_model(user, topo, tbs, drone, g), o);
        const auto want =
            testing::brute_force_rate(user.x, user.y, ref, ref_tbs, ref_uav, g.path_loss_unit_km,
                                      g.bandwidth_hz, g.noise_power_w(), g.sinr_threshold_db);
        const double err =
            want.rate_bps == 0.0
                ? std::abs(est.ergodic_capacity_bps)
                : std::abs(est.ergodic_capacity_bps - want.rate_bps) / want.rate_bps;
        worst = std::max(worst, err);
        mismatches += (err > 1e-12 || (est.coverage_probability == 1.0) != want.covered) ? 1 : 0;
    }
    return {mismatches == 0, std::to_string(topologies) + " topologies, max rel err="
                                 + fmt(worst) + ", mismatches=" + std::to_string(mismatches)};
}

Verdict point_process_statistics()
{
    const RandomStream root(2026);
    std::vector<double> counts;
    for (int i = 0; i < 2000; ++i) {
        auto rng = root.split(static_cast<std::uint64_t>(i));
        counts.push_back(static_cast<double>(sample_hppp(10.0, 10.0, rng).size()));
    }
    const double dispersion = testing::sample_variance(counts) / testing::mean(counts);

    const RandomStream groot(2027);
    std::vector<double> radii;
    double inside = 0.0;
    int draws = 0;
    while (radii.size() < 100'000) {
        auto rng = groot.split(static_cast<std::uint64_t>(draws++));
        for (const auto& p : sample_gaussian_ippp(10.0, 1254.0, 100.0, rng)) {
            const double r = std::hypot(p.x, p.y);
            radii.push_back(r);
            inside += r <= 100.0 ? 1.0 : 0.0;
        }
    }
    const double mean_count = inside / draws;
    const double ks = testing::ks_statistic(radii, [](double r) { return 1.0 - std::exp(-r * r / 20.0); });
    const double ks_crit = testing::ks_critical_01(radii.size());

    const bool pass = dispersion >= 0.9 && dispersion <= 1.1 && ks < ks_crit
                      && std::abs(mean_count - 1254.0) <= 0.02 * 1254.0;
    return {pass, "dispersion=" + fmt(dispersion) + " ks=" + fmt(ks) + " (crit " + fmt(ks_crit)
                      + ", n=" + std::to_string(radii.size()) + ") mean_count=" + fmt(mean_count)};
}

Verdict determinism()
{
    SweepPlan plan;
    plan.variable = SweepVariable::DisasterRadius;
    plan.values = sweep_values(0.1, 5.0, kSweepPoints, Spacing::Linear);
    plan.fleets = {{"drone", 0}, {"drone", 5}};
    plan.iterations = 500;
    plan.seed = 12345;
    std::vector<std::string> csvs;
    for (int workers : {1, 2, 4}) {
        plan.workers = workers;
        csvs.push_back(to_csv(run_radius_sweep(plan, hppp_base(), PlatformTable::defaults())));
    }
    const bool same = csvs[0] == csvs[1] && csvs[1] == csvs[2];
    return {same, "workers {1,2,4}, " + std::to_string(csvs[0].size()) + " bytes each, "
                      + (same ? "identical" : "differ")};
}

double se_slope(double radius_km, std::ostringstream& detail)
{
    auto cfg = hppp_base();
    cfg.disaster.radius_km = radius_km;
    cfg.fleet = {"drone", 5};
    const auto model = make_model(cfg, PlatformTable::defaults());
    std::vector<double> log_n, log_se;
    for (std::int64_t n : {1'000, 10'000, 100'000}) {
        EstimateOptions o;
        o.iterations = n;
        o.seed = 314;
        const auto est = estimate_metrics(model, o);
        log_n.push_back(std::log(static_cast<double>(n)));
        log_se.push_back(std::log(est.std_error_bps));
        detail << "se(" << n << ")=" << fmt(est.std_error_bps) << " p=" << fmt(est.coverage_probability)
               << " ";
    }
    return testing::ols_slope(log_n, log_se);
}

// Scored at rho_d = 0.1 km where coverage is not a rare event. The
// rho_d = 0.5 km slope (coverage under 1%) is printed for reference.
Verdict mc_convergence()
{
    std::ostringstream detail;
    detail << "rho=0.1: ";
    const double slope = se_slope(0.1, detail);
    detail << "slope=" << fmt(slope) << "; rho=0.5 (reference): ";
    const double rare = se_slope(0.5, detail);
    detail << "slope=" << fmt(rare);
    return {std::abs(slope + 0.5) <= 0.05, detail.str()};
}

}  // namespace

int main(int argc, char** argv)
{
    // Optional arguments select criteria by name.
    const std::vector<std::string> only(argv + 1, argv + argc);
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"baseline_decay", baseline_decay},
        {"hap_harm_small_radius_crossover", hap_harm_and_crossover},
        {"steepest_ascent_location", steepest_ascent},
        {"fleet_size_flattening", fleet_flattening},
        {"far_disaster_advisor", far_disaster_advisor},
        {"oracle_equivalence", oracle_equivalence},
        {"point_process_statistics", point_process_statistics},
        {"determinism", determinism},
        {"mc_convergence", mc_convergence},
    };
    int failed = 0;
    std::size_t ran = 0;
    for (const auto& [name, check] : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end())
            continue;
        ++ran;
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", name.c_str(),
                    v.detail.c_str(), secs);
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    }
    std::printf("%zu criteria, %d failed\n", ran, failed);
    return failed == 0 && ran > 0 ? 0 : 1;
}
