/*
   Copyright 2026 The fsoplan Authors

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

#include "fsoplan/cli.hpp"

#include "fsoplan/commands.hpp"
#include "fsoplan/error.hpp"
#include "fsoplan/scenario_file.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <optional>

namespace fsoplan {

using nlohmann::json;

namespace {

struct CommonOptions {
    std::string config;
    std::string format;
};

Scenario resolve_scenario(const std::string& explicit_path)
{
    if (!explicit_path.empty()) {
        return load_scenario_file(explicit_path);
    }
    if (const char* env = std::getenv("FSOPLAN_CONFIG"); env && *env) {
        return load_scenario_file(env);
    }
    return Scenario{};
}

void add_common(CLI::App* cmd, CommonOptions& opts, const std::string& default_format)
{
    opts.format = default_format;
    cmd->add_option("--config", opts.config, "Scenario file (JSON); overrides $FSOPLAN_CONFIG");
    cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

void emit(const SweepTable& table, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        out << table.to_json().dump(2) << '\n';
    } else {
        table.write_csv(out);
    }
}

std::uint64_t sample_count(double requested)
{
    if (!std::isfinite(requested) || requested < 1.0 || requested != std::floor(requested) || requested > 1e15) {
        throw UsageError("--samples must be a positive integer");
    }
    return static_cast<std::uint64_t>(requested);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Drone camera / free-space optical link planner"};
    app.name(args.empty() ? "fsoplan" : args.front());
    app.require_subcommand(1);

    CommonOptions profile_opts, curve_opts, sweep_opts, optimize_opts;

    double alt_min = 0.0, alt_max = 3000.0, alt_step = 100.0;
    auto* profile = app.add_subcommand("profile", "Cn2 against altitude");
    profile->add_option("--alt-min", alt_min, "Lowest altitude (m)")->capture_default_str();
    profile->add_option("--alt-max", alt_max, "Highest altitude (m)")->capture_default_str();
    profile->add_option("--step", alt_step, "Altitude step (m)")->capture_default_str();
    add_common(profile, profile_opts, "csv");

    std::vector<double> curve_fovs{120.0, 90.0, 10.0};
    double po_min = 1e-12, po_max = 1e-2;
    int points = 21;
    auto* curve = app.add_subcommand("margin-curve", "Power margin against outage target, one column per FOV");
    curve->add_option("--fov", curve_fovs, "FOV values (deg), comma separated")->delimiter(',')->capture_default_str();
    curve->add_option("--po-min", po_min, "Smallest outage target")->capture_default_str();
    curve->add_option("--po-max", po_max, "Largest outage target")->capture_default_str();
    curve->add_option("--points", points, "Number of log-spaced outage targets")->capture_default_str();
    add_common(curve, curve_opts, "csv");

    std::optional<double> sweep_po, sweep_fov_min, sweep_fov_max;
    double sweep_step = 0.25;
    auto* sweep = app.add_subcommand("fov-sweep", "Altitude, Cn2, s and power margin against FOV");
    sweep->add_option("--po", sweep_po, "Outage target (default: scenario)");
    sweep->add_option("--fov-min", sweep_fov_min, "Smallest FOV (deg, default: scenario bound)");
    sweep->add_option("--fov-max", sweep_fov_max, "Largest FOV (deg, default: scenario bound)");
    sweep->add_option("--step", sweep_step, "FOV step (deg)")->capture_default_str();
    add_common(sweep, sweep_opts, "csv");

    auto* optimize_cmd = app.add_subcommand("optimize", "Choose the FOV that minimises the power margin");
    add_common(optimize_cmd, optimize_opts, "json");

    double sim_s = 0.0;
    std::optional<double> sim_po, sim_pm_db;
    double sim_samples = 1e6;
    std::uint64_t sim_seed = 0;
    unsigned sim_streams = 1;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo outage of a lognormal channel");
    simulate->add_option("--s", sim_s, "Log-intensity variance")->required();
    auto* po_opt = simulate->add_option("--po", sim_po, "Target outage; simulates at the matching margin");
    auto* pm_opt = simulate->add_option("--pm-db", sim_pm_db, "Power margin (dB)");
    po_opt->excludes(pm_opt);
    simulate->add_option("--samples", sim_samples, "Sample count")->capture_default_str();
    simulate->add_option("--seed", sim_seed, "Generator seed")->capture_default_str();
    simulate->add_option("--streams", sim_streams, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) {
        argv.push_back("fsoplan");
    }
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        if (app.get_subcommands().empty()) {
            err << app.help();
        }
        return kExitUsage;
    }

    try {
        if (profile->parsed()) {
            const auto sc = resolve_scenario(profile_opts.config);
            emit(profile_table(sc.profile, alt_min, alt_max, alt_step), profile_opts.format, out);
        } else if (curve->parsed()) {
            const auto sc = resolve_scenario(curve_opts.config);
            emit(margin_curve_table(sc, curve_fovs, po_min, po_max, points), curve_opts.format, out);
        } else if (sweep->parsed()) {
            const auto sc = resolve_scenario(sweep_opts.config);
            emit(fov_sweep_table(sc, sweep_po.value_or(sc.channel.outage_target),
                                 sweep_fov_min.value_or(rad_to_deg(sc.camera.fov_bounds.lo)),
                                 sweep_fov_max.value_or(rad_to_deg(sc.camera.fov_bounds.hi)), sweep_step),
                 sweep_opts.format, out);
        } else if (optimize_cmd->parsed()) {
            const auto sc = resolve_scenario(optimize_opts.config);
            const auto result = optimize(sc);
            if (optimize_opts.format == "csv") {
                optimization_table(result).write_csv(out);
            } else {
                out << to_json(result, sc.channel.outage_target).dump(2) << '\n';
            }
            if (!result.feasible) {
                err << "infeasible scenario:\n";
                for (const auto& c : result.diagnostics) {
                    if (!c.satisfied) {
                        err << "  " << c.name << ": " << c.detail << '\n';
                    }
                }
                return kExitDomain;
            }
        } else if (simulate->parsed()) {
            if (!sim_po && !sim_pm_db) {
                throw UsageError("simulate needs one of --po or --pm-db");
            }
            const auto samples = sample_count(sim_samples);
            if (sim_po) {
                out << to_json(validate_margin(sim_s, *sim_po, samples, sim_seed, sim_streams)).dump(2) << '\n';
            } else {
                const SimulationSpec spec{sim_s, from_decibels(*sim_pm_db), samples, sim_seed, sim_streams};
                out << to_json(simulate_outage(spec)).dump(2) << '\n';
            }
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

} // namespace fsoplan
