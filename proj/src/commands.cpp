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

#include "fsoplan/commands.hpp"

#include <cmath>

namespace fsoplan {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v)
{
    return v ? json(*v) : json(nullptr);
}

} // namespace

std::vector<double> inclusive_grid(double lo, double hi, double step)
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
        throw UsageError("interval must satisfy min <= max");
    }
    if (!std::isfinite(step) || step <= 0.0) {
        throw UsageError("step must be positive");
    }
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        grid.push_back(std::min(lo + static_cast<double>(k) * step, hi));
    }
    return grid;
}

SweepTable profile_table(const TurbulenceProfile& profile, double alt_min, double alt_max, double step)
{
    if (alt_min < 0.0) {
        throw UsageError("--alt-min must be non-negative");
    }
    SweepTable table{{"altitude_m", "cn2"}, {}};
    for (double a : inclusive_grid(alt_min, alt_max, step)) {
        table.add_row({a, cn2_at_altitude(profile, a)});
    }
    return table;
}

SweepTable margin_curve_table(const Scenario& scenario, std::span<const double> fovs_deg,
                              double po_min, double po_max, int points)
{
    if (fovs_deg.empty()) {
        throw UsageError("--fov needs at least one value");
    }
    if (!(po_min > 0.0) || !(po_max <= 0.5) || po_min > po_max) {
        throw UsageError("outage range must satisfy 0 < po-min <= po-max <= 0.5");
    }
    if (points < 1) {
        throw UsageError("--points must be at least 1");
    }

    SweepTable table;
    table.columns.push_back("p0");
    std::vector<OperatingPoint> geometry;
    for (double deg : fovs_deg) {
        if (!(deg > 0.0 && deg < 180.0)) {
            throw UsageError("--fov values must lie in (0, 180) degrees");
        }
        table.columns.push_back("margin_db_fov" + format_number(deg));
        // Margin at p0 = 0.5 only fixes the geometry and s; p0 varies below.
        geometry.push_back(evaluate_fov(scenario, deg_to_rad(deg), 0.5));
    }

    const double log_lo = std::log(po_min);
    const double log_hi = std::log(po_max);
    for (int i = 0; i < points; ++i) {
        double p0 = po_min;
        if (i == points - 1 && points > 1) {
            p0 = po_max;
        } else if (i > 0) {
            p0 = std::exp(log_lo + (log_hi - log_lo) * i / (points - 1));
        }
        std::vector<double> row{p0};
        for (const auto& g : geometry) {
            row.push_back(power_margin(g.s, p0).decibels);
        }
        table.add_row(std::move(row));
    }
    return table;
}

SweepTable fov_sweep_table(const Scenario& scenario, double p0, double fov_min_deg, double fov_max_deg,
                           double step_deg)
{
    if (!(fov_min_deg > 0.0) || !(fov_max_deg < 180.0)) {
        throw UsageError("fov interval must lie within (0, 180) degrees");
    }
    if (!(p0 > 0.0 && p0 <= 0.5)) {
        throw UsageError("--po must lie in (0, 0.5]");
    }
    SweepTable table{{"fov_deg", "altitude_m", "cn2", "s", "margin_db"}, {}};
    for (double deg : inclusive_grid(fov_min_deg, fov_max_deg, step_deg)) {
        const auto p = evaluate_fov(scenario, deg_to_rad(deg), p0);
        table.add_row({deg, p.altitude, p.cn2, p.s, p.margin.decibels});
    }
    return table;
}

json to_json(const OptimizationResult& result, double outage_target)
{
    std::optional<double> fov, altitude, cn2, s, margin_linear, margin_db;
    if (result.optimum) {
        fov = rad_to_deg(result.optimum->fov);
        altitude = result.optimum->altitude;
        cn2 = result.optimum->cn2;
        s = result.optimum->s;
        margin_linear = result.optimum->margin.linear;
        margin_db = result.optimum->margin.decibels;
    }
    json constraints = json::array();
    for (const auto& c : result.diagnostics) {
        constraints.push_back(
            {{"name", c.name}, {"satisfied", c.satisfied}, {"binding", c.binding}, {"detail", c.detail}});
    }
    json interval = nullptr;
    if (result.feasible_fov) {
        interval = json::array({rad_to_deg(result.feasible_fov->lo), rad_to_deg(result.feasible_fov->hi)});
    }
    return {
        {"feasible", result.feasible},
        {"outage_target", outage_target},
        {"fov_opt_deg", optional_number(fov)},
        {"altitude_opt_m", optional_number(altitude)},
        {"cn2_at_opt", optional_number(cn2)},
        {"s_at_opt", optional_number(s)},
        {"margin_linear", optional_number(margin_linear)},
        {"margin_db", optional_number(margin_db)},
        {"feasible_fov_deg", interval},
        {"monotone_certified", result.monotone_certified},
        {"oracle_fallback", result.oracle_fallback},
        {"violation_altitude_m",
         optional_number(result.violation ? std::optional<double>(result.violation->altitude) : std::nullopt)},
        {"constraints", constraints},
    };
}

SweepTable optimization_table(const OptimizationResult& result)
{
    SweepTable table{{"feasible", "monotone_certified", "fov_opt_deg", "altitude_opt_m", "cn2_at_opt", "s_at_opt",
                      "margin_db"},
                     {}};
    const double nan = std::nan("");
    const auto& o = result.optimum;
    table.add_row({result.feasible ? 1.0 : 0.0, result.monotone_certified ? 1.0 : 0.0,
                   o ? rad_to_deg(o->fov) : nan, o ? o->altitude : nan, o ? o->cn2 : nan, o ? o->s : nan,
                   o ? o->margin.decibels : nan});
    return table;
}

json to_json(const SimulationReport& report)
{
    return {
        {"empirical_outage", report.empirical_outage},
        {"exact_outage", report.exact_outage},
        {"approx_outage", report.approx_outage},
        {"stderr", report.std_error},
        {"hit_count", report.hit_count},
        {"samples", report.samples},
        {"mean_intensity", report.mean_intensity},
        {"generator", report.generator},
    };
}

json to_json(const ValidationReport& report)
{
    json out = to_json(report.simulation);
    out["p0"] = report.p0;
    out["pm_linear"] = report.pm_linear;
    out["pm_db"] = to_decibels(report.pm_linear);
    out["within_target"] = report.within_target;
    out["within_3sigma"] = report.within_3sigma;
    out["passed"] = report.passed;
    return out;
}

} // namespace fsoplan
