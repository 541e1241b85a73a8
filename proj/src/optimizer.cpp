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

#include "fsoplan/optimizer.hpp"

#include "fsoplan/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fsoplan {

namespace {

std::string degrees_interval(double lo, double hi)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, "[%.6g, %.6g] deg", rad_to_deg(lo), rad_to_deg(hi));
    return buf;
}

// Relative step between consecutive values; zero when both are zero.
double relative_change(double from, double to)
{
    const double scale = std::max(std::abs(from), std::abs(to));
    return scale == 0.0 ? 0.0 : (to - from) / scale;
}

// Sign convention: +1 expects an increase, -1 a decrease.
LinkStatus classify_step(double from, double to, int expected_sign)
{
    const double rel = expected_sign * relative_change(from, to);
    if (rel > kFlatTolerance) {
        return LinkStatus::strict;
    }
    if (rel >= -kFlatTolerance) {
        return LinkStatus::flat;
    }
    return LinkStatus::broken;
}

// Altitude step for certifying the profile over [alt_lo, alt_hi].
double certification_step(double alt_lo, double alt_hi)
{
    return std::min(1.0, (alt_hi - alt_lo) / 100.0);
}

} // namespace

FeasibleInterval feasible_fov_interval(const Scenario& scenario)
{
    scenario.validate();
    FeasibleInterval out;

    const double swath = swath_width(scenario.camera.horizontal_pixels, scenario.requirement.resolution);
    {
        char buf[128];
        Constraint c{"swath >= hsl", true, false, {}};
        c.satisfied = swath >= scenario.hsl;
        c.binding = swath == scenario.hsl;
        std::snprintf(buf, sizeof buf, "%s (swath %.6g m, hsl %.6g m)",
                      c.satisfied ? "swath >= HSL" : "swath < HSL", swath, scenario.hsl);
        c.detail = buf;
        out.diagnostics.push_back(std::move(c));
    }

    AngleInterval fov = scenario.camera.fov_bounds;
    Constraint bounds{"fov_bounds", true, false, degrees_interval(fov.lo, fov.hi)};

    std::optional<Constraint> focal;
    if (scenario.camera.focal_range) {
        const auto& fr = *scenario.camera.focal_range;
        const double focal_lo = fov_from_focal(scenario.camera.sensor_width, fr.max);
        const double focal_hi = fov_from_focal(scenario.camera.sensor_width, fr.min);
        focal = Constraint{"focal_range", true, false, degrees_interval(focal_lo, focal_hi)};
        if (focal_lo >= fov.lo) {
            fov.lo = focal_lo;
            focal->binding = true;
        }
        fov.hi = std::min(fov.hi, focal_hi);
    }
    bounds.binding = !focal || !focal->binding;

    const bool overlap = fov.lo <= fov.hi;
    if (!overlap) {
        bounds.satisfied = false;
        if (focal) {
            focal->satisfied = false;
        }
    }
    out.diagnostics.push_back(std::move(bounds));
    if (focal) {
        out.diagnostics.push_back(std::move(*focal));
    }
    if (!overlap) {
        out.diagnostics.push_back({"fov_intersection", false, true, "fov bounds and focal range do not overlap"});
    }

    out.feasible = overlap && out.diagnostics.front().satisfied;
    out.fov = fov;
    return out;
}

OperatingPoint evaluate_fov(const Scenario& scenario, double fov, double p0)
{
    const double altitude = altitude_from_fov(scenario.c1(), fov);
    const double cn2 = cn2_at_altitude(scenario.profile, altitude);
    const double s = log_intensity_variance(sigma_factor(scenario.channel), cn2);
    return {fov, altitude, cn2, s, power_margin(s, p0)};
}

OptimizationResult optimize(const Scenario& scenario, const OptimizeOptions& options)
{
    detail::require(std::isfinite(options.oracle_step) && options.oracle_step > 0.0, "oracle step must be positive");
    OptimizationResult result;
    auto interval = feasible_fov_interval(scenario);
    result.diagnostics = std::move(interval.diagnostics);
    if (!interval.feasible) {
        return result;
    }
    result.feasible = true;
    result.feasible_fov = interval.fov;

    const double p0 = scenario.channel.outage_target;
    const double c1 = scenario.c1();
    const double alt_hi = altitude_from_fov(c1, interval.fov.lo);
    const double alt_lo = altitude_from_fov(c1, interval.fov.hi);

    if (alt_lo < alt_hi) {
        const auto report = assert_monotone_decreasing(scenario.profile, alt_lo, alt_hi,
                                                       certification_step(alt_lo, alt_hi));
        result.monotone_certified = report.decreasing;
        result.violation = report.violation;
    } else {
        result.monotone_certified = true;
    }

    if (result.monotone_certified) {
        result.optimum = evaluate_fov(scenario, interval.fov.lo, p0);
        return result;
    }

    const double step = std::min(options.oracle_step, (interval.fov.hi - interval.fov.lo) / 1000.0);
    auto oracle = grid_search_oracle(scenario, step);
    result.oracle_fallback = true;
    result.optimum = oracle.best;
    return result;
}

OracleResult grid_search_oracle(const Scenario& scenario, double step)
{
    detail::require(std::isfinite(step) && step > 0.0, "grid step must be positive");
    OracleResult out;
    auto interval = feasible_fov_interval(scenario);
    out.diagnostics = std::move(interval.diagnostics);
    if (!interval.feasible) {
        return out;
    }
    out.feasible = true;

    const double p0 = scenario.channel.outage_target;
    const double lo = interval.fov.lo;
    const double hi = interval.fov.hi;
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    out.table.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double fov = std::min(lo + static_cast<double>(k) * step, hi);
        out.table.push_back(evaluate_fov(scenario, fov, p0));
        if (!out.best || out.table.back().margin.linear < out.best->margin.linear) {
            out.best = out.table.back();
        }
    }
    return out;
}

double margin_gain(const Scenario& scenario, double fov_a, double fov_b, double p0)
{
    return evaluate_fov(scenario, fov_a, p0).margin.decibels - evaluate_fov(scenario, fov_b, p0).margin.decibels;
}

std::string_view to_string(LinkStatus status)
{
    switch (status) {
    case LinkStatus::strict: return "strict";
    case LinkStatus::flat: return "flat";
    case LinkStatus::broken: return "broken";
    }
    return "unknown";
}

ChainReport verify_monotone_chain(const Scenario& scenario, int n_samples)
{
    detail::require(n_samples > 0, "sample count must be positive");
    const auto interval = feasible_fov_interval(scenario);
    detail::require(interval.feasible, "monotone chain needs a feasible scenario");

    ChainReport report;
    const double p0 = scenario.channel.outage_target;
    const double lo = interval.fov.lo;
    const double hi = interval.fov.hi;
    report.samples.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double fov = n_samples == 1 ? lo : hi - (hi - lo) * i / (n_samples - 1);
        report.samples.push_back(evaluate_fov(scenario, fov, p0));
    }

    struct LinkSpec {
        const char* name;
        double (*get)(const OperatingPoint&);
        int expected_sign;
    };
    const LinkSpec specs[] = {
        {"altitude", [](const OperatingPoint& p) { return p.altitude; }, +1},
        {"cn2", [](const OperatingPoint& p) { return p.cn2; }, -1},
        {"s", [](const OperatingPoint& p) { return p.s; }, -1},
        {"margin", [](const OperatingPoint& p) { return p.margin.linear; }, -1},
    };

    for (const auto& spec : specs) {
        ChainLink link{spec.name, LinkStatus::strict, std::nullopt, std::nullopt};
        for (std::size_t i = 1; i < report.samples.size(); ++i) {
            const auto& prev = report.samples[i - 1];
            const auto& next = report.samples[i];
            const auto status = classify_step(spec.get(prev), spec.get(next), spec.expected_sign);
            if (status == LinkStatus::broken) {
                link.status = LinkStatus::broken;
                link.broken_at_fov = next.fov;
                link.broken_at_altitude = next.altitude;
                break;
            }
            if (status == LinkStatus::flat) {
                link.status = LinkStatus::flat;
            }
        }
        report.holds = report.holds && link.status != LinkStatus::broken;
        report.links.push_back(std::move(link));
    }
    return report;
}

} // namespace fsoplan
