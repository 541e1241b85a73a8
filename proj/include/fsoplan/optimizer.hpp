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

#pragma once

#include "fsoplan/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fsoplan {

/// Relative difference below which two consecutive sweep values count as equal.
inline constexpr double kFlatTolerance = 1e-9;

inline constexpr double kDefaultOracleStep = deg_to_rad(0.25);

struct Constraint {
    std::string name;
    bool satisfied = true;
    bool binding = false;
    std::string detail;
};

struct FeasibleInterval {
    bool feasible = false;
    AngleInterval fov{0.0, 0.0};
    std::vector<Constraint> diagnostics;
};

/// One point on the FOV axis with everything derived from it.
struct OperatingPoint {
    double fov;
    double altitude;
    double cn2;
    double s;
    PowerMargin margin;
};

struct OptimizationResult {
    bool feasible = false;
    std::optional<OperatingPoint> optimum;
    std::optional<AngleInterval> feasible_fov;
    bool monotone_certified = false;
    bool oracle_fallback = false;
    std::optional<MonotonicityViolation> violation;
    std::vector<Constraint> diagnostics;
};

struct OracleResult {
    bool feasible = false;
    std::optional<OperatingPoint> best;
    std::vector<OperatingPoint> table; // ascending in fov
    std::vector<Constraint> diagnostics;
};

struct OptimizeOptions {
    double oracle_step = kDefaultOracleStep;
};

/// Intersection of the declared fov bounds with the range reachable through
/// the focal range, gated on the camera footprint covering the subarea.
FeasibleInterval feasible_fov_interval(const Scenario& scenario);

OperatingPoint evaluate_fov(const Scenario& scenario, double fov, double p0);

/// Picks the smallest feasible FOV (the highest altitude) after certifying that
/// Cn2 decreases over the induced altitude range. If certification fails the
/// grid oracle decides instead, with its step refined to at most 1/1000 of the
/// feasible interval.
OptimizationResult optimize(const Scenario& scenario, const OptimizeOptions& options = {});

/// Brute-force margin minimisation over fov_lo, fov_lo + step, ... <= fov_hi.
/// Ties go to the smaller FOV.
OracleResult grid_search_oracle(const Scenario& scenario, double step);

/// margin_dB(fov_a) - margin_dB(fov_b) at outage p0.
double margin_gain(const Scenario& scenario, double fov_a, double fov_b, double p0);

enum class LinkStatus { strict, flat, broken };

std::string_view to_string(LinkStatus status);

struct ChainLink {
    std::string name; // altitude, cn2, s, margin
    LinkStatus status = LinkStatus::strict;
    std::optional<double> broken_at_fov;
    std::optional<double> broken_at_altitude;
};

struct ChainReport {
    bool holds = true; // no link broken (flat links are allowed)
    std::vector<ChainLink> links;
    std::vector<OperatingPoint> samples; // descending in fov
};

/// Samples n FOVs across the feasible interval and checks, from the widest to the
/// narrowest, that altitude rises while Cn2, s and the margin fall.
ChainReport verify_monotone_chain(const Scenario& scenario, int n_samples);

} // namespace fsoplan
