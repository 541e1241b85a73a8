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

#include "fsoplan/mcvalidate.hpp"
#include "fsoplan/optimizer.hpp"
#include "fsoplan/sweep_table.hpp"

#include <json.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsoplan {

/// Bad command-line arguments (exit code 2).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// lo, lo + step, ... up to hi (hi included when it falls on the grid).
std::vector<double> inclusive_grid(double lo, double hi, double step);

/// Columns: altitude_m, cn2.
SweepTable profile_table(const TurbulenceProfile& profile, double alt_min, double alt_max, double step);

/// Columns: p0, then margin_db_fov<deg> for each requested FOV. p0 is log-spaced.
SweepTable margin_curve_table(const Scenario& scenario, std::span<const double> fovs_deg,
                              double po_min, double po_max, int points);

/// Columns: fov_deg, altitude_m, cn2, s, margin_db.
SweepTable fov_sweep_table(const Scenario& scenario, double p0, double fov_min_deg, double fov_max_deg,
                           double step_deg);

nlohmann::json to_json(const OptimizationResult& result, double outage_target);
SweepTable optimization_table(const OptimizationResult& result);
nlohmann::json to_json(const SimulationReport& report);
nlohmann::json to_json(const ValidationReport& report);

} // namespace fsoplan
