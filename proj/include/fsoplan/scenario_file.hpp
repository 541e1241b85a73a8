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

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace fsoplan {

/// Malformed scenario file: unknown key, wrong type, or out-of-range value.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Overlays the keys present in `doc` on the default scenario. Unknown keys are
/// rejected with their dotted path. Lengths are given in the unit named by the
/// key suffix (_nm, _mm, _m), angles in degrees.
Scenario scenario_from_json(const nlohmann::json& doc);

Scenario load_scenario_file(const std::filesystem::path& path);

nlohmann::json scenario_to_json(const Scenario& scenario);

} // namespace fsoplan
