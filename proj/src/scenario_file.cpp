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

#include "fsoplan/scenario_file.hpp"

#include "fsoplan/error.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>

namespace fsoplan {

using nlohmann::json;

namespace {

double number(const json& v, const std::string& key)
{
    if (!v.is_number()) {
        throw ConfigError("config key '" + key + "' must be a number");
    }
    return v.get<double>();
}

bool boolean(const json& v, const std::string& key)
{
    if (!v.is_boolean()) {
        throw ConfigError("config key '" + key + "' must be true or false");
    }
    return v.get<bool>();
}

ResolutionClass resolution_class(const json& v, const std::string& key)
{
    if (v.is_string()) {
        for (auto c : {ResolutionClass::observation_detection, ResolutionClass::recognition,
                       ResolutionClass::identification}) {
            if (v.get<std::string>() == to_string(c)) {
                return c;
            }
        }
    }
    throw ConfigError("config key '" + key +
                      "' must be one of observation_detection, recognition, identification");
}

using Setter = std::function<void(Scenario&, const json&, const std::string&)>;

template <typename Fn>
Setter real(Fn assign)
{
    return [assign](Scenario& sc, const json& v, const std::string& key) { assign(sc, number(v, key)); };
}

const std::map<std::string, Setter>& top_level_keys()
{
    static const std::map<std::string, Setter> keys = {
        {"wavelength_nm", real([](Scenario& s, double v) { s.channel.wavelength = v * 1e-9; })},
        {"link_length_m", real([](Scenario& s, double v) { s.channel.link_length = v; })},
        {"rytov_constant", real([](Scenario& s, double v) { s.channel.rytov_constant = v; })},
        {"outage_target", real([](Scenario& s, double v) { s.channel.outage_target = v; })},
        {"ground_cn2", real([](Scenario& s, double v) { s.profile.ground_cn2 = v; })},
        {"resolution_pix_per_m", real([](Scenario& s, double v) { s.requirement.resolution = v; })},
        {"hsl_m", real([](Scenario& s, double v) { s.hsl = v; })},
        {"required_class",
         [](Scenario& s, const json& v, const std::string& key) {
             s.requirement.required_class = resolution_class(v, key);
         }},
    };
    return keys;
}

const std::map<std::string, Setter>& turbulence_keys()
{
    static const std::map<std::string, Setter> keys = {
        {"high_alt_coeff", real([](Scenario& s, double v) { s.profile.high_alt_coeff = v; })},
        {"mid_alt_coeff", real([](Scenario& s, double v) { s.profile.mid_alt_coeff = v; })},
        {"ground_cn2", real([](Scenario& s, double v) { s.profile.ground_cn2 = v; })},
        {"high_scale_m", real([](Scenario& s, double v) { s.profile.high_scale = v; })},
        {"mid_scale_m", real([](Scenario& s, double v) { s.profile.mid_scale = v; })},
        {"ground_scale_m", real([](Scenario& s, double v) { s.profile.ground_scale = v; })},
        {"alt_prefactor", real([](Scenario& s, double v) { s.profile.alt_prefactor = v; })},
    };
    return keys;
}

FocalRange& focal(Scenario& s)
{
    if (!s.camera.focal_range) {
        s.camera.focal_range = FocalRange{};
    }
    return *s.camera.focal_range;
}

const std::map<std::string, Setter>& camera_keys()
{
    static const std::map<std::string, Setter> keys = {
        {"horizontal_pixels",
         [](Scenario& s, const json& v, const std::string& key) {
             if (!v.is_number_integer()) {
                 throw ConfigError("config key '" + key + "' must be an integer");
             }
             s.camera.horizontal_pixels = v.get<int>();
         }},
        {"sensor_width_mm", real([](Scenario& s, double v) { s.camera.sensor_width = v * 1e-3; })},
        {"focal_min_mm", real([](Scenario& s, double v) { focal(s).min = v * 1e-3; })},
        {"focal_max_mm", real([](Scenario& s, double v) { focal(s).max = v * 1e-3; })},
        {"fov_min_deg", real([](Scenario& s, double v) { s.camera.fov_bounds.lo = deg_to_rad(v); })},
        {"fov_max_deg", real([](Scenario& s, double v) { s.camera.fov_bounds.hi = deg_to_rad(v); })},
    };
    return keys;
}

void apply_section(Scenario& sc, const json& section, const std::string& prefix,
                   const std::map<std::string, Setter>& keys)
{
    if (!section.is_object()) {
        throw ConfigError("config section '" + prefix + "' must be an object");
    }
    for (const auto& [key, value] : section.items()) {
        const std::string path = prefix.empty() ? key : prefix + "." + key;
        auto it = keys.find(key);
        if (it == keys.end()) {
            throw ConfigError("unknown config key '" + path + "'");
        }
        it->second(sc, value, path);
    }
}

} // namespace

Scenario scenario_from_json(const json& doc)
{
    if (!doc.is_object()) {
        throw ConfigError("scenario file must contain a JSON object");
    }
    Scenario sc;
    bool apply_focal = true;
    for (const auto& [key, value] : doc.items()) {
        if (key == "camera") {
            if (!value.is_object()) {
                throw ConfigError("config section 'camera' must be an object");
            }
            json rest = value;
            if (auto it = rest.find("apply_focal_range"); it != rest.end()) {
                apply_focal = boolean(*it, "camera.apply_focal_range");
                rest.erase(it);
            }
            apply_section(sc, rest, "camera", camera_keys());
        } else if (key == "turbulence") {
            apply_section(sc, value, "turbulence", turbulence_keys());
        } else {
            apply_section(sc, json{{key, value}}, "", top_level_keys());
        }
    }
    if (!apply_focal) {
        sc.camera.focal_range.reset();
    }
    try {
        sc.validate();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("invalid scenario: ") + e.what());
    }
    return sc;
}

Scenario load_scenario_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open scenario file '" + path.string() + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("scenario file '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return scenario_from_json(doc);
}

json scenario_to_json(const Scenario& sc)
{
    json camera = {
        {"horizontal_pixels", sc.camera.horizontal_pixels},
        {"sensor_width_mm", sc.camera.sensor_width * 1e3},
        {"apply_focal_range", sc.camera.focal_range.has_value()},
        {"fov_min_deg", rad_to_deg(sc.camera.fov_bounds.lo)},
        {"fov_max_deg", rad_to_deg(sc.camera.fov_bounds.hi)},
    };
    if (sc.camera.focal_range) {
        camera["focal_min_mm"] = sc.camera.focal_range->min * 1e3;
        camera["focal_max_mm"] = sc.camera.focal_range->max * 1e3;
    }
    return {
        {"wavelength_nm", sc.channel.wavelength * 1e9},
        {"link_length_m", sc.channel.link_length},
        {"rytov_constant", sc.channel.rytov_constant},
        {"outage_target", sc.channel.outage_target},
        {"ground_cn2", sc.profile.ground_cn2},
        {"turbulence",
         {{"high_alt_coeff", sc.profile.high_alt_coeff},
          {"mid_alt_coeff", sc.profile.mid_alt_coeff},
          {"high_scale_m", sc.profile.high_scale},
          {"mid_scale_m", sc.profile.mid_scale},
          {"ground_scale_m", sc.profile.ground_scale},
          {"alt_prefactor", sc.profile.alt_prefactor}}},
        {"camera", camera},
        {"resolution_pix_per_m", sc.requirement.resolution},
        {"required_class", std::string(to_string(sc.requirement.required_class))},
        {"hsl_m", sc.hsl},
    };
}

} // namespace fsoplan
