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

#include <optional>
#include <string_view>

namespace fsoplan {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kMetersPerFoot = 0.3048;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

struct FocalRange {
    double min = 10e-3; // m
    double max = 180e-3; // m
};

struct AngleInterval {
    double lo; // rad
    double hi; // rad
};

struct CameraSpec {
    int horizontal_pixels = 2000;
    double sensor_width = 18e-3; // m
    /// When empty, the declared fov bounds are the whole available set.
    std::optional<FocalRange> focal_range = FocalRange{};
    AngleInterval fov_bounds{deg_to_rad(5.0), deg_to_rad(120.0)};

    void validate() const;
};

enum class ResolutionClass { observation_detection, recognition, identification };

std::string_view to_string(ResolutionClass c);

struct ImageRequirement {
    double resolution = 100.0; // pixels per meter
    ResolutionClass required_class = ResolutionClass::recognition;

    void validate() const;
};

struct ViewGeometry {
    double fov;
    double altitude; // also the camera-object distance
    double swath;
    double c1;
};

struct Classification {
    ResolutionClass resolution_class;
    bool beyond_table = false; // density above the top class boundary
};

double fov_from_focal(double sensor_width, double focal_length);
double swath_width(int pixels, double resolution);

/// Half footprint width, C_p / (2 I).
double half_swath(int pixels, double resolution);

/// Altitude at which a camera with the given fov covers a footprint of 2 c1.
double altitude_from_fov(double c1, double fov);
double fov_from_altitude(double c1, double altitude);

ViewGeometry view_geometry(const CameraSpec& camera, const ImageRequirement& req, double fov);

/// Classes use closed upper bounds: <=30, (30,120], (120,150] pixels/ft.
Classification classify_resolution(double pixels_per_foot);

double pix_per_meter_to_pix_per_foot(double pixels_per_meter);

} // namespace fsoplan
