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

#include "fsoplan/camera.hpp"

#include "fsoplan/error.hpp"

#include <cmath>

namespace fsoplan {

namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

bool open_half_turn(double angle) { return std::isfinite(angle) && angle > 0.0 && angle < kPi; }

} // namespace

void CameraSpec::validate() const
{
    detail::require(horizontal_pixels > 0, "horizontal pixel count must be positive");
    detail::require(positive(sensor_width), "sensor width must be positive");
    if (focal_range) {
        detail::require(positive(focal_range->min) && positive(focal_range->max), "focal lengths must be positive");
        detail::require(focal_range->min <= focal_range->max, "focal range must satisfy min <= max");
    }
    detail::require(open_half_turn(fov_bounds.lo) && open_half_turn(fov_bounds.hi),
                    "fov bounds must lie in (0, 180) degrees");
    detail::require(fov_bounds.lo < fov_bounds.hi, "fov bounds must satisfy min < max");
}

std::string_view to_string(ResolutionClass c)
{
    switch (c) {
    case ResolutionClass::observation_detection: return "observation_detection";
    case ResolutionClass::recognition: return "recognition";
    case ResolutionClass::identification: return "identification";
    }
    return "unknown";
}

void ImageRequirement::validate() const
{
    detail::require(positive(resolution), "image resolution must be positive");
}

double fov_from_focal(double sensor_width, double focal_length)
{
    detail::require(positive(sensor_width), "sensor width must be positive");
    detail::require(positive(focal_length), "focal length must be positive");
    return 2.0 * std::atan(sensor_width / (2.0 * focal_length));
}

double swath_width(int pixels, double resolution)
{
    detail::require(pixels > 0, "pixel count must be positive");
    detail::require(positive(resolution), "image resolution must be positive");
    return static_cast<double>(pixels) / resolution;
}

double half_swath(int pixels, double resolution)
{
    return 0.5 * swath_width(pixels, resolution);
}

double altitude_from_fov(double c1, double fov)
{
    detail::require(positive(c1), "c1 must be positive");
    detail::require(open_half_turn(fov), "fov must lie in (0, pi)");
    return c1 / std::tan(0.5 * fov);
}

double fov_from_altitude(double c1, double altitude)
{
    detail::require(positive(c1), "c1 must be positive");
    detail::require(positive(altitude), "altitude must be positive");
    return 2.0 * std::atan(c1 / altitude);
}

ViewGeometry view_geometry(const CameraSpec& camera, const ImageRequirement& req, double fov)
{
    const double c1 = half_swath(camera.horizontal_pixels, req.resolution);
    const double altitude = altitude_from_fov(c1, fov);
    return {fov, altitude, 2.0 * altitude * std::tan(0.5 * fov), c1};
}

Classification classify_resolution(double pixels_per_foot)
{
    detail::require(std::isfinite(pixels_per_foot) && pixels_per_foot >= 0.0,
                    "pixel density must be finite and non-negative");
    if (pixels_per_foot <= 30.0) {
        return {ResolutionClass::observation_detection};
    }
    if (pixels_per_foot <= 120.0) {
        return {ResolutionClass::recognition};
    }
    return {ResolutionClass::identification, pixels_per_foot > 150.0};
}

double pix_per_meter_to_pix_per_foot(double pixels_per_meter)
{
    detail::require(std::isfinite(pixels_per_meter) && pixels_per_meter >= 0.0,
                    "pixel density must be finite and non-negative");
    return pixels_per_meter * kMetersPerFoot;
}

} // namespace fsoplan
