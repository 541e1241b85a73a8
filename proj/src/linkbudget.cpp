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

#include "fsoplan/linkbudget.hpp"

#include "fsoplan/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fsoplan {

namespace {

// ln(pm) - s/2, the distance of the threshold above the median in log-intensity.
// Values a few ulps below zero (pm handed back through dB) are clamped to zero.
double log_excess(double s, double pm_linear)
{
    detail::require(std::isfinite(s) && s > 0.0, "log-intensity variance must be positive");
    detail::require(std::isfinite(pm_linear) && pm_linear > 0.0, "power margin must be positive");
    const double excess = std::log(pm_linear) - 0.5 * s;
    detail::require(excess >= -1e-12 * (1.0 + 0.5 * s),
                    "power margin is below the deterministic minimum exp(s/2)");
    return std::max(excess, 0.0);
}

} // namespace

void ChannelParams::validate() const
{
    detail::require(std::isfinite(wavelength) && wavelength > 0.0, "wavelength must be positive");
    detail::require(std::isfinite(link_length) && link_length > 0.0, "link length must be positive");
    detail::require(std::isfinite(rytov_constant) && rytov_constant >= 0.0, "rytov constant must be non-negative");
    detail::require(outage_target > 0.0 && outage_target <= 0.5, "outage target must lie in (0, 0.5]");
}

double sigma_factor(const ChannelParams& params)
{
    detail::require(std::isfinite(params.wavelength) && params.wavelength > 0.0, "wavelength must be positive");
    detail::require(std::isfinite(params.link_length) && params.link_length > 0.0, "link length must be positive");
    detail::require(std::isfinite(params.rytov_constant) && params.rytov_constant >= 0.0,
                    "rytov constant must be non-negative");
    const double wave_number = 2.0 * std::numbers::pi / params.wavelength;
    return params.rytov_constant * std::pow(wave_number, 7.0 / 6.0) * std::pow(params.link_length, 11.0 / 6.0);
}

double log_intensity_variance(double sigma, double cn2)
{
    detail::require(std::isfinite(sigma) && sigma >= 0.0, "sigma must be finite and non-negative");
    detail::require(std::isfinite(cn2) && cn2 >= 0.0, "cn2 must be finite and non-negative");
    return sigma * cn2;
}

PowerMargin power_margin(double s, double p0)
{
    detail::require(std::isfinite(s) && s >= 0.0, "log-intensity variance must be finite and non-negative");
    detail::require(p0 > 0.0 && p0 <= 0.5,
                    "outage target must lie in (0, 0.5]; the radicand -2 s ln(2 p0) is negative above 0.5");
    const double radicand = -2.0 * s * std::log(2.0 * p0);
    const double linear = std::exp(std::sqrt(std::max(radicand, 0.0)) + 0.5 * s);
    return {linear, to_decibels(linear)};
}

double outage_from_margin(double s, double pm_linear)
{
    const double excess = log_excess(s, pm_linear);
    return 0.5 * std::exp(-excess * excess / (2.0 * s));
}

double outage_exact_lognormal(double s, double pm_linear)
{
    const double excess = log_excess(s, pm_linear);
    return q_function(excess / std::sqrt(s));
}

double q_function(double x)
{
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double to_decibels(double linear)
{
    detail::require(std::isfinite(linear) && linear > 0.0, "decibel conversion needs a positive ratio");
    return 10.0 * std::log10(linear);
}

double from_decibels(double db)
{
    detail::require(std::isfinite(db), "decibel value must be finite");
    return std::pow(10.0, db / 10.0);
}

} // namespace fsoplan
