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

namespace fsoplan {

struct ChannelParams {
    double wavelength = 1550e-9; // m
    double link_length = 2000.0; // m
    double rytov_constant = 1.23;
    double outage_target = 1e-6;

    void validate() const;
};

struct PowerMargin {
    double linear = 1.0;
    double decibels = 0.0;
};

/// k (2 pi / lambda)^(7/6) L^(11/6), in m^(2/3). Multiplying by Cn2 gives the
/// log-intensity variance of the channel.
double sigma_factor(const ChannelParams& params);

double log_intensity_variance(double sigma, double cn2);

/// Margin that keeps a unit-mean lognormal channel with log-intensity variance
/// `s` at or below outage `p0`:
///   PM = exp( sqrt(-2 s ln(2 p0)) + s/2 ),  0 < p0 <= 0.5.
PowerMargin power_margin(double s, double p0);

/// Algebraic inverse of power_margin: 0.5 exp(-(ln pm - s/2)^2 / (2 s)).
double outage_from_margin(double s, double pm_linear);

/// Exact outage of the unit-mean lognormal channel, Q((ln pm - s/2) / sqrt(s)).
/// Never exceeds outage_from_margin for the same inputs.
double outage_exact_lognormal(double s, double pm_linear);

/// Standard normal upper tail.
double q_function(double x);

double to_decibels(double linear);
double from_decibels(double db);

} // namespace fsoplan
