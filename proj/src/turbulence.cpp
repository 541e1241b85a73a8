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

#include "fsoplan/turbulence.hpp"

#include "fsoplan/error.hpp"

#include <cmath>

namespace fsoplan {

namespace {

bool non_negative(double v) { return std::isfinite(v) && v >= 0.0; }
bool positive(double v) { return std::isfinite(v) && v > 0.0; }

} // namespace

void TurbulenceProfile::validate() const
{
    detail::require(non_negative(high_alt_coeff) && non_negative(mid_alt_coeff) && non_negative(ground_cn2),
                    "turbulence coefficients must be finite and non-negative");
    detail::require(positive(high_scale) && positive(mid_scale) && positive(ground_scale),
                    "turbulence decay scales must be finite and positive");
    detail::require(positive(alt_prefactor), "turbulence altitude prefactor must be finite and positive");
}

double cn2_at_altitude(const TurbulenceProfile& profile, double altitude)
{
    detail::require(non_negative(altitude), "altitude must be finite and non-negative");
    const double x = profile.alt_prefactor * altitude;
    const double x2 = x * x;
    const double x10 = x2 * x2 * x2 * x2 * x2;
    return profile.high_alt_coeff * x10 * std::exp(-altitude / profile.high_scale)
         + profile.mid_alt_coeff * std::exp(-altitude / profile.mid_scale)
         + profile.ground_cn2 * std::exp(-altitude / profile.ground_scale);
}

double simplified_cn2(double delta1, double altitude_scale, double altitude)
{
    detail::require(positive(delta1), "delta1 must be positive");
    detail::require(positive(altitude_scale), "altitude scale must be positive");
    detail::require(non_negative(altitude), "altitude must be finite and non-negative");
    return delta1 * altitude * std::exp(-altitude / altitude_scale);
}

MonotonicityReport assert_monotone_decreasing(const TurbulenceProfile& profile,
                                              double alt_lo,
                                              double alt_hi,
                                              double step)
{
    detail::require(non_negative(alt_lo) && std::isfinite(alt_hi) && alt_lo < alt_hi,
                    "monotonicity interval must satisfy 0 <= lo < hi");
    detail::require(positive(step), "monotonicity step must be positive");

    MonotonicityReport report;
    double upper = alt_hi;
    double c_upper = cn2_at_altitude(profile, upper);
    report.points_checked = 1;
    for (std::size_t k = 1;; ++k) {
        double lower = alt_hi - static_cast<double>(k) * step;
        // Snap to alt_lo when within rounding of it, so no near-duplicate pair is compared.
        const bool last = lower <= alt_lo + 1e-9 * step;
        if (last) {
            lower = alt_lo;
        }
        const double c_lower = cn2_at_altitude(profile, lower);
        ++report.points_checked;
        if (!(c_lower > c_upper)) {
            report.decreasing = false;
            report.violation = MonotonicityViolation{upper, c_upper, c_lower};
            return report;
        }
        if (last) {
            break;
        }
        upper = lower;
        c_upper = c_lower;
    }
    return report;
}

} // namespace fsoplan
