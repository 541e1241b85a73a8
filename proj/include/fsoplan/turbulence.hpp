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

#include <cstddef>
#include <optional>

namespace fsoplan {

/// Altitude-dependent refractive index structure parameter model,
///   Cn2(A) = a_h (p A)^10 exp(-A/h_h) + a_m exp(-A/h_m) + Cn2(0) exp(-A/h_g),
/// with A in meters and Cn2 in m^(-2/3).
///
/// mid_alt_coeff defaults to 2.7e-15. The textbook Hufnagel-Valley value is
/// 2.7e-16; set it explicitly to reproduce that variant.
struct TurbulenceProfile {
    double high_alt_coeff = 3.6e-3;
    double mid_alt_coeff = 2.7e-15;
    double ground_cn2 = 1.0e-14;
    double high_scale = 1000.0;
    double mid_scale = 1500.0;
    double ground_scale = 100.0;
    double alt_prefactor = 1.0e-5;

    /// Throws DomainError if a coefficient is negative/non-finite or a scale is not positive.
    void validate() const;
};

/// Cn2 at the given altitude (meters). Throws DomainError for negative or non-finite altitude.
double cn2_at_altitude(const TurbulenceProfile& profile, double altitude);

/// Reduced single-hump form delta1 * A * exp(-A / altitude_scale).
///
/// Diagnostic only; the optimizer always evaluates the full profile.
double simplified_cn2(double delta1, double altitude_scale, double altitude);

struct MonotonicityViolation {
    /// Upper altitude of the first grid pair (scanning downward) that fails to decrease.
    double altitude;
    double cn2_here;
    double cn2_below;
};

struct MonotonicityReport {
    bool decreasing = true;
    std::optional<MonotonicityViolation> violation;
    std::size_t points_checked = 0;

    explicit operator bool() const { return decreasing; }
};

/// Certifies that Cn2 is strictly decreasing in altitude over [alt_lo, alt_hi].
///
/// The grid is walked from alt_hi downward in steps of `step` (alt_lo is always
/// included). Cn2 must strictly increase at every step down; the first grid
/// altitude where it does not is reported. Scanning from the top means the
/// reported location is the nearest failure to the high-altitude end the
/// optimizer prefers, which for a single-hump profile is the hump itself.
MonotonicityReport assert_monotone_decreasing(const TurbulenceProfile& profile,
                                              double alt_lo,
                                              double alt_hi,
                                              double step);

} // namespace fsoplan
