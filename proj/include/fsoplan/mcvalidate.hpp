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

#include <cstdint>
#include <string>

namespace fsoplan {

/// Generator used for every simulation. Samples are drawn in fixed blocks; block b
/// owns an mt19937_64 seeded from seed_seq{seed, b}, so the draw for any sample
/// index is independent of how blocks are spread over worker threads.
inline constexpr const char* kGeneratorId = "mt19937_64/seed_seq(seed,block)/block=65536/normal_distribution";
inline constexpr std::uint64_t kSimulationBlock = 65536;

struct SimulationSpec {
    double s = 0.5;
    double pm_linear = 1.0;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    unsigned streams = 1;
};

struct SimulationReport {
    double empirical_outage = 0.0;
    double exact_outage = 0.0;
    double approx_outage = 0.0;
    double std_error = 0.0; // binomial
    std::uint64_t hit_count = 0;
    std::uint64_t samples = 0;
    double mean_intensity = 0.0;
    std::string generator = kGeneratorId;
};

/// Draws ln I ~ N(-s/2, s) and counts I < 1/pm.
SimulationReport simulate_outage(const SimulationSpec& spec);

struct ValidationReport {
    bool passed = false;
    bool within_target = false;
    bool within_3sigma = false;
    double p0 = 0.0;
    double pm_linear = 0.0;
    SimulationReport simulation;
};

/// Smallest target accepted; deeper tails are left to the analytic pair.
inline constexpr double kMinValidatedOutage = 1e-5;
inline constexpr double kMinExpectedHits = 100.0;

/// Simulates at power_margin(s, p0) and passes when the empirical outage is at
/// most p0 and within three standard errors of the exact lognormal tail.
/// Throws DomainError if p0 <= 1e-5 or p0 * samples < 100.
ValidationReport validate_margin(double s, double p0, std::uint64_t samples,
                                 std::uint64_t seed, unsigned streams = 1);

} // namespace fsoplan
