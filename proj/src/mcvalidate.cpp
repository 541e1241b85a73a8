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

#include "fsoplan/mcvalidate.hpp"

#include "fsoplan/error.hpp"
#include "fsoplan/linkbudget.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

namespace fsoplan {

namespace {

struct BlockTally {
    std::uint64_t hits = 0;
    double intensity_sum = 0.0;
};

std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    return std::mt19937_64(seq);
}

BlockTally run_block(std::uint64_t seed, std::uint64_t block, std::uint64_t count, double s, double log_threshold)
{
    auto engine = block_engine(seed, block);
    std::normal_distribution<double> log_intensity(-0.5 * s, std::sqrt(s));
    BlockTally tally;
    for (std::uint64_t i = 0; i < count; ++i) {
        const double x = log_intensity(engine);
        tally.hits += x < log_threshold ? 1 : 0;
        tally.intensity_sum += std::exp(x);
    }
    return tally;
}

} // namespace

SimulationReport simulate_outage(const SimulationSpec& spec)
{
    detail::require(spec.samples > 0, "sample count must be positive");
    detail::require(spec.streams > 0, "stream count must be positive");

    SimulationReport report;
    report.samples = spec.samples;
    // Also validates s > 0 and pm >= exp(s/2).
    report.exact_outage = outage_exact_lognormal(spec.s, spec.pm_linear);
    report.approx_outage = outage_from_margin(spec.s, spec.pm_linear);

    const double log_threshold = -std::log(spec.pm_linear);
    const std::uint64_t blocks = (spec.samples + kSimulationBlock - 1) / kSimulationBlock;
    std::vector<BlockTally> tallies(blocks);

    auto run_blocks = [&](std::uint64_t first, std::uint64_t stride) {
        for (std::uint64_t b = first; b < blocks; b += stride) {
            const std::uint64_t begin = b * kSimulationBlock;
            const std::uint64_t count = std::min(kSimulationBlock, spec.samples - begin);
            tallies[b] = run_block(spec.seed, b, count, spec.s, log_threshold);
        }
    };

    const std::uint64_t workers = std::min<std::uint64_t>(spec.streams, blocks);
    if (workers <= 1) {
        run_blocks(0, 1);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::uint64_t w = 0; w < workers; ++w) {
            pool.emplace_back(run_blocks, w, workers);
        }
    }

    // Block order, so the sum does not depend on the worker count.
    double intensity_sum = 0.0;
    for (const auto& t : tallies) {
        report.hit_count += t.hits;
        intensity_sum += t.intensity_sum;
    }
    const auto n = static_cast<double>(spec.samples);
    report.empirical_outage = static_cast<double>(report.hit_count) / n;
    report.std_error = std::sqrt(report.empirical_outage * (1.0 - report.empirical_outage) / n);
    report.mean_intensity = intensity_sum / n;
    return report;
}

ValidationReport validate_margin(double s, double p0, std::uint64_t samples, std::uint64_t seed, unsigned streams)
{
    detail::require(p0 > kMinValidatedOutage && p0 <= 0.5,
                    "outage target must lie in (1e-5, 0.5]; deeper tails cannot be estimated by sampling");
    detail::require(p0 * static_cast<double>(samples) >= kMinExpectedHits,
                    "statistical floor: p0 * samples must be at least 100 expected outages");

    ValidationReport out;
    out.p0 = p0;
    out.pm_linear = power_margin(s, p0).linear;
    out.simulation = simulate_outage({s, out.pm_linear, samples, seed, streams});
    const auto& sim = out.simulation;
    out.within_target = sim.empirical_outage <= p0;
    out.within_3sigma = std::abs(sim.empirical_outage - sim.exact_outage) <= 3.0 * sim.std_error;
    out.passed = out.within_target && out.within_3sigma;
    return out;
}

} // namespace fsoplan
