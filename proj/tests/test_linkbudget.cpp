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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsoplan/error.hpp"
#include "fsoplan/linkbudget.hpp"

#include <cmath>
#include <random>

using namespace fsoplan;
using doctest::Approx;

TEST_CASE("sigma factor")
{
    ChannelParams p;
    CHECK(sigma_factor(p) == Approx(70949548382911.77).epsilon(1e-12));
    p.link_length = 5000.0;
    CHECK(sigma_factor(p) == Approx(380632894854997.2).epsilon(1e-12));
    p.rytov_constant = 0.0;
    CHECK(sigma_factor(p) == 0.0);
    p = {};
    p.wavelength = 0.0;
    CHECK_THROWS_AS(sigma_factor(p), DomainError);
    p = {};
    p.link_length = -2.0;
    CHECK_THROWS_AS(sigma_factor(p), DomainError);
}

TEST_CASE("log-intensity variance")
{
    // cn2 at the 120 degree altitude of the reference camera (5.7735 m)
    CHECK(log_intensity_variance(70949548382911.77, 1.2128627893528201e-14) == Approx(0.8605206715502123).epsilon(1e-12));
    CHECK(log_intensity_variance(7.1e13, 0.0) == 0.0);
    CHECK(log_intensity_variance(0.0, 1e-14) == 0.0);
    CHECK_THROWS_AS(log_intensity_variance(-1.0, 1e-14), DomainError);
    CHECK_THROWS_AS(log_intensity_variance(1.0, -1e-14), DomainError);
}

TEST_CASE("power margin")
{
    auto pm = power_margin(0.0, 1e-6);
    CHECK(pm.linear == 1.0);
    CHECK(pm.decibels == 0.0);

    CHECK(power_margin(0.5, 0.5).linear == Approx(std::exp(0.25)).epsilon(1e-15));

    pm = power_margin(0.861, 1e-10);
    CHECK(pm.linear == Approx(758.8954583868093).epsilon(1e-12));
    CHECK(pm.decibels == Approx(28.80181953796983).epsilon(1e-12));

    CHECK(power_margin(0.5, 1e-2).linear == Approx(9.280203413248584).epsilon(1e-12));

    CHECK_THROWS_AS(power_margin(0.5, 0.6), DomainError);
    CHECK_THROWS_AS(power_margin(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(power_margin(-0.1, 1e-3), DomainError);
    CHECK_THROWS_WITH(power_margin(0.5, 0.75), doctest::Contains("radicand"));
}

TEST_CASE("outage inverse and exact tail")
{
    CHECK(outage_from_margin(0.5, std::exp(0.25)) == Approx(0.5).epsilon(1e-14));
    CHECK(outage_from_margin(0.5, 9.283) == Approx(0.009988087296417974).epsilon(1e-12));
    CHECK(outage_from_margin(0.861, power_margin(0.861, 1e-10).linear) == Approx(1e-10).epsilon(1e-9));
    CHECK(outage_from_margin(0.861, 758.9) == Approx(1e-10).epsilon(1e-4));

    CHECK(outage_exact_lognormal(0.5, std::exp(0.25)) == Approx(0.5).epsilon(1e-14));
    CHECK(outage_exact_lognormal(0.5, 9.283) == Approx(0.002574384769050448).epsilon(1e-10));
    CHECK(outage_exact_lognormal(0.5, 9.280203413248584) == Approx(0.002577782598902089).epsilon(1e-10));

    CHECK_THROWS_AS(outage_from_margin(0.5, 1.0), DomainError);
    CHECK_THROWS_AS(outage_exact_lognormal(0.5, 1.0), DomainError);
    CHECK_THROWS_AS(outage_from_margin(0.0, 2.0), DomainError);
}

TEST_CASE("q function")
{
    CHECK(q_function(0.0) == 0.5);
    CHECK(q_function(1.0) == Approx(0.15865525393145705).epsilon(1e-14));
    CHECK(q_function(6.0) == Approx(9.865876450376981e-10).epsilon(1e-12));
    CHECK(q_function(-1.0) == Approx(1.0 - 0.15865525393145705).epsilon(1e-14));
}

TEST_CASE("decibels")
{
    CHECK(to_decibels(1.0) == 0.0);
    CHECK(to_decibels(10.0) == Approx(10.0).epsilon(1e-15));
    CHECK(to_decibels(758.9) == Approx(28.80184552826433).epsilon(1e-12));
    CHECK(from_decibels(to_decibels(123.4)) == Approx(123.4).epsilon(1e-14));
    CHECK_THROWS_AS(to_decibels(0.0), DomainError);
    CHECK_THROWS_AS(to_decibels(-3.0), DomainError);
}

TEST_CASE("margin is strictly increasing in s and decreasing in p0")
{
    for (double p0 : {1e-12, 1e-6, 1e-2, 0.3}) {
        double previous = power_margin(1e-3, p0).linear;
        for (double s = 1e-3 + 0.01; s <= 3.0; s += 0.01) {
            const double current = power_margin(s, p0).linear;
            CHECK(current > previous);
            previous = current;
        }
    }
    for (double s : {0.01, 0.5, 2.0}) {
        double previous = power_margin(s, 1e-14).linear;
        for (double lp = -13.9; lp <= std::log10(0.5); lp += 0.1) {
            const double current = power_margin(s, std::pow(10.0, lp)).linear;
            CHECK(current < previous);
            previous = current;
        }
    }
}

TEST_CASE("round trip and conservativeness on random inputs")
{
    std::mt19937_64 rng(20261015);
    std::uniform_real_distribution<double> s_dist(0.01, 2.0);
    std::uniform_real_distribution<double> lp_dist(-12.0, std::log10(0.5));
    std::uniform_real_distribution<double> excess_dist(0.0, 8.0);
    for (int i = 0; i < 2000; ++i) {
        const double s = s_dist(rng);
        const double p = std::pow(10.0, lp_dist(rng));
        const auto pm = power_margin(s, p);
        CHECK(std::abs(outage_from_margin(s, pm.linear) - p) / p < 1e-9);
        CHECK(pm.decibels == Approx(10.0 * std::log10(pm.linear)).epsilon(1e-12));
        CHECK(pm.linear > 1.0);

        const double any_pm = std::exp(0.5 * s + excess_dist(rng));
        CHECK(outage_exact_lognormal(s, any_pm) <= outage_from_margin(s, any_pm));
    }
}
