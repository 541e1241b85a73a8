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
#include "fsoplan/turbulence.hpp"

#include <cmath>

using namespace fsoplan;
using doctest::Approx;

TEST_CASE("cn2 at reference altitudes")
{
    const TurbulenceProfile profile;
    CHECK(cn2_at_altitude(profile, 0.0) == Approx(1.27e-14).epsilon(1e-15));
    // mpmath, 40 digits
    CHECK(cn2_at_altitude(profile, 114.30) == Approx(5.690513351986992e-15).epsilon(1e-12));
    CHECK(cn2_at_altitude(profile, 1000.0) == Approx(1.386680233929283e-15).epsilon(1e-12));
}

TEST_CASE("cn2 rejects bad altitudes")
{
    const TurbulenceProfile profile;
    CHECK_THROWS_AS(cn2_at_altitude(profile, -1.0), DomainError);
    CHECK_THROWS_AS(cn2_at_altitude(profile, std::nan("")), DomainError);
    CHECK_THROWS_AS(cn2_at_altitude(profile, INFINITY), DomainError);
}

TEST_CASE("profile validation")
{
    TurbulenceProfile p;
    CHECK_NOTHROW(p.validate());
    p.mid_alt_coeff = -1e-16;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = {};
    p.ground_scale = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = {};
    p.ground_cn2 = 0.0;
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("cn2 approaches ground plus mid coefficient at zero altitude")
{
    const TurbulenceProfile p;
    for (double a = 1e-3; a > 1e-12; a *= 0.1) {
        CHECK(std::abs(cn2_at_altitude(p, a) - (p.ground_cn2 + p.mid_alt_coeff)) <= 1e-14 * a * 1.1);
    }
}

TEST_CASE("cn2 is continuous under step halving")
{
    const TurbulenceProfile p;
    for (double a : {0.0, 57.0, 1234.5, 9999.0}) {
        const double c = cn2_at_altitude(p, a);
        const double first = std::abs(cn2_at_altitude(p, a + 1.0) - c);
        double eps = 1.0;
        for (int i = 0; i < 30; ++i) {
            eps *= 0.5;
        }
        CHECK(std::abs(cn2_at_altitude(p, a + eps) - c) <= 1e-6 * first);
    }
}

TEST_CASE("scaling ground_cn2 only moves the ground term")
{
    const TurbulenceProfile base;
    for (double t : {0.0, 0.5, 3.0}) {
        TurbulenceProfile scaled = base;
        scaled.ground_cn2 *= t;
        for (double a : {0.0, 10.0, 150.0, 800.0}) {
            const double expected = (t - 1.0) * base.ground_cn2 * std::exp(-a / base.ground_scale);
            CHECK(cn2_at_altitude(scaled, a) - cn2_at_altitude(base, a)
                  == Approx(expected).epsilon(1e-9).scale(1e-14));
        }
    }
}

TEST_CASE("simplified form")
{
    CHECK(simplified_cn2(1.0, 1000.0, 0.0) == 0.0);
    CHECK(simplified_cn2(1.0, 1000.0, 1000.0) == Approx(1000.0 / std::exp(1.0)).epsilon(1e-14));
    CHECK(simplified_cn2(2.0, 500.0, 250.0) == Approx(303.2653298563167).epsilon(1e-13));
    CHECK_THROWS_AS(simplified_cn2(1.0, 0.0, 10.0), DomainError);
    CHECK_THROWS_AS(simplified_cn2(0.0, 10.0, 10.0), DomainError);

    SUBCASE("peak sits at the altitude scale")
    {
        for (double scale : {1.0, 100.0, 1500.0}) {
            const double h = scale * 1e-4;
            const double left = simplified_cn2(1.0, scale, scale - h) - simplified_cn2(1.0, scale, scale - 2 * h);
            const double right = simplified_cn2(1.0, scale, scale + 2 * h) - simplified_cn2(1.0, scale, scale + h);
            CHECK(left > 0.0);
            CHECK(right < 0.0);
        }
    }
}

TEST_CASE("default profile decreases over the low-altitude band")
{
    const TurbulenceProfile p;
    const auto report = assert_monotone_decreasing(p, 0.0, 3000.0, 1.0);
    CHECK(report.decreasing);
    CHECK_FALSE(report.violation);
    CHECK(report.points_checked == 3001);

    CHECK(assert_monotone_decreasing(p, 100.0, 100.1, 0.05));
}

TEST_CASE("grid end landing on the lower bound")
{
    const TurbulenceProfile p;
    // Intervals split into 100 steps whose last point rounds just above alt_lo.
    for (double lo : {4.993180, 3.449170, 1.119090, 4.447210, 0.1, 0.3}) {
        for (double hi : {20.1435, 62.085, 89.8772, 92.2077}) {
            CHECK(assert_monotone_decreasing(p, lo, hi, (hi - lo) / 100.0));
        }
    }
}

TEST_CASE("isolated high-altitude term peaks at ten decay scales")
{
    TurbulenceProfile p;
    p.ground_cn2 = 0.0;
    p.mid_alt_coeff = 0.0;
    const auto report = assert_monotone_decreasing(p, 5000.0, 15000.0, 10.0);
    REQUIRE_FALSE(report.decreasing);
    REQUIRE(report.violation);
    CHECK(std::abs(report.violation->altitude - 10000.0) <= 200.0);
    CHECK(report.violation->cn2_below <= report.violation->cn2_here);
}

TEST_CASE("monotonicity interval validation")
{
    const TurbulenceProfile p;
    CHECK_THROWS_AS(assert_monotone_decreasing(p, 10.0, 10.0, 1.0), DomainError);
    CHECK_THROWS_AS(assert_monotone_decreasing(p, 20.0, 10.0, 1.0), DomainError);
    CHECK_THROWS_AS(assert_monotone_decreasing(p, -1.0, 10.0, 1.0), DomainError);
    CHECK_THROWS_AS(assert_monotone_decreasing(p, 0.0, 10.0, 0.0), DomainError);
}
