// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_quadrature.cpp
//---------------------------------------------------------------------------//
#include "fraclap/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "fraclap/errors.hpp"

using namespace fraclap;

TEST_CASE("smooth integrands")
{
    auto r = integrate_adaptive([](double x) { return std::exp(x); }, 0, 1, 1e-12);
    CHECK(std::fabs(r.value - (std::exp(1.0) - 1)) < 1e-14);
    CHECK(r.err_estimate <= 1e-12);
    CHECK(r.evaluations >= 15);

    auto poly = integrate_adaptive([](double x) { return x * x * x; }, -1, 2, 1e-12);
    CHECK(std::fabs(poly.value - 3.75) < 1e-13);
}

TEST_CASE("integrable endpoint singularity")
{
    auto r = integrate_adaptive([](double x) { return 1 / std::sqrt(x); }, 0, 1, 1e-9);
    CHECK(std::fabs(r.value - 2) < 1e-9);
}

TEST_CASE("breakpoints are honoured")
{
    std::vector<double> breaks{-1, 0, 1};
    auto r = integrate_adaptive([](double x) { return std::fabs(x); }, breaks, 1e-12);
    CHECK(std::fabs(r.value - 1) < 1e-14);
}

TEST_CASE("failure modes")
{
    QuadOptions tight;
    tight.max_evaluations = 100;
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::sin(1 / x); },
                                       1e-6, 1, 1e-12, tight),
                    QuadratureError);
    try
    {
        integrate_adaptive([](double x) { return std::sin(1 / x); }, 1e-6, 1, 1e-12, tight);
    }
    catch (QuadratureError const& e)
    {
        CHECK(e.evaluations() > 0);
        CHECK(e.err_estimate() > 1e-12);
    }
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::exp(x); }, 0, 1, 1e-17),
                    QuadratureError);
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return 1 / x; }, 0, 1, 1e-6),
                    NumericalError);
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, 0, 1, -1), DomainError);
    std::vector<double> bad{1, 0};
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, bad, 1e-6), DomainError);
}

TEST_CASE("radial breakpoints")
{
    RadialPanelling spec;
    spec.r_min = 0;
    spec.r_max = 100;
    spec.inner_scale = 0.1;
    spec.feature_scale = 0.5;
    spec.resolved_extent = 3;
    auto b = radial_breakpoints(spec);
    REQUIRE(b.size() >= 3);
    CHECK(b.front() == 0);
    CHECK(b.back() == 100);
    for (std::size_t i = 1; i < b.size(); ++i)
    {
        CHECK(b[i] > b[i - 1]);
        if (b[i] <= spec.resolved_extent)
            CHECK(b[i] - b[i - 1] <= spec.feature_scale * (1 + 1e-12));
    }

    spec.oscillatory = true;
    auto osc = radial_breakpoints(spec);
    for (std::size_t i = 1; i < osc.size(); ++i)
        CHECK(osc[i] - osc[i - 1] <= spec.feature_scale * (1 + 1e-12));
}

TEST_CASE("sphere integrals")
{
    std::size_t evals = 0;
    for (int n = 1; n <= 3; ++n)
    {
        double const v = integrate_sphere(n, [](std::span<double const>) { return 1.0; },
                                          2.0, 1.0, 1e-12, evals);
        double const area[4] = {0, 2, 2 * std::numbers::pi, 4 * std::numbers::pi};
        CHECK(std::fabs(v - area[n]) < 1e-11);
    }
    // Mean of z_1^2 over S^{n-1} is 1 / n.
    double const v3 = integrate_sphere(
        3, [](std::span<double const> z) { return z[0] * z[0]; }, 2.0, 1.0, 1e-12, evals);
    CHECK(std::fabs(v3 - 4 * std::numbers::pi / 3) < 1e-10);
    double const v2 = integrate_sphere(
        2, [](std::span<double const> z) { return z[1] * z[1]; }, 5.0, 0.3, 1e-12, evals);
    CHECK(std::fabs(v2 - std::numbers::pi) < 1e-10);
    CHECK(evals > 0);
}
