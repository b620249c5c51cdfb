// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_random.cpp
//---------------------------------------------------------------------------//
#include "fraclap/random.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fraclap/parallel.hpp"
#include "fraclap/statistics.hpp"

using namespace fraclap;

TEST_CASE("derived streams are reproducible and distinct")
{
    auto a = RandomStream::derive(42, 3, 0);
    auto b = RandomStream::derive(42, 3, 0);
    auto c = RandomStream::derive(42, 3, 1);
    auto d = RandomStream::derive(42, 4, 0);
    auto e = RandomStream::derive(43, 3, 0);
    for (int i = 0; i < 100; ++i)
    {
        auto const va = a.bits();
        CHECK(va == b.bits());
        CHECK(va != c.bits());
        CHECK(va != d.bits());
        CHECK(va != e.bits());
    }
    CHECK(mix64(0) != mix64(1));
}

TEST_CASE("uniform draws lie strictly inside the unit interval")
{
    RandomStream rng(5);
    double sum = 0;
    int const n = 200000;
    for (int i = 0; i < n; ++i)
    {
        double const u = rng.uniform();
        REQUIRE(u > 0);
        REQUIRE(u < 1);
        sum += u;
    }
    CHECK(std::fabs(sum / n - 0.5) < 4 * std::sqrt(1.0 / 12 / n));
}

TEST_CASE("normal draws have standard moments")
{
    RandomStream rng(6);
    int const n = 400000;
    std::vector<double> draws(n);
    double sum = 0;
    double sq = 0;
    for (auto& v : draws)
    {
        v = rng.normal();
        sum += v;
        sq += v * v;
    }
    CHECK(std::fabs(sum / n) < 4 / std::sqrt(double(n)));
    CHECK(std::fabs(sq / n - 1) < 4 * std::sqrt(2.0 / n));
    double const d = ks_distance(draws, [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); });
    CHECK(d < 1.95 / std::sqrt(double(n)));
}

TEST_CASE("normal tails and symmetry")
{
    RandomStream rng(12);
    int const n = 4000000;
    int beyond_r = 0;
    int beyond_2 = 0;
    int positive = 0;
    std::vector<double> draws(n);
    for (auto& v : draws)
    {
        v = rng.normal();
        REQUIRE(std::isfinite(v));
        beyond_r += std::fabs(v) > 3.6541528853610088;
        beyond_2 += std::fabs(v) > 2;
        positive += v > 0;
    }
    auto check_fraction = [n](int count, double p) {
        CHECK(std::fabs(double(count) / n - p) <= 4 * std::sqrt(p * (1 - p) / n));
    };
    check_fraction(beyond_r, std::erfc(3.6541528853610088 / std::sqrt(2.0)));
    check_fraction(beyond_2, std::erfc(2 / std::sqrt(2.0)));
    check_fraction(positive, 0.5);
    double const d = ks_distance(draws, [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); });
    CHECK(d < 1.95 / std::sqrt(double(n)));
}

TEST_CASE("ks distances")
{
    std::vector<double> grid;
    for (int i = 0; i < 1000; ++i)
        grid.push_back((i + 0.5) / 1000);
    CHECK(ks_distance(grid, [](double x) { return x; }) == doctest::Approx(0.0005));
    CHECK(ks_two_sample(grid, grid) == 0);
    std::vector<double> shifted(grid);
    for (auto& v : shifted)
        v += 2;
    CHECK(ks_two_sample(grid, shifted) == 1);
    std::vector<double> a{1, 2, 3, 4};
    std::vector<double> b{3, 4, 5, 6};
    CHECK(ks_two_sample(a, b) == doctest::Approx(0.5));
    CHECK_THROWS(ks_two_sample({}, b));
}

TEST_CASE("parallel_for visits every index once")
{
    for (char const* threads : {"1", "3", "8"})
    {
        setenv("FRACLAP_THREADS", threads, 1);
        CHECK(worker_count() == std::size_t(std::atoi(threads)));
        std::vector<std::atomic<int>> hits(1000);
        parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
        for (auto const& h : hits)
            CHECK(h.load() == 1);
    }
    setenv("FRACLAP_THREADS", "junk", 1);
    CHECK(worker_count() >= 1);
    unsetenv("FRACLAP_THREADS");
}

TEST_CASE("parallel_for propagates exceptions")
{
    setenv("FRACLAP_THREADS", "4", 1);
    CHECK_THROWS_AS(parallel_for(100,
                                 [](std::size_t i) {
                                     if (i == 37)
                                         throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
    unsetenv("FRACLAP_THREADS");
}
