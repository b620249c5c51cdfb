// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_kernel.cpp
//---------------------------------------------------------------------------//
#include "fraclap/kernel.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "fraclap/errors.hpp"
#include "fraclap/registry.hpp"

using namespace fraclap;

namespace
{
constexpr double pi = std::numbers::pi;

bool close_rel(double a, double b, double rel)
{
    return std::fabs(a - b) <= rel * std::fabs(b);
}
}  // namespace

TEST_CASE("poisson_kernel examples")
{
    std::vector<double> zero1{0.0};
    std::vector<double> one{1.0};
    std::vector<double> zero2{0.0, 0.0};
    CHECK(close_rel(poisson_kernel(zero1, 1, {1, 0.5}), 1 / pi, 1e-14));
    CHECK(close_rel(poisson_kernel(one, 1, {1, 0.5}), 0.5 / pi, 1e-14));
    CHECK(close_rel(poisson_kernel(zero2, 2, {2, 0.75}), 0.0596831036594607509, 1e-13));
}

TEST_CASE("classical half-plane kernel")
{
    FracParams const p(1, 0.5);
    for (int i = 0; i < 100; ++i)
    {
        double const x = -5 + 0.1 * i;
        double const y = 0.05 + 0.03 * i;
        std::vector<double> offset{x};
        double const classical = y / (pi * (x * x + y * y));
        CAPTURE(x);
        CHECK(close_rel(poisson_kernel(offset, y, p), classical, 1e-12));
    }
}

TEST_CASE("kernel scaling")
{
    for (int n = 1; n <= 3; ++n)
    {
        for (double s : {0.2, 0.5, 0.8})
        {
            FracParams const p(n, s);
            std::vector<double> x(static_cast<std::size_t>(n), 0.37);
            for (double lambda : {0.5, 2.0, 10.0})
            {
                std::vector<double> lx(x);
                for (auto& v : lx)
                    v *= lambda;
                double const lhs = poisson_kernel(lx, lambda * 0.8, p);
                double const rhs = std::pow(lambda, -n) * poisson_kernel(x, 0.8, p);
                CHECK(close_rel(lhs, rhs, 1e-12));
            }
        }
    }
}

TEST_CASE("kernel at extreme arguments")
{
    FracParams const p(1, 0.25);
    double const c = kernel_constant(p);
    CHECK(close_rel(poisson_kernel_radial(1e200, 1, p), c * 1e-300, 1e-12));
    CHECK(close_rel(poisson_kernel_radial(0, 1e-200, p), c * 1e200, 1e-12));
    CHECK(poisson_kernel_radial(1e300, 1e-300, p) >= 0);
}

TEST_CASE("kernel domain errors")
{
    std::vector<double> x{0.0};
    CHECK_THROWS_AS(poisson_kernel(x, 0, {1, 0.5}), DomainError);
    CHECK_THROWS_AS(poisson_kernel(x, 1, {2, 0.5}), DomainError);
    CHECK_THROWS_AS(kernel_mass(1, {4, 0.5}, 1e-6), DomainError);
    CHECK_THROWS_AS(kernel_mass(1, {1, 0.5}, 0), DomainError);
}

TEST_CASE("kernel_mass examples")
{
    auto a = kernel_mass(1, {1, 0.5}, 1e-8);
    CHECK(std::fabs(a.value - 1) <= 1e-8);
    CHECK(a.err_estimate <= 1e-8);
    CHECK(a.evaluations >= 1);
    auto b = kernel_mass(0.1, {2, 0.3}, 1e-6);
    CHECK(std::fabs(b.value - 1) <= 1e-6);
    auto c = kernel_mass(5, {3, 0.9}, 1e-4);
    CHECK(std::fabs(c.value - 1) <= 1e-4);
}

TEST_CASE("kernel normalization grid")
{
    for (double y : {0.1, 1.0, 10.0})
    {
        for (int n : {1, 2})
        {
            for (double s : {0.1, 0.25, 0.5, 0.75, 0.9})
            {
                auto m = kernel_mass(y, {n, s}, 1e-6);
                CAPTURE(y);
                CAPTURE(n);
                CAPTURE(s);
                CHECK(std::fabs(m.value - 1) <= 1e-5);
                CHECK(std::fabs(m.value - 1) <= m.err_estimate + 1e-12);
            }
        }
    }
}

TEST_CASE("extension examples")
{
    auto one = make_constant(1);
    auto u = extension_quadrature(one, {{0.0}, 1}, {1, 0.3}, 1e-8);
    CHECK(std::fabs(u.value - 1) <= 1e-8);

    auto cosine = make_cosine(1);
    auto e = extension_quadrature(cosine, {{0.0}, 1}, {1, 0.5}, 1e-9);
    CHECK(std::fabs(e.value - std::exp(-1.0)) <= 1e-8);

    for (double s : {0.25, 0.5, 0.75})
    {
        FracParams const p(1, s);
        auto origin = extension_quadrature(cosine, {{0.0}, 0.6}, p, 1e-8);
        auto shifted = extension_quadrature(cosine, {{1.3}, 0.6}, p, 1e-8);
        CAPTURE(s);
        CHECK(std::fabs(shifted.value - std::cos(1.3) * origin.value) <= 2e-8);
    }
}

TEST_CASE("extension of cos against the Bessel profile")
{
    auto u = make_cosine(2);
    for (double s : {0.25, 0.5, 0.75})
    {
        FracParams const p(1, s);
        for (double y : {0.1, 0.5, 2.0})
        {
            HalfSpacePoint at{{0.3}, y};
            auto r = extension_quadrature(u, at, p, 1e-8);
            double const exact = u.known_extension(at.x, y, p);
            CAPTURE(s);
            CAPTURE(y);
            CHECK(std::fabs(r.value - exact) <= 1e-8);
            CHECK(std::fabs(r.value - exact) <= r.err_estimate);
        }
    }
    FracParams const p2(2, 0.5);
    HalfSpacePoint at2{{0.3, -0.2}, 0.5};
    auto r2 = extension_quadrature(u, at2, p2, 1e-3);
    CHECK(std::fabs(r2.value - u.known_extension(at2.x, 0.5, p2)) <= 1e-3);
}

TEST_CASE("extension against independent high-precision quadrature")
{
    double const orders[3] = {0.25, 0.5, 0.75};
    double const gauss_ref[3]
        = {0.330188798553315024, 0.466126685148053703, 0.530565271786895316};
    double const rational_ref[3]
        = {0.401250183625625277, 0.547445255474452567, 0.610653828113424923};
    auto g = make_gauss();
    auto r = make_rational();
    for (int i = 0; i < 3; ++i)
    {
        FracParams const p(1, orders[i]);
        HalfSpacePoint at{{0.7}, 0.5};
        CHECK(std::fabs(extension_quadrature(g, at, p, 1e-10).value - gauss_ref[i]) <= 1e-10);
        CHECK(std::fabs(extension_quadrature(r, at, p, 1e-10).value - rational_ref[i])
              <= 1e-10);
    }
}

TEST_CASE("constants extend to themselves in every supported dimension")
{
    auto u = make_constant(-2.5);
    for (int n = 1; n <= 3; ++n)
    {
        HalfSpacePoint at{std::vector<double>(static_cast<std::size_t>(n), 0.4), 0.3};
        auto r = extension_quadrature(u, at, {n, 0.4}, 1e-7);
        CHECK(std::fabs(r.value + 2.5) <= 1e-7);
    }
}

TEST_CASE("maximum principle")
{
    for (auto const& u : {make_gauss(), make_rational()})
    {
        for (int n = 1; n <= 2; ++n)
        {
            for (double y : {0.05, 1.0, 20.0})
            {
                HalfSpacePoint at{std::vector<double>(static_cast<std::size_t>(n), 0.2), y};
                double const tol = 1e-5;
                auto r = extension_quadrature(u, at, {n, 0.35}, tol);
                CHECK(r.value >= -tol);
                CHECK(r.value <= 1 + tol);
            }
        }
    }
}

TEST_CASE("boundary recovery")
{
    for (auto const& u : {make_gauss(), make_rational(), make_cosine(1.5)})
    {
        for (double s : {0.25, 0.75})
        {
            FracParams const p(1, s);
            std::vector<double> x0{0.4};
            double previous = INFINITY;
            for (int k = 1; k <= 4; ++k)
            {
                double const y = std::pow(10.0, -k);
                double const tol = u.oscillatory() ? 1e-8 : 1e-11;
                double const gap
                    = std::fabs(extension_quadrature(u, {x0, y}, p, tol).value - u(x0));
                CAPTURE(u.label);
                CAPTURE(k);
                CHECK(gap < previous);
                previous = gap;
            }
        }
    }
}

TEST_CASE("extension at the boundary and domain errors")
{
    auto u = make_gauss();
    std::vector<double> x0{0.3};
    auto r = extension(u, {x0, 0.0}, {1, 0.5}, 1e-8);
    CHECK(r.value == u(x0));
    CHECK(r.err_estimate == 0);
    CHECK_THROWS_AS(extension_quadrature(u, {x0, 0.0}, {1, 0.5}, 1e-8), DomainError);
    CHECK_THROWS_AS(extension(u, {x0, -1.0}, {1, 0.5}, 1e-8), DomainError);
    CHECK_THROWS_AS(extension(u, {{0.0, 0.0}, 1.0}, {1, 0.5}, 1e-8), DomainError);
    CHECK_THROWS_AS(extension(u, {std::vector<double>(4, 0.0), 1.0}, {4, 0.5}, 1e-8),
                    DomainError);
}

TEST_CASE("evaluation budget is enforced")
{
    QuadOptions opts;
    opts.max_evaluations = 200;
    CHECK_THROWS_AS(extension_quadrature(make_cosine(3), {{0.0}, 0.01}, {1, 0.3}, 1e-10, opts),
                    QuadratureError);
}

TEST_CASE("truncation radius honours the tail budget")
{
    auto u = make_constant(1);
    HalfSpacePoint at{{0.0}, 1.0};
    FracParams const p(1, 0.5);
    double const r = extension_truncation_radius(u, at, p, 1e-6);
    // Mass of the classical kernel beyond R is (2/pi) atan(1/R).
    double const beyond = 2 / pi * std::atan(1 / r);
    CHECK(beyond <= 0.5e-6);
    CHECK(beyond >= 0.4e-6);
}
