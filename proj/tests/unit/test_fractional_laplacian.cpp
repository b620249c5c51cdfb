// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_fractional_laplacian.cpp
//---------------------------------------------------------------------------//
#include "fraclap/fractional_laplacian.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "fraclap/errors.hpp"
#include "fraclap/registry.hpp"

using namespace fraclap;

namespace
{
std::vector<double> shifted(std::span<double const> x, double a)
{
    std::vector<double> out(x.begin(), x.end());
    out[0] -= a;
    return out;
}

//! x -> u(x - a e_1)
BoundaryFunction translate(BoundaryFunction const& u, double a)
{
    BoundaryFunction v = u;
    v.eval = [u, a](std::span<double const> x) { return u(shifted(x, a)); };
    v.laplacian = [u, a](std::span<double const> x) { return u.laplacian(shifted(x, a)); };
    auto const& env = std::get<EnvelopeTail>(u.tail).envelope;
    v.tail = EnvelopeTail{[env, a](double r) { return env(std::max(0.0, r - std::fabs(a))); }};
    return v;
}

//! x -> u(lambda x)
BoundaryFunction dilate(BoundaryFunction const& u, double lambda)
{
    BoundaryFunction v = u;
    auto scale = [lambda](std::span<double const> x) {
        std::vector<double> out(x.begin(), x.end());
        for (auto& c : out)
            c *= lambda;
        return out;
    };
    v.eval = [u, scale](std::span<double const> x) { return u(scale(x)); };
    v.laplacian = [u, scale, lambda](std::span<double const> x) {
        return lambda * lambda * u.laplacian(scale(x));
    };
    auto const& env = std::get<EnvelopeTail>(u.tail).envelope;
    v.tail = EnvelopeTail{[env, lambda](double r) { return env(lambda * r); }};
    v.feature_scale = u.feature_scale / lambda;
    v.second_derivative_bound = *u.second_derivative_bound * lambda * lambda;
    v.fourth_derivative_bound = *u.fourth_derivative_bound * std::pow(lambda, 4);
    return v;
}

//! a u + b v for two envelope-tailed functions
BoundaryFunction combine(double a, BoundaryFunction const& u, double b, BoundaryFunction const& v)
{
    BoundaryFunction w;
    w.eval = [=](std::span<double const> x) { return a * u(x) + b * v(x); };
    w.laplacian = [=](std::span<double const> x) {
        return a * u.laplacian(x) + b * v.laplacian(x);
    };
    w.bound = std::fabs(a) * u.bound + std::fabs(b) * v.bound;
    w.feature_scale = std::min(u.feature_scale, v.feature_scale);
    auto const& eu = std::get<EnvelopeTail>(u.tail).envelope;
    auto const& ev = std::get<EnvelopeTail>(v.tail).envelope;
    w.tail = EnvelopeTail{[=](double r) { return std::fabs(a) * eu(r) + std::fabs(b) * ev(r); }};
    w.second_derivative_bound
        = std::fabs(a) * *u.second_derivative_bound + std::fabs(b) * *v.second_derivative_bound;
    w.fourth_derivative_bound
        = std::fabs(a) * *u.fourth_derivative_bound + std::fabs(b) * *v.fourth_derivative_bound;
    return w;
}
}  // namespace

TEST_CASE("principal value examples")
{
    std::vector<double> origin{0.0};
    std::vector<double> x0{1.7};
    auto c = frac_laplacian_pv(make_constant(4), x0, {1, 0.3}, 1e-8);
    CHECK(c.value == 0);

    auto one = frac_laplacian_pv(make_cosine(1), origin, {1, 0.5}, 1e-8);
    CHECK(std::fabs(one.value - 1) <= 1e-8);
    CHECK(one.err_estimate <= 1e-8);

    auto two = frac_laplacian_pv(make_cosine(2), origin, {1, 0.75}, 1e-8);
    CHECK(std::fabs(two.value - 2.8284271247461903) <= 1e-8);
}

TEST_CASE("symbol check")
{
    std::vector<double> origin{0.0};
    for (double xi : {0.5, 1.0, 2.0})
    {
        for (double s : {0.25, 0.5, 0.75})
        {
            auto r = frac_laplacian_pv(make_cosine(xi), origin, {1, s}, 1e-8);
            double const symbol = std::pow(xi, 2 * s);
            CAPTURE(xi);
            CAPTURE(s);
            CHECK(std::fabs(r.value - symbol) <= 1e-6 * symbol);
            CHECK(std::fabs(r.value - symbol) <= r.err_estimate);
        }
    }
}

TEST_CASE("closed forms in one dimension")
{
    auto g = make_gauss();
    auto r = make_rational();
    for (double s : {0.25, 0.5, 0.75})
    {
        FracParams const p(1, s);
        for (double x : {0.0, 0.7, 2.5})
        {
            std::vector<double> x0{x};
            double const tol = 1e-8;
            auto gv = frac_laplacian_pv(g, x0, p, tol);
            auto rv = frac_laplacian_pv(r, x0, p, tol);
            CAPTURE(s);
            CAPTURE(x);
            CHECK(std::fabs(gv.value - g.known_fractional_laplacian(x0, p)) <= tol);
            CHECK(std::fabs(rv.value - r.known_fractional_laplacian(x0, p)) <= tol);
        }
    }
}

TEST_CASE("higher dimensions")
{
    auto g = make_gauss();
    std::vector<double> x2{0.3, 0.4};
    auto v2 = frac_laplacian_pv(g, x2, {2, 0.5}, 1e-6);
    CHECK(std::fabs(v2.value - 1.20221398287431475) <= 1e-6);

    std::vector<double> x3{0.0, 0.3, 0.4};
    auto v3 = frac_laplacian_pv(g, x3, {3, 0.5}, 1e-4);
    CHECK(std::fabs(v3.value - 1.60730433999655605) <= 1e-4);

    auto c = make_cosine(1.5);
    std::vector<double> y2{0.2, -0.7};
    auto cv = frac_laplacian_pv(c, y2, {2, 0.4}, 1e-3);
    CHECK(std::fabs(cv.value - c.known_fractional_laplacian(y2, {2, 0.4})) <= 1e-3);

    std::vector<double> x4(4, 0.0);
    CHECK_THROWS_AS(frac_laplacian_pv(g, x4, {4, 0.5}, 1e-6), DomainError);
    CHECK_THROWS_AS(frac_laplacian_pv(g, x2, {1, 0.5}, 1e-6), DomainError);
    CHECK_THROWS_AS(frac_laplacian_pv(g, x2, {2, 0.5}, 0), DomainError);
}

TEST_CASE("missing metadata falls back to finite differences")
{
    auto g = make_gauss();
    g.laplacian = nullptr;
    g.fourth_derivative_bound.reset();
    g.second_derivative_bound.reset();
    std::vector<double> x0{0.7};
    FracParams const p(1, 0.4);
    auto r = frac_laplacian_pv(g, x0, p, 1e-6);
    CHECK(std::fabs(r.value - make_gauss().known_fractional_laplacian(x0, p)) <= 1e-6);
}

TEST_CASE("translation equivariance")
{
    auto g = make_gauss();
    double const tol = 1e-8;
    for (double s : {0.3, 0.8})
    {
        FracParams const p(1, s);
        for (double a : {-1.3, 0.6})
        {
            std::vector<double> x0{0.4};
            std::vector<double> moved{0.4 + a};
            double const base = frac_laplacian_pv(g, x0, p, tol).value;
            double const trans = frac_laplacian_pv(translate(g, a), moved, p, tol).value;
            CHECK(std::fabs(base - trans) <= 2 * tol);
        }
    }
}

TEST_CASE("scaling")
{
    auto r = make_rational();
    double const tol = 1e-8;
    for (double s : {0.25, 0.75})
    {
        FracParams const p(1, s);
        for (double lambda : {0.5, 2.0})
        {
            std::vector<double> x0{0.6};
            std::vector<double> lx0{lambda * 0.6};
            double const lhs = frac_laplacian_pv(dilate(r, lambda), x0, p, tol).value;
            double const rhs
                = std::pow(lambda, 2 * s) * frac_laplacian_pv(r, lx0, p, tol).value;
            CAPTURE(s);
            CAPTURE(lambda);
            CHECK(std::fabs(lhs - rhs) <= 2 * tol);
        }
    }
}

TEST_CASE("linearity")
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> coeff(-2, 2);
    std::uniform_real_distribution<double> where(-2, 2);
    auto g = make_gauss();
    auto r = make_rational();
    double const tol = 1e-8;
    for (int trial = 0; trial < 5; ++trial)
    {
        double const a = coeff(rng);
        double const b = coeff(rng);
        std::vector<double> x0{where(rng)};
        FracParams const p(1, 0.45);
        auto w = combine(a, g, b, r);
        double const lhs = frac_laplacian_pv(w, x0, p, tol).value;
        double const rhs = a * frac_laplacian_pv(g, x0, p, tol).value
                           + b * frac_laplacian_pv(r, x0, p, tol).value;
        CHECK(std::fabs(lhs - rhs) <= (1 + std::fabs(a) + std::fabs(b)) * tol);
    }
}

TEST_CASE("extrapolation helpers")
{
    CHECK(centred_difference_factor(0) == 1);
    CHECK(centred_difference_factor(2) == doctest::Approx(1));
    CHECK(centred_difference_factor(0.5) == doctest::Approx((std::sqrt(1.25) - std::sqrt(0.75)) / 0.25));

    auto e = trace_exponents(0.25, 4);
    REQUIRE(e.size() == 4);
    CHECK(e[0] == 1.5);
    CHECK(e[1] == 2);
    CHECK(e[2] == 3.5);
    CHECK(e[3] == 4);
    auto half = trace_exponents(0.5, 3);
    CHECK(half == std::vector<double>{1, 2, 3});
    auto near_one = trace_exponents(0.99, 3);
    for (double v : near_one)
        CHECK(v > 0.05);

    std::vector<double> heights{0.2, 0.1, 0.05, 0.025};
    auto exps = trace_exponents(0.3, 3);
    auto w = extrapolation_weights(heights, exps);
    double sum = 0;
    for (double v : w)
        sum += v;
    CHECK(sum == doctest::Approx(1).epsilon(1e-12));
    for (double pexp : exps)
    {
        double moment = 0;
        for (std::size_t i = 0; i < heights.size(); ++i)
            moment += w[i] * std::pow(heights[i], pexp);
        CHECK(std::fabs(moment) <= 1e-12);
    }
    CHECK_THROWS_AS(extrapolation_weights(heights, std::vector<double>{1.0}), DomainError);
}

TEST_CASE("neumann trace examples")
{
    std::vector<double> origin{0.0};
    auto const heights = default_trace_heights();
    auto c = neumann_trace(make_constant(2), origin, {1, 0.4}, heights, 1e-5);
    CHECK(std::fabs(c.value) <= 1e-5);

    auto half = neumann_trace(make_cosine(1), origin, {1, 0.5}, heights, 1e-5);
    CHECK(std::fabs(half.value - 1) <= 1e-2);
    REQUIRE(half.raw_sequence.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
    {
        double const y = heights[i];
        CHECK(half.raw_sequence[i].first == y);
        // d/dy e^{-y} over the stencil [3y/4, 5y/4]
        double const expected = (std::exp(-1.25 * y) - std::exp(-0.75 * y)) / (0.5 * y);
        CHECK(half.raw_sequence[i].second == doctest::Approx(expected).epsilon(1e-4));
    }
    CHECK(half.extrapolation_residual >= 0);
    CHECK(half.monotone);

    FracParams const quarter(1, 0.25);
    auto pv = frac_laplacian_pv(make_cosine(1), origin, quarter, 1e-8);
    auto trace = neumann_trace(make_cosine(1), origin, quarter, heights, 1e-5);
    CHECK(std::fabs(trace.value - pv.value) <= 1e-2 * std::fabs(pv.value));
}

TEST_CASE("neumann trace input validation")
{
    std::vector<double> origin{0.0};
    auto g = make_gauss();
    FracParams const p(1, 0.5);
    CHECK_THROWS_AS(neumann_trace(g, origin, p, std::vector<double>{0.2, 0.1}, 1e-5), DomainError);
    CHECK_THROWS_AS(neumann_trace(g, origin, p, std::vector<double>{0.2, 0.15, 0.05}, 1e-5),
                    DomainError);
    CHECK_THROWS_AS(neumann_trace(g, origin, p, std::vector<double>{0.2, 0.1, 0.0}, 1e-5),
                    DomainError);
    CHECK_THROWS_AS(neumann_trace(g, origin, p, default_trace_heights(), -1), DomainError);
}

TEST_CASE("consistency report examples")
{
    std::vector<double> origin{0.0};
    ConsistencyConfig config;
    auto c = consistency_report(make_constant(1), origin, {1, 0.5}, config);
    CHECK(c.pv.value == 0);
    CHECK(std::fabs(c.trace.value) <= config.trace_tol);
    CHECK(c.abs_discrepancy == std::fabs(c.trace.value));

    auto cs = consistency_report(make_cosine(1), origin, {1, 0.5}, config);
    CHECK(cs.rel_discrepancy <= 1e-2);
    CHECK_FALSE(cs.extension_check);

    config.mc_samples = 50000;
    config.seed = 3;
    std::vector<double> x0{0.7};
    auto g = consistency_report(make_gauss(), x0, {1, 0.3}, config);
    CHECK(g.rel_discrepancy <= 2e-2);
    REQUIRE(g.extension_check);
    auto const& check = *g.extension_check;
    CHECK(check.y == config.heights.front());
    CHECK(std::fabs(check.monte_carlo.mean - check.quadrature.value)
          <= 4 * check.monte_carlo.std_error + 1e-6);
}
