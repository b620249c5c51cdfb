// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bessel.cpp
//---------------------------------------------------------------------------//
#include "fraclap/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fraclap/errors.hpp"
#include "fraclap/special_functions.hpp"

namespace fraclap
{
namespace
{
void check_start(double y0, double s, char const* who)
{
    if (!(y0 > 0) || !std::isfinite(y0))
    {
        throw DomainError(std::string(who) + ": start y0 must be positive");
    }
    if (!(s > 0 && s < 1))
    {
        throw DomainError(std::string(who) + ": order s must lie in (0, 1)");
    }
}
}  // namespace

//---------------------------------------------------------------------------//
double hitting_density(double t, double y0, double s)
{
    check_start(y0, s, "hitting_density");
    if (!(t > 0))
        return 0;
    double const u = y0 * y0 / (2 * t);
    // Log form keeps u^s e^{-u} finite for extreme t.
    return std::exp(s * std::log(u) - u - std::log(t) - std::log(gamma(s)));
}

QuadResult hitting_mass(double y0, double s, double tol)
{
    check_start(y0, s, "hitting_mass");
    if (!(tol > 0))
        throw DomainError("hitting_mass: tol must be positive");
    // With t = e^v the integrand is c e^{-s v} exp(-a e^{-v}), a = y0^2/2;
    // beyond v = b the mass is at most c e^{-s b} / s.
    double const a = 0.5 * y0 * y0;
    double const c = std::pow(a, s) / gamma(s);
    double const lower = std::log(a) - 5;
    double const upper = std::max(lower + 1, std::log(2 * c / (s * tol)) / s);
    double const tail = c * std::exp(-s * upper) / s;
    std::vector<double> breaks;
    for (double v = lower; v < upper; v += 4)
        breaks.push_back(v);
    breaks.push_back(upper);
    auto integrand = [&](double v) {
        double const t = std::exp(v);
        return hitting_density(t, y0, s) * t;
    };
    QuadResult result = integrate_adaptive(integrand, breaks, 0.5 * tol);
    result.err_estimate += tail;
    return result;
}

std::vector<double>
hitting_cdf(std::span<double const> sorted_times, double y0, double s, double tol)
{
    check_start(y0, s, "hitting_cdf");
    std::vector<double> cdf(sorted_times.size());
    double const piece_tol
        = tol / static_cast<double>(std::max<std::size_t>(1, sorted_times.size()));
    auto integrand = [&](double v) {
        double const t = std::exp(v);
        return hitting_density(t, y0, s) * t;
    };
    // Mass below this point is below e^{-140}.
    double prev = std::log(0.5 * y0 * y0) - 5;
    double acc = 0;
    double last_t = 0;
    for (std::size_t i = 0; i < sorted_times.size(); ++i)
    {
        double const t = sorted_times[i];
        if (t < last_t)
            throw DomainError("hitting_cdf: times must be sorted");
        last_t = t;
        if (!std::isfinite(t))
        {
            acc = 1;
        }
        else if (t > 0 && std::log(t) > prev)
        {
            double const v = std::log(t);
            acc += integrate_adaptive(integrand, prev, v, piece_tol).value;
            prev = v;
        }
        cdf[i] = std::min(acc, 1.0);
    }
    return cdf;
}

//---------------------------------------------------------------------------//
double gamma_sample_large_shape(double shape, RandomStream& rng)
{
    if (!(shape >= 1) || !std::isfinite(shape))
    {
        throw DomainError("gamma_sample_large_shape: shape must be >= 1");
    }
    double const d = shape - 1.0 / 3;
    double const c = 1 / std::sqrt(9 * d);
    while (true)
    {
        double z;
        double v;
        do
        {
            z = rng.normal();
            v = 1 + c * z;
        } while (v <= 0);
        v = v * v * v;
        double const u = rng.uniform();
        double const z2 = z * z;
        if (u < 1 - 0.0331 * z2 * z2
            || std::log(u) < 0.5 * z2 + d * (1 - v + std::log(v)))
        {
            return d * v;
        }
    }
}

double gamma_sample(double shape, RandomStream& rng)
{
    if (!(shape > 0 && shape < 1))
    {
        throw DomainError("gamma_sample: shape must lie in (0, 1), got "
                          + std::to_string(shape));
    }
    double const boosted = gamma_sample_large_shape(shape + 1, rng);
    return boosted * std::pow(rng.uniform(), 1 / shape);
}

double hitting_time_from_gamma(double y0, double g)
{
    constexpr double largest = std::numeric_limits<double>::max();
    if (!(g > 0))
        return largest;
    double const t = y0 * y0 / (2 * g);
    return std::isfinite(t) ? t : largest;
}

HittingTimeSample sample_hitting_time(double y0, double s, RandomStream& rng)
{
    if (y0 == 0 && s > 0 && s < 1)
        return {0};
    check_start(y0, s, "sample_hitting_time");
    return {hitting_time_from_gamma(y0, gamma_sample(s, rng))};
}

//---------------------------------------------------------------------------//
PathConfig PathConfig::for_start(double y0, double dt)
{
    PathConfig cfg;
    cfg.dt = dt;
    cfg.eps_boundary = 1e-4 * y0;
    return cfg;
}

void PathConfig::validate() const
{
    if (!(dt > 0) || !(eps_boundary > 0) || !(substep_factor >= 1) || max_steps == 0)
    {
        throw DomainError("PathConfig: need dt > 0, eps_boundary > 0, "
                          "substep_factor >= 1 and max_steps > 0");
    }
}

BesselStepper::BesselStepper(double y0, double s, PathConfig const& cfg)
    : cfg_(cfg), drift_coeff_(0.5 * (1 - 2 * s)), value_(y0)
{
    check_start(y0, s, "BesselStepper");
    cfg_.validate();
    if (!(y0 > cfg_.eps_boundary))
    {
        throw DomainError("BesselStepper: y0 must exceed eps_boundary");
    }
}

auto BesselStepper::advance(double normal_draw) -> Step
{
    // The drift (1 - 2s) / (2y) stiffens near zero.
    double const dt = value_ < 10 * cfg_.eps_boundary ? cfg_.dt / cfg_.substep_factor
                                                      : cfg_.dt;
    double const next = value_ + drift_coeff_ / value_ * dt + std::sqrt(dt) * normal_draw;
    ++steps_;
    if (next <= cfg_.eps_boundary)
    {
        double const fraction = (value_ - cfg_.eps_boundary) / (value_ - next);
        time_ += fraction * dt;
        value_ = 0;
        absorbed_ = true;
        return {dt, true, fraction};
    }
    time_ += dt;
    value_ = next;
    return {dt, false, 1.0};
}

//---------------------------------------------------------------------------//
BesselPath simulate_path(double y0, double s, PathConfig const& cfg, RandomStream& rng)
{
    BesselStepper stepper(y0, s, cfg);
    BesselPath path;
    path.times.push_back(0);
    path.values.push_back(y0);
    while (!stepper.absorbed())
    {
        if (stepper.exhausted())
        {
            throw BudgetError("simulate_path: not absorbed within "
                              + std::to_string(cfg.max_steps) + " steps");
        }
        stepper.advance(rng.normal());
        path.times.push_back(stepper.time());
        path.values.push_back(stepper.value());
    }
    path.absorbed_at = stepper.time();
    return path;
}

AbsorptionResult simulate_absorption(double y0,
                                     double s,
                                     PathConfig const& cfg,
                                     RandomStream& rng)
{
    BesselStepper stepper(y0, s, cfg);
    while (!stepper.absorbed() && !stepper.exhausted())
    {
        stepper.advance(rng.normal());
    }
    return {stepper.absorbed(), stepper.time(), stepper.value(), stepper.steps()};
}

}  // namespace fraclap
