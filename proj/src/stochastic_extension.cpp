// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file stochastic_extension.cpp
//---------------------------------------------------------------------------//
#include "fraclap/stochastic_extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "fraclap/errors.hpp"
#include "fraclap/parallel.hpp"

namespace fraclap
{
namespace
{
// Welford accumulator; chunks are merged with Chan's pairwise update.
struct RunningStats
{
    std::size_t count = 0;
    double mean = 0;
    double m2 = 0;
    double min = std::numeric_limits<double>::infinity();
    double max = -std::numeric_limits<double>::infinity();

    void push(double x)
    {
        ++count;
        double const delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
        min = std::min(min, x);
        max = std::max(max, x);
    }

    void merge(RunningStats const& other)
    {
        if (other.count == 0)
            return;
        if (count == 0)
        {
            *this = other;
            return;
        }
        auto const na = static_cast<double>(count);
        auto const nb = static_cast<double>(other.count);
        double const total = na + nb;
        double const delta = other.mean - mean;
        mean += delta * (nb / total);
        m2 += other.m2 + delta * delta * (na * nb / total);
        count += other.count;
        min = std::min(min, other.min);
        max = std::max(max, other.max);
    }
};

MCEstimate finish(RunningStats const& stats, std::uint64_t seed)
{
    MCEstimate est;
    est.n_samples = stats.count;
    est.seed = seed;
    // The sample mean lies in [min, max]; rounding must not push it out.
    est.mean = std::clamp(stats.mean, stats.min, stats.max);
    if (stats.count > 1)
    {
        double const var = std::max(0.0, stats.m2) / static_cast<double>(stats.count - 1);
        est.std_error = std::sqrt(var / static_cast<double>(stats.count));
    }
    return est;
}

std::size_t chunk_count(std::size_t n_samples)
{
    return (n_samples + mc_chunk_size - 1) / mc_chunk_size;
}

std::size_t chunk_length(std::size_t chunk, std::size_t n_samples)
{
    return std::min(mc_chunk_size, n_samples - chunk * mc_chunk_size);
}

void check_mc_inputs(BoundaryFunction const& u,
                     HalfSpacePoint const& at,
                     FracParams const& p,
                     std::size_t n_samples,
                     char const* who)
{
    if (!u.eval)
        throw DomainError(std::string(who) + ": boundary function has no evaluator");
    if (!(at.y > 0) || !std::isfinite(at.y))
        throw DomainError(std::string(who) + ": height y must be positive");
    if (static_cast<int>(at.x.size()) != p.n())
        throw DomainError(std::string(who) + ": point dimension does not match n");
    if (n_samples < 2)
        throw DomainError(std::string(who) + ": need at least 2 samples");
}

enum Substream : std::uint64_t
{
    exit_time_stream = 0,
    horizontal_stream = 1,
};
}  // namespace

//---------------------------------------------------------------------------//
MCEstimate mc_extension(BoundaryFunction const& u,
                        HalfSpacePoint const& at,
                        FracParams const& p,
                        std::size_t n_samples,
                        std::uint64_t seed)
{
    check_mc_inputs(u, at, p, n_samples, "mc_extension");
    std::size_t const chunks = chunk_count(n_samples);
    std::vector<RunningStats> partial(chunks);

    parallel_for(chunks, [&](std::size_t c) {
        // Omega_2 drives the exit time, Omega_1 the horizontal motion.
        auto tau_rng = RandomStream::derive(seed, c, exit_time_stream);
        auto x_rng = RandomStream::derive(seed, c, horizontal_stream);
        std::vector<double> x(at.x.size());
        RunningStats stats;
        for (std::size_t i = 0, len = chunk_length(c, n_samples); i < len; ++i)
        {
            double const tau = sample_hitting_time(at.y, p.s(), tau_rng).t;
            double const sigma = std::sqrt(tau);
            for (std::size_t k = 0; k < x.size(); ++k)
                x[k] = at.x[k] + sigma * x_rng.normal();
            stats.push(u(x));
        }
        partial[c] = stats;
    });

    RunningStats total;
    for (auto const& s : partial)
        total.merge(s);
    return finish(total, seed);
}

//---------------------------------------------------------------------------//
PathwiseEstimate mc_extension_pathwise(BoundaryFunction const& u,
                                       HalfSpacePoint const& at,
                                       FracParams const& p,
                                       PathConfig const& cfg,
                                       std::size_t n_samples,
                                       std::uint64_t seed,
                                       UnabsorbedPolicy policy)
{
    check_mc_inputs(u, at, p, n_samples, "mc_extension_pathwise");
    cfg.validate();
    if (!(at.y > cfg.eps_boundary))
        throw DomainError("mc_extension_pathwise: y must exceed eps_boundary");

    struct ChunkResult
    {
        RunningStats stats;
        std::size_t unabsorbed = 0;
        std::size_t completed = 0;
        std::size_t steps = 0;
    };
    std::size_t const chunks = chunk_count(n_samples);
    std::vector<ChunkResult> partial(chunks);

    parallel_for(chunks, [&](std::size_t c) {
        auto y_rng = RandomStream::derive(seed, c, exit_time_stream);
        auto x_rng = RandomStream::derive(seed, c, horizontal_stream);
        std::size_t const n = at.x.size();
        std::vector<double> x(n);
        std::vector<double> dx(n);
        ChunkResult result;
        for (std::size_t i = 0, len = chunk_length(c, n_samples); i < len; ++i)
        {
            std::copy(at.x.begin(), at.x.end(), x.begin());
            BesselStepper stepper(at.y, p.s(), cfg);
            while (!stepper.absorbed() && !stepper.exhausted())
            {
                auto const step = stepper.advance(y_rng.normal());
                double const scale = std::sqrt(step.dt);
                for (std::size_t k = 0; k < n; ++k)
                    dx[k] = scale * x_rng.normal();
                for (std::size_t k = 0; k < n; ++k)
                    x[k] += step.fraction * dx[k];
            }
            result.steps += stepper.steps();
            if (!stepper.absorbed())
            {
                ++result.unabsorbed;
                if (policy == UnabsorbedPolicy::reject)
                    continue;
                double const rest
                    = sample_hitting_time(stepper.value(), p.s(), y_rng).t;
                double const sigma = std::sqrt(rest);
                for (std::size_t k = 0; k < n; ++k)
                    x[k] += sigma * x_rng.normal();
                ++result.completed;
            }
            result.stats.push(u(x));
        }
        partial[c] = result;
    });

    PathwiseEstimate out;
    RunningStats total;
    for (auto const& r : partial)
    {
        total.merge(r.stats);
        out.unabsorbed += r.unabsorbed;
        out.completed_exactly += r.completed;
        out.total_steps += r.steps;
    }
    if (total.count < 2)
    {
        throw BudgetError("mc_extension_pathwise: fewer than 2 paths absorbed "
                          "within max_steps");
    }
    out.estimate = finish(total, seed);
    return out;
}

//---------------------------------------------------------------------------//
double generator_apply(FieldFunction const& f,
                       HalfSpacePoint const& at,
                       FracParams const& p,
                       double h)
{
    if (!(h > 0))
        throw DomainError("generator_apply: step h must be positive");
    if (!(at.y > h))
        throw DomainError("generator_apply: stencil would leave the half-space (y <= h)");
    if (static_cast<int>(at.x.size()) != p.n())
        throw DomainError("generator_apply: point dimension does not match n");

    std::vector<double> x = at.x;
    double const y = at.y;
    double const centre = f(x, y);
    double const up = f(x, y + h);
    double const down = f(x, y - h);

    double laplacian = (up - 2 * centre + down) / (h * h);
    for (std::size_t k = 0; k < x.size(); ++k)
    {
        double const xk = x[k];
        x[k] = xk + h;
        double const fp = f(x, y);
        x[k] = xk - h;
        double const fm = f(x, y);
        x[k] = xk;
        laplacian += (fp - 2 * centre + fm) / (h * h);
    }
    double const dfdy = (up - down) / (2 * h);
    return (1 - 2 * p.s()) / (2 * y) * dfdy + 0.5 * laplacian;
}

GeneratorCheck generator_mc_check(FieldFunction const& f,
                                  HalfSpacePoint const& at,
                                  FracParams const& p,
                                  double t,
                                  std::size_t n_samples,
                                  std::uint64_t seed,
                                  std::size_t substeps)
{
    if (!(t > 0) || substeps == 0)
        throw DomainError("generator_mc_check: need t > 0 and substeps >= 1");
    if (!(at.y >= 5 * std::sqrt(t)))
        throw DomainError("generator_mc_check: y must be >= 5 sqrt(t)");
    if (static_cast<int>(at.x.size()) != p.n())
        throw DomainError("generator_mc_check: point dimension does not match n");
    if (n_samples < 2)
        throw DomainError("generator_mc_check: need at least 2 samples");

    double const f0 = f(at.x, at.y);
    double const eps = 1e-4 * at.y;
    double const dt = t / static_cast<double>(substeps);
    double const sqrt_dt = std::sqrt(dt);
    double const drift_coeff = 0.5 * (1 - 2 * p.s());

    struct ChunkResult
    {
        RunningStats stats;
        std::size_t hits = 0;
    };
    std::size_t const chunks = chunk_count(n_samples);
    std::vector<ChunkResult> partial(chunks);

    parallel_for(chunks, [&](std::size_t c) {
        auto y_rng = RandomStream::derive(seed, c, exit_time_stream);
        auto x_rng = RandomStream::derive(seed, c, horizontal_stream);
        std::vector<double> x(at.x.size());
        ChunkResult result;
        for (std::size_t i = 0, len = chunk_length(c, n_samples); i < len; ++i)
        {
            std::copy(at.x.begin(), at.x.end(), x.begin());
            double y = at.y;
            bool hit = false;
            for (std::size_t k = 0; k < substeps; ++k)
            {
                y += drift_coeff / y * dt + sqrt_dt * y_rng.normal();
                for (auto& xi : x)
                    xi += sqrt_dt * x_rng.normal();
                if (y <= eps)
                {
                    hit = true;
                    break;
                }
            }
            if (hit)
            {
                ++result.hits;
                continue;
            }
            result.stats.push((f(x, y) - f0) / t);
        }
        partial[c] = result;
    });

    GeneratorCheck out;
    RunningStats total;
    for (auto const& r : partial)
    {
        total.merge(r.stats);
        out.boundary_hits += r.hits;
    }
    if (total.count < 2)
        throw NumericalError("generator_mc_check: all samples hit the boundary");
    out.estimate = finish(total, seed);
    return out;
}

}  // namespace fraclap
