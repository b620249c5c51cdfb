// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file boundary_function.cpp
//---------------------------------------------------------------------------//
#include "fraclap/boundary_function.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fraclap/errors.hpp"
#include "fraclap/random.hpp"

namespace fraclap
{
namespace
{
template<class... Ts>
struct Overloaded : Ts...
{
    using Ts::operator()...;
};
template<class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;
}  // namespace

double euclidean_norm(std::span<double const> x)
{
    double scale = 0;
    for (double v : x)
        scale = std::max(scale, std::fabs(v));
    if (scale == 0)
        return 0;
    double sum = 0;
    for (double v : x)
        sum += (v / scale) * (v / scale);
    return scale * std::sqrt(sum);
}

//---------------------------------------------------------------------------//
TailEstimate tail_integral(BoundaryFunction const& u,
                           std::span<double const> x0,
                           double radius,
                           PowerLawWeight const& w)
{
    if (!(radius > 0) || !(w.alpha > 0) || w.n < 1)
    {
        throw DomainError("tail_integral: invalid radius or weight");
    }
    // Integral of the power-law majorant over |z| > R
    double const mass = w.coeff * unit_sphere_area(w.n)
                        * std::pow(radius, -w.alpha) / w.alpha;
    double const crude = u.bound * mass;

    return std::visit(
        Overloaded{
            [&](BoundedTail const&) { return TailEstimate{0, crude}; },
            [&](ConstantTail const& c) {
                if (w.exact)
                    return TailEstimate{c.value * mass, 0};
                return TailEstimate{0, std::fabs(c.value) * mass};
            },
            [&](EnvelopeTail const& e) {
                double const gap = radius - euclidean_norm(x0);
                if (gap <= 0)
                    return TailEstimate{0, crude};
                return TailEstimate{0, std::min(u.bound, e.envelope(gap)) * mass};
            },
            [&](HarmonicTail const& h) {
                // Second mean value theorem along x_1-lines: each half-line on
                // which the weight decreases from g0 contributes at most
                // 2 |amplitude| g0 / |frequency|.
                double const factor
                    = 4 * std::fabs(h.amplitude) / std::fabs(h.frequency);
                double const g_at_r = w.coeff * std::pow(radius, -(w.n + w.alpha));
                double sum = g_at_r * unit_ball_volume(w.n - 1)
                             * std::pow(radius, w.n - 1);
                if (w.n >= 2)
                {
                    sum += w.coeff * unit_sphere_area(w.n - 1)
                           * std::pow(radius, -1 - w.alpha) / (1 + w.alpha);
                }
                return TailEstimate{0, std::min(crude, factor * sum)};
            },
        },
        u.tail);
}

double truncation_radius(BoundaryFunction const& u,
                         std::span<double const> x0,
                         PowerLawWeight const& weight,
                         double target,
                         double r_start)
{
    if (!(target > 0) || !(r_start > 0))
    {
        throw DomainError("truncation_radius: target and start must be positive");
    }
    auto bound_at = [&](double r) {
        return tail_integral(u, x0, r, weight).bound;
    };
    if (bound_at(r_start) <= target)
        return r_start;

    double hi = r_start;
    while (bound_at(hi) > target)
    {
        hi *= 2;
        if (hi > 1e250)
        {
            throw NumericalError("truncation_radius: tail bound does not reach "
                                 "the requested target");
        }
    }
    double lo = hi / 2;
    while (hi > 1.01 * lo)
    {
        double const mid = std::sqrt(lo * hi);
        (bound_at(mid) > target ? lo : hi) = mid;
    }
    return hi;
}

std::size_t count_bound_violations(BoundaryFunction const& u,
                                   int n,
                                   std::size_t samples,
                                   std::uint64_t seed)
{
    RandomStream rng(seed);
    std::vector<double> x(static_cast<std::size_t>(n));
    std::size_t violations = 0;
    for (std::size_t i = 0; i < samples; ++i)
    {
        // Mix of scales so both the core and the far field are visited
        double const scale = std::pow(10.0, static_cast<double>(i % 6) - 1);
        for (auto& xi : x)
            xi = scale * rng.normal();
        double const value = u(x);
        if (!std::isfinite(value) || std::fabs(value) > u.bound)
            ++violations;
    }
    return violations;
}

}  // namespace fraclap
