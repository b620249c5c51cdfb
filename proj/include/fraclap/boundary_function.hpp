// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fraclap/boundary_function.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "fraclap/special_functions.hpp"

namespace fraclap
{
//---------------------------------------------------------------------------//
// Tail models: what is known about u far from the evaluation point. They are
// used to bound integrals of u against radially decreasing power-law weights
// outside a truncation ball.
//---------------------------------------------------------------------------//

//! Only |u| <= bound is known.
struct BoundedTail
{
};

//! u is identically equal to a constant.
struct ConstantTail
{
    double value;
};

//! |u(x)| <= envelope(|x|) with envelope nonincreasing.
struct EnvelopeTail
{
    std::function<double(double)> envelope;
};

//! u(x) = amplitude * cos(frequency * x_1 + phase).
struct HarmonicTail
{
    double frequency;
    double amplitude;
};

using TailModel
    = std::variant<BoundedTail, ConstantTail, EnvelopeTail, HarmonicTail>;

using PointFunction = std::function<double(std::span<double const>)>;

//---------------------------------------------------------------------------//
/*!
 * Bounded boundary data u: R^n -> R together with the metadata the
 * integrators and the test oracles use.
 *
 * Smoothness (C^2) is an assumption carried by each registry entry and is
 * not checked.
 */
struct BoundaryFunction
{
    std::string label;
    PointFunction eval;
    //! |u(x)| <= bound everywhere
    double bound = 1;
    //! Length over which u changes appreciably (quadrature panel cap)
    double feature_scale = 1;
    TailModel tail = BoundedTail{};

    //! Sup over the domain of |second / fourth directional derivative|
    std::optional<double> second_derivative_bound;
    std::optional<double> fourth_derivative_bound;
    //! Exact Laplacian, when known
    PointFunction laplacian;

    //! Oracles for tests: closed-form extension U(x, y) and (-Delta)^s u
    std::function<double(std::span<double const>, double, FracParams const&)>
        known_extension;
    std::function<double(std::span<double const>, FracParams const&)>
        known_fractional_laplacian;
    //! u is an eigenfunction with (-Delta)^s u = |frequency|^{2s} u
    std::optional<double> fourier_frequency;

    double operator()(std::span<double const> x) const { return eval(x); }

    bool oscillatory() const
    {
        return std::holds_alternative<HarmonicTail>(tail);
    }
};

//---------------------------------------------------------------------------//
/*!
 * Estimate of a truncated-tail integral
 *   T = int_{|z| > R} g(|z|) u(x0 + z) dz
 * for a radially nonincreasing weight g(r) <= coeff * r^{-(n + alpha)}.
 *
 * `value` is the part of T known exactly (nonzero only for constant data
 * under an exact power law) and `bound` bounds |T - value|.
 */
struct TailEstimate
{
    double value = 0;
    double bound = 0;
};

struct PowerLawWeight
{
    int n;
    double coeff;
    double alpha;
    //! g equals coeff * r^{-(n+alpha)} exactly, not just bounded by it
    bool exact = false;
};

TailEstimate tail_integral(BoundaryFunction const& u,
                           std::span<double const> x0,
                           double radius,
                           PowerLawWeight const& weight);

/*!
 * Smallest radius (up to a factor 1.01) at which tail_integral's bound drops
 * to target, searched upward from r_start.
 */
double truncation_radius(BoundaryFunction const& u,
                         std::span<double const> x0,
                         PowerLawWeight const& weight,
                         double target,
                         double r_start);

//! Spot-check |u| <= bound on random points of R^n; returns the number of
//! violations.
std::size_t count_bound_violations(BoundaryFunction const& u,
                                   int n,
                                   std::size_t samples,
                                   std::uint64_t seed);

double euclidean_norm(std::span<double const> x);

}  // namespace fraclap
