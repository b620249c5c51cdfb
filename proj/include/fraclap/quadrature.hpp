// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fraclap/quadrature.hpp
//! Globally adaptive Gauss-Kronrod integration on panelled intervals.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fraclap
{
//! Value plus a posteriori error bound of a deterministic quadrature.
struct QuadResult
{
    double value = 0;
    double err_estimate = 0;
    std::size_t evaluations = 0;
};

struct QuadOptions
{
    //! Integrand calls allowed before QuadratureError is thrown
    std::size_t max_evaluations = 100'000'000;
};

using ScalarFunction = std::function<double(double)>;

/*!
 * Integrate f over [breakpoints.front(), breakpoints.back()].
 *
 * Each initial panel is integrated with the 7/15 Gauss-Kronrod pair and
 * |K15 - G7| is taken as its error. The panel with the largest error is
 * bisected until the summed error is below abs_tol. Panel values are summed
 * in order of their left endpoint, so the result does not depend on the order
 * in which refinement happened.
 *
 * Throws QuadratureError when the budget is exhausted or every remaining
 * panel is at the roundoff floor while the tolerance is still unmet.
 */
QuadResult integrate_adaptive(ScalarFunction const& f,
                              std::span<double const> breakpoints,
                              double abs_tol,
                              QuadOptions const& opts = {});

//! Single-panel convenience overload.
QuadResult integrate_adaptive(ScalarFunction const& f,
                              double a,
                              double b,
                              double abs_tol,
                              QuadOptions const& opts = {});

//---------------------------------------------------------------------------//
/*!
 * Breakpoints for a radial integral over [r_min, r_max].
 *
 * Panel widths start at inner_scale / 4 and double with distance (geometric
 * grading toward r_min). While r < resolved_extent, or everywhere when
 * oscillatory is set, widths are capped at feature_scale.
 */
struct RadialPanelling
{
    double r_min = 0;
    double r_max = 1;
    double inner_scale = 1;
    double feature_scale = 1;
    double resolved_extent = 0;
    bool oscillatory = false;
};

std::vector<double> radial_breakpoints(RadialPanelling const& spec);

//---------------------------------------------------------------------------//
//! Integrand on the unit sphere S^{n-1}, receiving a unit vector.
using SphereFunction = std::function<double(std::span<double const>)>;

/*!
 * Integral of g over the unit sphere S^{n-1} for n in {1, 2, 3}.
 *
 * For n = 1 the "sphere" is {-1, +1}. Angular panels are sized so that the
 * image of a panel on the sphere of radius `radius` is no longer than
 * feature_scale. The evaluation count is added to `evaluations`.
 */
double integrate_sphere(int n,
                        SphereFunction const& g,
                        double radius,
                        double feature_scale,
                        double abs_tol,
                        std::size_t& evaluations,
                        QuadOptions const& opts = {});

}  // namespace fraclap
