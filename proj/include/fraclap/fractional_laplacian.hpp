// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fraclap/fractional_laplacian.hpp
//! The two sides of the extension theorem: the principal-value integral and
//! the weighted Neumann trace of the extension.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fraclap/boundary_function.hpp"
#include "fraclap/quadrature.hpp"
#include "fraclap/special_functions.hpp"
#include "fraclap/stochastic_extension.hpp"

namespace fraclap
{
/*!
 * (-Delta)^s u(x0) from the symmetrized second-difference form
 * \f[
     \frac{A_{n,s}}{2} \int \frac{2u(x_0) - u(x_0+z) - u(x_0-z)}{|z|^{n+2s}} dz.
   \f]
 *
 * The ball |z| < delta is replaced by its second-order Taylor term with the
 * fourth-order remainder bounded, the annulus delta < |z| < R is integrated
 * adaptively, and beyond R the 2u(x0) part is exact while the rest is
 * bounded via u's tail model. n <= 3.
 */
QuadResult frac_laplacian_pv(BoundaryFunction const& u,
                             std::span<double const> x0,
                             FracParams const& p,
                             double tol,
                             QuadOptions const& opts = {});

struct NeumannTraceResult
{
    //! Extrapolated -d_s lim y^{1-2s} dU/dy
    double value = 0;
    //! (y, y^{1-2s} dU/dy(x0, y)) for each requested height
    std::vector<std::pair<double, double>> raw_sequence;
    //! Change of the extrapolated value when the last height is added
    double extrapolation_residual = 0;
    //! Propagated bound from the extension quadratures
    double quadrature_error = 0;
    //! Decay exponent of the raw sequence estimated from its last three terms
    std::optional<double> estimated_exponent;
    //! Exponents eliminated by the extrapolation
    std::vector<double> exponents;
    //! False when the raw sequence is not monotone (diagnostic only)
    bool monotone = true;
};

inline std::vector<double> default_trace_heights()
{
    return {0.2, 0.1, 0.05, 0.025};
}

/*!
 * Weighted Neumann trace of the extension at x0.
 *
 * For each height y, dU/dy is a centred difference with step y/4 of
 * extension_quadrature values; the scaled sequence y^{1-2s} dU/dy is fitted
 * by c0 + sum_j c_j y^{p_j} with p_j running through 2-2s, 2, 4-2s, 4, ...
 * (the small-y expansion of the extension). The step-proportional stencil
 * rescales the y^{2s} mode by a known factor, which is divided out. The
 * extension quadrature tolerance per height is chosen so that the
 * propagated error stays below tol.
 */
NeumannTraceResult neumann_trace(BoundaryFunction const& u,
                                 std::span<double const> x0,
                                 FracParams const& p,
                                 std::span<double const> heights,
                                 double tol,
                                 QuadOptions const& opts = {});

//! Multiplicative bias of the centred difference with step y/4 on y^{power}.
double centred_difference_factor(double power);

/*!
 * Extrapolate values f(y_i) = c0 + sum_j c_j y_i^{p_j} to y = 0 using
 * exactly heights.size() - 1 exponents; returns the weights w with
 * c0 = sum_i w_i f(y_i).
 */
std::vector<double> extrapolation_weights(std::span<double const> heights,
                                          std::span<double const> exponents);

//! Exponents 2k - 2s and 2k (k >= 1) in increasing order, near-duplicates
//! removed, first `count` of them.
std::vector<double> trace_exponents(double s, std::size_t count);

//---------------------------------------------------------------------------//
struct ConsistencyConfig
{
    double pv_tol = 1e-8;
    double trace_tol = 1e-5;
    std::vector<double> heights = default_trace_heights();
    //! Monte Carlo cross-check of the extension at the largest height;
    //! zero disables it
    std::size_t mc_samples = 0;
    std::uint64_t seed = 1;
};

struct ExtensionCrossCheck
{
    double y = 0;
    QuadResult quadrature;
    MCEstimate monte_carlo;
};

struct ConsistencyReport
{
    QuadResult pv;
    NeumannTraceResult trace;
    std::optional<ExtensionCrossCheck> extension_check;
    double abs_discrepancy = 0;
    //! abs_discrepancy / max(1, |pv|)
    double rel_discrepancy = 0;
};

ConsistencyReport consistency_report(BoundaryFunction const& u,
                                     std::span<double const> x0,
                                     FracParams const& p,
                                     ConsistencyConfig const& config);

}  // namespace fraclap
