// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fraclap/kernel.hpp
//! Poisson-type kernel of the s-harmonic extension and its convolution.
//---------------------------------------------------------------------------//
#pragma once

#include <span>
#include <vector>

#include "fraclap/boundary_function.hpp"
#include "fraclap/quadrature.hpp"
#include "fraclap/special_functions.hpp"

namespace fraclap
{
//! Point (x, y) of the closed upper half-space R^n x [0, inf).
struct HalfSpacePoint
{
    std::vector<double> x;
    double y = 0;
};

/*!
 * K_y(x) = C_{n,s} y^{2s} / (|x|^2 + y^2)^{n/2 + s}.
 *
 * Switches to logarithms when |x| or y is extreme.
 */
double poisson_kernel(std::span<double const> offset, double y, FracParams const& p);

//! K_y as a function of r = |x|.
double poisson_kernel_radial(double r, double y, FracParams const& p);

//! Total mass of K_y, integrated numerically (radially for n >= 2). n <= 3.
QuadResult kernel_mass(double y, FracParams const& p, double tol);

/*!
 * U(x0, y0) = int K_{y0}(x0 - x) u(x) dx by adaptive quadrature, n <= 3.
 *
 * The integral is truncated at a radius where the tail bound from u's tail
 * model is at most tol / 2; that bound is included in err_estimate.
 * Requires y0 > 0.
 */
QuadResult extension_quadrature(BoundaryFunction const& u,
                                HalfSpacePoint const& at,
                                FracParams const& p,
                                double tol,
                                QuadOptions const& opts = {});

//! As extension_quadrature, but returns u(x0) exactly (zero error) at y = 0.
QuadResult extension(BoundaryFunction const& u,
                     HalfSpacePoint const& at,
                     FracParams const& p,
                     double tol,
                     QuadOptions const& opts = {});

//! Radius beyond which extension_quadrature drops the integral.
double extension_truncation_radius(BoundaryFunction const& u,
                                   HalfSpacePoint const& at,
                                   FracParams const& p,
                                   double tol);

//! Throws DomainError unless x has n coordinates and n <= max_n.
void check_dimension(std::span<double const> x, FracParams const& p, int max_n);

}  // namespace fraclap
