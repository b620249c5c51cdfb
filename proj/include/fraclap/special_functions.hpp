// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fraclap/special_functions.hpp
//---------------------------------------------------------------------------//
#pragma once

namespace fraclap
{
//---------------------------------------------------------------------------//
/*!
 * Ambient dimension n and fractional order s of a computation.
 *
 * Construction validates 1 <= n and 0 < s < 1. Quadrature-based routines
 * further restrict n <= 3 and check that themselves.
 */
class FracParams
{
  public:
    FracParams(int n, double s);

    int n() const noexcept { return n_; }
    double s() const noexcept { return s_; }

    //! n / 2 + s, the exponent of the kernel denominator
    double half_n_plus_s() const noexcept { return 0.5 * n_ + s_; }

  private:
    int n_;
    double s_;
};

//! Gamma function for positive finite arguments (Lanczos, g = 7).
double gamma(double x);

//! Gamma function on the whole real line except the poles 0, -1, -2, ...
double gamma_reflected(double x);

//! C_{n,s} = Gamma(s + n/2) / (pi^{n/2} Gamma(s)), the Poisson-type kernel
//! normalization.
double kernel_constant(FracParams const& p);

/*!
 * A_{n,s} = 4^s Gamma(n/2 + s) / (pi^{n/2} |Gamma(-s)|).
 *
 * With this constant the principal-value definition of (-Delta)^s has
 * Fourier symbol |xi|^{2s}.
 */
double pv_constant(FracParams const& p);

/*!
 * Constant d_s with (-Delta)^s u = -d_s lim_{y->0} y^{1-2s} dU/dy.
 *
 * Equal to A_{n,s} / (2 s C_{n,s}) = 2^{2s-1} Gamma(s) / Gamma(1-s); it does
 * not depend on n.
 */
double trace_constant(FracParams const& p);

//! Surface area of the unit sphere S^{d-1} in R^d (d >= 1; S^0 has "area" 2).
double unit_sphere_area(int d);

//! Volume of the unit ball in R^d (d >= 0; the 0-ball has volume 1).
double unit_ball_volume(int d);

}  // namespace fraclap
