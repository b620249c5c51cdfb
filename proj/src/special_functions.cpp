// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file special_functions.cpp
//---------------------------------------------------------------------------//
#include "fraclap/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fraclap/errors.hpp"

namespace fraclap
{
namespace
{
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coeffs = {
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7,
};

// Lanczos series, valid for x >= 1/2.
double lanczos_gamma(double x)
{
    double const z = x - 1;
    double sum = lanczos_coeffs[0];
    for (std::size_t i = 1; i < lanczos_coeffs.size(); ++i)
    {
        sum += lanczos_coeffs[i] / (z + static_cast<double>(i));
    }
    double const t = z + lanczos_g + 0.5;
    // Split the power so that t^{z+1/2} does not overflow before e^{-t}
    // brings it back.
    double const half_pow = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2 * std::numbers::pi) * half_pow * (half_pow * std::exp(-t))
           * sum;
}

bool is_nonpositive_integer(double x)
{
    return x <= 0 && x == std::floor(x);
}
}  // namespace

//---------------------------------------------------------------------------//
FracParams::FracParams(int n, double s) : n_(n), s_(s)
{
    if (n < 1)
    {
        throw DomainError("FracParams: dimension n must be >= 1, got "
                          + std::to_string(n));
    }
    if (!(s > 0 && s < 1))
    {
        throw DomainError("FracParams: order s must lie in (0, 1), got "
                          + std::to_string(s));
    }
}

//---------------------------------------------------------------------------//
double gamma(double x)
{
    if (!std::isfinite(x) || x <= 0)
    {
        throw DomainError("gamma: argument must be positive and finite, got "
                          + std::to_string(x));
    }
    if (x < 0.5)
    {
        // Reflection keeps the Lanczos series inside its accurate range.
        return std::numbers::pi
               / (std::sin(std::numbers::pi * x) * lanczos_gamma(1 - x));
    }
    return lanczos_gamma(x);
}

double gamma_reflected(double x)
{
    if (!std::isfinite(x))
    {
        throw DomainError("gamma_reflected: non-finite argument");
    }
    if (is_nonpositive_integer(x))
    {
        throw PoleError("gamma_reflected: pole at non-positive integer "
                        + std::to_string(x));
    }
    if (x > 0)
    {
        return gamma(x);
    }
    // Gamma(x) Gamma(1 - x) = pi / sin(pi x), with 1 - x > 1 here
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1 - x));
}

//---------------------------------------------------------------------------//
double kernel_constant(FracParams const& p)
{
    double const half_n = 0.5 * p.n();
    return gamma(p.s() + half_n)
           / (std::pow(std::numbers::pi, half_n) * gamma(p.s()));
}

double pv_constant(FracParams const& p)
{
    double const half_n = 0.5 * p.n();
    return std::pow(4.0, p.s()) * gamma(half_n + p.s())
           / (std::pow(std::numbers::pi, half_n)
              * std::fabs(gamma_reflected(-p.s())));
}

double trace_constant(FracParams const& p)
{
    double const s = p.s();
    return std::pow(2.0, 2 * s - 1) * gamma(s) / gamma(1 - s);
}

//---------------------------------------------------------------------------//
double unit_sphere_area(int d)
{
    if (d < 1)
    {
        throw DomainError("unit_sphere_area: dimension must be >= 1");
    }
    double const half_d = 0.5 * d;
    return 2 * std::pow(std::numbers::pi, half_d) / gamma(half_d);
}

double unit_ball_volume(int d)
{
    if (d < 0)
    {
        throw DomainError("unit_ball_volume: dimension must be >= 0");
    }
    double const half_d = 0.5 * d;
    return std::pow(std::numbers::pi, half_d) / gamma(half_d + 1);
}

}  // namespace fraclap
