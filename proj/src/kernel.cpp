// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file kernel.cpp
//---------------------------------------------------------------------------//
#include "fraclap/kernel.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fraclap/errors.hpp"

namespace fraclap
{
namespace
{
constexpr int max_quadrature_dim = 3;

void check_height(double y, char const* who)
{
    if (!(y > 0) || !std::isfinite(y))
    {
        throw DomainError(std::string(who) + ": height y must be positive, got "
                          + std::to_string(y));
    }
}

void check_tol(double tol, char const* who)
{
    if (!(tol > 0))
    {
        throw DomainError(std::string(who) + ": tolerance must be positive");
    }
}

// Kernel tail majorant: K_y(r) <= C y^{2s} r^{-(n+2s)}
PowerLawWeight kernel_tail_weight(double y, FracParams const& p)
{
    return {p.n(), kernel_constant(p) * std::pow(y, 2 * p.s()), 2 * p.s(), false};
}
}  // namespace

void check_dimension(std::span<double const> x, FracParams const& p, int max_n)
{
    if (static_cast<int>(x.size()) != p.n())
    {
        throw DomainError("point has " + std::to_string(x.size())
                          + " coordinates but n = " + std::to_string(p.n()));
    }
    if (p.n() > max_n)
    {
        throw DomainError("deterministic quadrature supports n <= "
                          + std::to_string(max_n) + ", got n = "
                          + std::to_string(p.n()));
    }
}

//---------------------------------------------------------------------------//
double poisson_kernel_radial(double r, double y, FracParams const& p)
{
    check_height(y, "poisson_kernel");
    double const a = p.half_n_plus_s();
    double const q = std::fabs(r) / y;
    // K = C y^{-n} (1 + q^2)^{-a}
    if (q < 1e100 && y > 1e-100 && y < 1e100)
    {
        return kernel_constant(p) * std::pow(y, -p.n()) * std::pow(1 + q * q, -a);
    }
    double const log_1pq2
        = q < 1 ? std::log1p(q * q) : 2 * std::log(q) + std::log1p(1 / (q * q));
    double const log_k
        = std::log(kernel_constant(p)) - p.n() * std::log(y) - a * log_1pq2;
    return std::exp(log_k);
}

double poisson_kernel(std::span<double const> offset, double y, FracParams const& p)
{
    if (static_cast<int>(offset.size()) != p.n())
    {
        throw DomainError("poisson_kernel: offset dimension does not match n");
    }
    return poisson_kernel_radial(euclidean_norm(offset), y, p);
}

//---------------------------------------------------------------------------//
QuadResult kernel_mass(double y, FracParams const& p, double tol)
{
    check_height(y, "kernel_mass");
    check_tol(tol, "kernel_mass");
    if (p.n() > max_quadrature_dim)
    {
        throw DomainError("kernel_mass: n <= 3 required");
    }
    double const omega = unit_sphere_area(p.n());

    BoundaryFunction one;
    one.eval = [](std::span<double const>) { return 1.0; };
    one.tail = ConstantTail{1.0};
    std::vector<double> const origin(static_cast<std::size_t>(p.n()), 0.0);
    double const radius = truncation_radius(
        one, origin, kernel_tail_weight(y, p), tol / 2, 4 * y);

    RadialPanelling panelling;
    panelling.r_max = radius;
    panelling.inner_scale = y;
    panelling.feature_scale = y;
    auto const bp = radial_breakpoints(panelling);

    int const n = p.n();
    auto result = integrate_adaptive(
        [&](double r) {
            return omega * poisson_kernel_radial(r, y, p) * std::pow(r, n - 1);
        },
        bp,
        tol / 2);
    result.err_estimate += tail_integral(one, origin, radius, kernel_tail_weight(y, p)).bound;
    return result;
}

//---------------------------------------------------------------------------//
double extension_truncation_radius(BoundaryFunction const& u,
                                   HalfSpacePoint const& at,
                                   FracParams const& p,
                                   double tol)
{
    double const start = std::max(4 * at.y, 1e-300);
    return truncation_radius(u, at.x, kernel_tail_weight(at.y, p), tol / 2, start);
}

QuadResult extension_quadrature(BoundaryFunction const& u,
                                HalfSpacePoint const& at,
                                FracParams const& p,
                                double tol,
                                QuadOptions const& opts)
{
    check_height(at.y, "extension_quadrature");
    check_tol(tol, "extension_quadrature");
    check_dimension(at.x, p, max_quadrature_dim);

    int const n = p.n();
    double const y = at.y;
    double const radius = extension_truncation_radius(u, at, p, tol);
    TailEstimate const tail = tail_integral(u, at.x, radius, kernel_tail_weight(y, p));

    RadialPanelling panelling;
    panelling.r_max = radius;
    panelling.inner_scale = y;
    panelling.feature_scale = u.feature_scale;
    panelling.resolved_extent = euclidean_norm(at.x) + 8 * u.feature_scale;
    panelling.oscillatory = u.oscillatory();
    auto const bp = radial_breakpoints(panelling);
    // Beyond the resolved region only oscillatory data vary on the sphere.
    auto angular_feature = [&panelling](double r) {
        return panelling.oscillatory || r <= panelling.resolved_extent
                   ? panelling.feature_scale
                   : r;
    };

    std::vector<double> point(at.x.size());
    std::size_t sphere_evals = 0;
    // Sphere integrals are weighted by K r^{n-1}, whose integral over r is
    // 1 / |S^{n-1}|; a small share of tol keeps their noise from stalling
    // the outer refinement.
    double const sphere_tol = 1e-2 * tol * unit_sphere_area(n);

    auto integrand = [&](double r) {
        double const k = poisson_kernel_radial(r, y, p);
        if (n == 1)
        {
            point[0] = at.x[0] - r;
            double sum = u(point);
            point[0] = at.x[0] + r;
            sum += u(point);
            return k * sum;
        }
        double const shell = integrate_sphere(
            n,
            [&](std::span<double const> omega) {
                for (int i = 0; i < n; ++i)
                    point[i] = at.x[i] - r * omega[i];
                return u(point);
            },
            r,
            angular_feature(r),
            sphere_tol,
            sphere_evals,
            opts);
        return k * std::pow(r, n - 1) * shell;
    };

    double const sphere_share = n > 1 ? 1e-2 * tol : 0.0;
    QuadResult result = integrate_adaptive(integrand, bp, tol / 2 - sphere_share, opts);
    result.value += tail.value;
    result.err_estimate += tail.bound + sphere_share;
    result.evaluations += sphere_evals;
    return result;
}

QuadResult extension(BoundaryFunction const& u,
                     HalfSpacePoint const& at,
                     FracParams const& p,
                     double tol,
                     QuadOptions const& opts)
{
    if (at.y == 0)
    {
        check_dimension(at.x, p, std::numeric_limits<int>::max());
        return {u(at.x), 0.0, 1};
    }
    return extension_quadrature(u, at, p, tol, opts);
}

}  // namespace fraclap
