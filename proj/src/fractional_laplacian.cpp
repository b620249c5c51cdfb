// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fractional_laplacian.cpp
//---------------------------------------------------------------------------//
#include "fraclap/fractional_laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fraclap/errors.hpp"
#include "fraclap/kernel.hpp"

namespace fraclap
{
namespace
{
constexpr double machine_eps = std::numeric_limits<double>::epsilon();

struct TaylorData
{
    double laplacian;
    double laplacian_err;
    double fourth_bound;
};

// Laplacian at x0 and a bound on fourth directional derivatives, from
// metadata when present and finite differences otherwise.
TaylorData taylor_data(BoundaryFunction const& u, std::span<double const> x0, double u0)
{
    std::vector<double> x(x0.begin(), x0.end());
    auto axis_eval = [&](std::size_t k, double offset) {
        double const saved = x[k];
        x[k] = saved + offset;
        double const v = u(x);
        x[k] = saved;
        return v;
    };

    TaylorData data{};
    if (u.fourth_derivative_bound)
    {
        data.fourth_bound = *u.fourth_derivative_bound;
    }
    else
    {
        // Local estimate only; padded by a factor of four.
        double const h = 0.1 * u.feature_scale;
        double worst = 0;
        for (std::size_t k = 0; k < x.size(); ++k)
        {
            double const d4 = (axis_eval(k, 2 * h) - 4 * axis_eval(k, h) + 6 * u0
                               - 4 * axis_eval(k, -h) + axis_eval(k, -2 * h))
                              / std::pow(h, 4);
            worst = std::max(worst, std::fabs(d4));
        }
        data.fourth_bound = 4 * worst;
    }

    if (u.laplacian)
    {
        data.laplacian = u.laplacian(x0);
        data.laplacian_err = 0;
    }
    else
    {
        double const h = 1e-3 * u.feature_scale;
        double sum = 0;
        for (std::size_t k = 0; k < x.size(); ++k)
            sum += (axis_eval(k, h) - 2 * u0 + axis_eval(k, -h)) / (h * h);
        data.laplacian = sum;
        auto const n = static_cast<double>(x.size());
        data.laplacian_err = n * (data.fourth_bound * h * h / 12
                                  + 4 * machine_eps * u.bound / (h * h));
    }
    return data;
}

double scaled_power(double y, double y_ref, double power)
{
    return power == 0 ? 1.0 : std::pow(y / y_ref, power);
}
}  // namespace

//---------------------------------------------------------------------------//
QuadResult frac_laplacian_pv(BoundaryFunction const& u,
                             std::span<double const> x0,
                             FracParams const& p,
                             double tol,
                             QuadOptions const& opts)
{
    check_dimension(x0, p, 3);
    if (!(tol > 0))
        throw DomainError("frac_laplacian_pv: tolerance must be positive");

    int const n = p.n();
    double const s = p.s();
    double const half_a = 0.5 * pv_constant(p);
    double const omega = unit_sphere_area(n);
    double const u0 = u(x0);
    TaylorData const taylor = taylor_data(u, x0, u0);

    // Inner ball: the angular integral of the second difference is
    // -(omega / n) Laplacian r^2 + O(M4 r^4).
    double delta = u.feature_scale / 4;
    if (taylor.fourth_bound > 0)
    {
        double const target = 0.25 * tol * 12 * (4 - 2 * s)
                              / (half_a * omega * taylor.fourth_bound);
        delta = std::min(delta, std::pow(target, 1 / (4 - 2 * s)));
    }
    double const inner_weight = half_a * (omega / n) * std::pow(delta, 2 - 2 * s) / (2 - 2 * s);
    double const inner_value = -inner_weight * taylor.laplacian;
    double const inner_err = half_a * omega * taylor.fourth_bound
                                 * std::pow(delta, 4 - 2 * s) / (12 * (4 - 2 * s))
                             + inner_weight * taylor.laplacian_err;

    // Tail: exact for 2u(x0), bounded for u(x0 + z) and u(x0 - z).
    PowerLawWeight const weight{n, half_a, 2 * s, true};
    double const r_start
        = std::max(8 * delta, euclidean_norm(x0) + u.feature_scale);
    double const radius = truncation_radius(u, x0, weight, tol / 8, r_start);
    TailEstimate const tail = tail_integral(u, x0, radius, weight);
    double const mass = weight.coeff * omega * std::pow(radius, -weight.alpha) / weight.alpha;
    double const tail_value = 2 * (u0 * mass - tail.value);
    double const tail_err = 2 * tail.bound;

    // Annulus
    RadialPanelling panelling;
    panelling.r_min = delta;
    panelling.r_max = radius;
    panelling.inner_scale = 4 * delta;
    panelling.feature_scale = u.feature_scale;
    panelling.resolved_extent = euclidean_norm(x0) + 8 * u.feature_scale;
    panelling.oscillatory = u.oscillatory();
    auto const bp = radial_breakpoints(panelling);
    // Beyond the resolved region only oscillatory data vary on the sphere.
    auto angular_feature = [&panelling](double r) {
        return panelling.oscillatory || r <= panelling.resolved_extent
                   ? panelling.feature_scale
                   : r;
    };

    std::vector<double> plus(x0.size());
    std::vector<double> minus(x0.size());
    auto second_difference = [&](std::span<double const> z) {
        for (std::size_t k = 0; k < z.size(); ++k)
        {
            plus[k] = x0[k] + z[k];
            minus[k] = x0[k] - z[k];
        }
        return 2 * u0 - u(plus) - u(minus);
    };

    std::size_t sphere_evals = 0;
    double const sphere_share = n > 1 ? 1e-2 * tol : 0.0;
    std::vector<double> z(x0.size());
    auto integrand = [&](double r) {
        double const w = std::pow(r, -1 - 2 * s);
        if (n == 1)
        {
            z[0] = r;
            return w * 2 * second_difference(z);
        }
        // Absolute tolerance r^{1+2s} / (1 + r^2) integrates against the
        // weight to at most pi/2.
        double const sphere_tol = (2 / std::numbers::pi) * sphere_share / half_a
                                  * std::pow(r, 1 + 2 * s) / (1 + r * r);
        double const shell = integrate_sphere(
            n,
            [&](std::span<double const> dir) {
                for (int k = 0; k < n; ++k)
                    z[k] = r * dir[k];
                return second_difference(z);
            },
            r,
            angular_feature(r),
            sphere_tol,
            sphere_evals,
            opts);
        return w * shell;
    };
    QuadResult annulus = integrate_adaptive(integrand, bp, 0.25 * tol / half_a, opts);

    double const roundoff = half_a * omega * 4 * u.bound * machine_eps
                            * std::pow(delta, -2 * s) / (2 * s);

    QuadResult result;
    result.value = half_a * annulus.value + inner_value + tail_value;
    result.err_estimate = half_a * annulus.err_estimate + inner_err + tail_err
                          + roundoff + sphere_share;
    result.evaluations = annulus.evaluations + sphere_evals + 4 * x0.size() + 1;
    return result;
}

//---------------------------------------------------------------------------//
double centred_difference_factor(double power)
{
    if (power == 0)
        return 1;
    return (std::pow(1.25, power) - std::pow(0.75, power)) / (0.5 * power);
}

std::vector<double> trace_exponents(double s, std::size_t count)
{
    std::vector<double> out;
    for (int k = 1; out.size() < count; ++k)
    {
        for (double candidate : {2 * k - 2 * s, 2.0 * k})
        {
            bool const duplicate = std::any_of(out.begin(), out.end(), [&](double e) {
                return std::fabs(e - candidate) < 0.05;
            });
            if (!duplicate && candidate > 0.05)
                out.push_back(candidate);
        }
        std::sort(out.begin(), out.end());
    }
    out.resize(count);
    return out;
}

std::vector<double> extrapolation_weights(std::span<double const> heights,
                                          std::span<double const> exponents)
{
    std::size_t const m = heights.size();
    if (m == 0 || exponents.size() + 1 != m)
    {
        throw DomainError("extrapolation_weights: need one exponent fewer than heights");
    }
    double const y_ref = *std::max_element(heights.begin(), heights.end());
    // Solve V^T w = e0 with V_ij = (y_i / y_ref)^{p_j}, p_0 = 0.
    std::vector<std::vector<double>> a(m, std::vector<double>(m + 1));
    for (std::size_t j = 0; j < m; ++j)
    {
        double const power = j == 0 ? 0.0 : exponents[j - 1];
        for (std::size_t i = 0; i < m; ++i)
            a[j][i] = scaled_power(heights[i], y_ref, power);
        a[j][m] = j == 0 ? 1.0 : 0.0;
    }
    for (std::size_t col = 0; col < m; ++col)
    {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < m; ++r)
        {
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col]))
                pivot = r;
        }
        if (a[pivot][col] == 0)
            throw NumericalError("extrapolation_weights: singular system");
        std::swap(a[col], a[pivot]);
        for (std::size_t r = 0; r < m; ++r)
        {
            if (r == col)
                continue;
            double const factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= m; ++c)
                a[r][c] -= factor * a[col][c];
        }
    }
    std::vector<double> w(m);
    for (std::size_t i = 0; i < m; ++i)
        w[i] = a[i][m] / a[i][i];
    return w;
}

//---------------------------------------------------------------------------//
NeumannTraceResult neumann_trace(BoundaryFunction const& u,
                                 std::span<double const> x0,
                                 FracParams const& p,
                                 std::span<double const> heights,
                                 double tol,
                                 QuadOptions const& opts)
{
    check_dimension(x0, p, 3);
    if (!(tol > 0))
        throw DomainError("neumann_trace: tolerance must be positive");
    if (heights.size() < 3)
        throw DomainError("neumann_trace: need at least 3 heights");
    for (std::size_t i = 0; i < heights.size(); ++i)
    {
        if (!(heights[i] > 0))
            throw DomainError("neumann_trace: heights must be positive");
        if (i > 0 && !(heights[i] <= 0.5 * heights[i - 1] * (1 + 1e-12)))
        {
            throw DomainError("neumann_trace: heights must decrease by a ratio "
                              "of at most 1/2");
        }
    }

    double const s = p.s();
    std::size_t const m = heights.size();
    NeumannTraceResult result;
    result.exponents = trace_exponents(s, m - 1);
    auto const weights = extrapolation_weights(heights, result.exponents);
    double const scale = trace_constant(p) / centred_difference_factor(2 * s);

    std::vector<double> raw(m);
    std::vector<double> point_x(x0.begin(), x0.end());
    for (std::size_t i = 0; i < m; ++i)
    {
        double const y = heights[i];
        double const h = y / 4;
        double const y_weight = std::pow(y, 1 - 2 * s);
        double const amplification
            = scale * std::max(std::fabs(weights[i]), 1e-3) * y_weight / h;
        double const tol_u
            = std::max(tol / (static_cast<double>(m) * amplification),
                       1e-14 * std::max(1.0, u.bound));

        auto const upper = extension_quadrature(u, {point_x, y + h}, p, tol_u, opts);
        auto const lower = extension_quadrature(u, {point_x, y - h}, p, tol_u, opts);
        raw[i] = y_weight * (upper.value - lower.value) / (2 * h);
        result.raw_sequence.emplace_back(y, raw[i]);
        result.quadrature_error += scale * std::fabs(weights[i]) * y_weight
                                   * (upper.err_estimate + lower.err_estimate) / (2 * h);
    }

    double limit = 0;
    for (std::size_t i = 0; i < m; ++i)
        limit += weights[i] * raw[i];
    result.value = -scale * limit;

    // Same fit without the largest height, one exponent fewer.
    auto const tail_heights = heights.subspan(1);
    auto const tail_weights
        = extrapolation_weights(tail_heights, trace_exponents(s, m - 2));
    double tail_limit = 0;
    for (std::size_t i = 0; i + 1 < m; ++i)
        tail_limit += tail_weights[i] * raw[i + 1];
    result.extrapolation_residual = scale * std::fabs(limit - tail_limit);

    double const d1 = raw[m - 2] - raw[m - 3];
    double const d2 = raw[m - 1] - raw[m - 2];
    if (d1 != 0 && d2 != 0 && (d1 > 0) == (d2 > 0))
    {
        result.estimated_exponent
            = std::log(d1 / d2) / std::log(heights[m - 3] / heights[m - 2]);
    }
    bool increasing = true;
    bool decreasing = true;
    for (std::size_t i = 1; i < m; ++i)
    {
        increasing = increasing && raw[i] >= raw[i - 1];
        decreasing = decreasing && raw[i] <= raw[i - 1];
    }
    result.monotone = increasing || decreasing;
    return result;
}

//---------------------------------------------------------------------------//
ConsistencyReport consistency_report(BoundaryFunction const& u,
                                     std::span<double const> x0,
                                     FracParams const& p,
                                     ConsistencyConfig const& config)
{
    ConsistencyReport report;
    report.pv = frac_laplacian_pv(u, x0, p, config.pv_tol);
    report.trace = neumann_trace(u, x0, p, config.heights, config.trace_tol);
    if (config.mc_samples > 0)
    {
        ExtensionCrossCheck check;
        check.y = config.heights.front();
        HalfSpacePoint const at{std::vector<double>(x0.begin(), x0.end()), check.y};
        check.quadrature = extension_quadrature(u, at, p, 1e-6);
        check.monte_carlo = mc_extension(u, at, p, config.mc_samples, config.seed);
        report.extension_check = check;
    }
    report.abs_discrepancy = std::fabs(report.pv.value - report.trace.value);
    report.rel_discrepancy
        = report.abs_discrepancy / std::max(1.0, std::fabs(report.pv.value));
    return report;
}

}  // namespace fraclap
